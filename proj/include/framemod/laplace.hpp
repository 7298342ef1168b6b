#pragma once

#include <iosfwd>
#include <vector>

#include "framemod/rational.hpp"
#include "framemod/types.hpp"

namespace framemod {

// Rectilinear domains the grid oracle understands. All breakpoint
// coordinates are rational so node alignment can be checked exactly.
enum class DomainKind { RING_FRAME, QUAD_RECT, QUAD_SLIT, QUAD_SLITTED_SQUARE };

struct RectilinearDomain {
  DomainKind kind;
  Rational sigma;   // RING_FRAME
  Rational H;       // RING_FRAME, QUAD_SLIT
  Rational width;   // QUAD_RECT
  Rational height;  // QUAD_RECT
  Rational c;       // QUAD_SLIT, QUAD_SLITTED_SQUARE
  int n = 0;        // QUAD_SLITTED_SQUARE

  // Doubly connected frame: outer [-H,H]x[-1,1], hole [-sH,sH]x[-s,s].
  static RectilinearDomain ring_frame(Rational sigma, Rational H);
  // Plain rectangle [0,w]x[0,h] as a quadrilateral.
  static RectilinearDomain quad_rect(Rational width, Rational height);
  // [0,H]x[0,1] quadrilateral with corners (cH,0),(H,0),(H,1),(0,1):
  // one plate is the right edge, the other the left edge plus the
  // bottom segment [0,cH].
  static RectilinearDomain quad_slit(Rational c, Rational H);
  // Unit square with n-1 horizontal slits [0,c] x {j/n}. Plates: the
  // right edge, against the left edge + slits + bottom and top [0,c]
  // segments; the bottom and top [c,1] segments are insulated.
  static RectilinearDomain quad_slitted_square(Rational c, int n);
};

enum class BoundaryLabel { POTENTIAL_0, POTENTIAL_1, INSULATED };

// Which side pair of a QUAD_RECT carries the plates.
enum class PlatePair { VERTICAL_SIDES, HORIZONTAL_SIDES };

// Axis-aligned run of boundary nodes with one label, in node indices.
struct BoundarySegment {
  int x0, y0, x1, y1;
  BoundaryLabel label;
  double value;  // 0 or 1 for plates, unused for INSULATED
};

// A domain realized on a uniform grid of spacing h. Every domain corner
// and slit endpoint lies exactly on a node (checked in rational
// arithmetic); violations throw GridMismatchError.
struct GridProblem {
  Rational h;
  double solver_tol = 1e-10;
  int ncx = 0, ncy = 0;            // cell counts
  std::vector<uint8_t> cell;       // ncx*ncy, 1 = inside the domain
  std::vector<BoundarySegment> segments;
  std::vector<uint8_t> dir_mask;   // (ncx+1)*(ncy+1) node flags
  std::vector<double> dir_val;

  int nnx() const { return ncx + 1; }
  int nny() const { return ncy + 1; }
};

GridProblem make_grid_problem(const RectilinearDomain& d, Rational h,
                              double solver_tol = 1e-10,
                              PlatePair plates = PlatePair::VERTICAL_SIDES);

// Quarter of the ring frame ([0,H]x[0,1] with the hole quarter removed),
// symmetry axes insulated. Used to check the 4-fold symmetry reduction.
GridProblem quarter_ring_problem(Rational sigma, Rational H, Rational h,
                                 double solver_tol = 1e-10);

struct DiscreteField {
  int nnx = 0, nny = 0;
  double h = 0.0;
  std::vector<double> u;               // node values, row-major, y=0 first
  std::vector<uint8_t> node_in_domain; // node touches at least one domain cell
  double residual = 0.0;               // achieved relative residual
  int iterations = 0;
};

// 5-point finite-difference potential: Dirichlet on plate segments,
// zero normal derivative elsewhere on the boundary. Conjugate-gradient
// solve with a fixed schedule; bit-identical reruns on one platform.
DiscreteField solve_laplace(const GridProblem& p);

// Integral of |grad u|^2, cell by cell, each cell using the average of
// its edge differences; exact for fields affine on every cell.
double dirichlet_energy(const DiscreteField& f, const GridProblem& p);

struct OracleResult {
  double module = 0.0;     // extrapolated when possible, else finest raw
  double energy = 0.0;     // finest-grid energy
  std::vector<std::pair<double, double>> grids_used;  // (h, raw module)
  bool extrapolated = false;
  double est_error = 0.0;  // |finest raw - extrapolated| when extrapolated
  double fitted_order = 0.0;
};

// Module of the ring frame, m = 1/energy of the unit-jump condenser
// (hole boundary at potential 1, outer boundary at 0). h_list must be
// decreasing with successive ratios exactly 2; with three or more
// levels the convergence order is fitted empirically and used for
// Richardson extrapolation. sigma and H rational; H capped at 32.
OracleResult ring_module_numeric(Rational sigma, Rational H,
                                 const std::vector<Rational>& h_list,
                                 double solver_tol = 1e-10);

// Module of a QUAD_* domain: plates on the designated sides, the rest
// insulated, m = 1/energy. Same grid schedule rules as the ring.
OracleResult quad_module_numeric(const RectilinearDomain& d,
                                 const std::vector<Rational>& h_list,
                                 double solver_tol = 1e-10,
                                 PlatePair plates = PlatePair::VERTICAL_SIDES);

// m_fine + (m_fine - m_coarse)/(2^order - 1), for grids differing by 2.
double richardson(double m_coarse, double m_fine, double order);

// Plain-text matrix dump: header "h rows cols", then one line per node
// row (y = 0 first), nan on nodes outside the domain.
void dump_field(const DiscreteField& f, std::ostream& os);

}  // namespace framemod
