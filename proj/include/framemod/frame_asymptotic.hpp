#pragma once

#include "framemod/elliptic.hpp"
#include "framemod/types.hpp"

namespace framemod {

// Intermediate values of the large-H chain. one_minus_abs_a carries
// 1 - |a| at full precision when a saturates toward 1 (k near 1).
// Invariant: module = 1 / (4 m_P).
struct LargeHTrace {
  EllipticModulus k;
  double a;
  double one_minus_abs_a;
  EllipticModulus nu;
  double m_P;
  double module;
};

struct LargeHResult {
  ModuleEstimate estimate;
  LargeHTrace trace;
};

// First-order asymptote (1 - sigma) / (4 sigma H); no error bound attached.
ModuleEstimate module_leading(const FrameGeometry& geom);

// nu with (1-nu)/(1+nu) = sqrt((1-a)/(1+ka)) * sqrt((1-k)/2), a in (-1, 1].
// a = 1 collapses nu to 1 and is rejected.
EllipticModulus nu_of(double a, const EllipticModulus& k);

// Semi-analytic large-H estimate:
//   k  solves 2K/K' = ((1-sigma)^2 + sigma)/(1-sigma) * H,
//   a  = sn(((sigma - (1-sigma)^2)/(sigma + (1-sigma)^2)) K(k), k),
//   nu as above, m_P = 2 K(nu)/K(nu'), module = 1/(4 m_P).
// Returned for every H >= 1; asymptotically exact, unquantified error.
LargeHResult module_large_H(const FrameGeometry& geom, double tol = 1e-12);

// Leading asymptote (1 - c) H for the slit quadrilateral of width H.
ModuleEstimate slit_quad_module_asymptotic(double c, double H);

}  // namespace framemod
