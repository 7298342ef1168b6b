#pragma once

#include <utility>

#include "framemod/elliptic.hpp"
#include "framemod/types.hpp"

namespace framemod {

// Intermediate values of the sigma = 1/2 chain, kept for auditing:
// k solves 2K(k)/K(k') = H, kappa = arcsin((1-k)/(1+k)),
// alpha = (pi - 2 kappa)/3, beta = pi - 2 kappa/3, l from the angles,
// module = K(l')/(16 K(l)).
struct HalfChainTrace {
  EllipticModulus k;
  double kappa;
  double alpha;
  double beta;
  EllipticModulus l;
  double module;
};

struct HalfChainResult {
  ModuleEstimate estimate;
  HalfChainTrace trace;
};

// kappa = arcsin((1-k)/(1+k)); strictly decreasing, (0, pi/2).
double kappa_of_k(const EllipticModulus& k);

// alpha = (pi - 2 kappa)/3, beta = pi - 2 kappa/3; accepts [0, pi/2].
std::pair<double, double> angles_of_kappa(double kappa);

// l = (A - B)/(A + B) with A = sqrt(1 - cos(alpha+beta)),
// B = sqrt(2 sin alpha sin beta). alpha = beta collapses l to 0.
EllipticModulus l_of_angles(double alpha, double beta);

// Module of the frame with sigma = 1/2 as a function of the stretch H >= 1.
HalfChainResult module_sigma_half(double H, double tol = 1e-12);

// Closed form for the unstretched frame (H = 1) at any sigma. The two
// variants differ in the constant multiplying (1-sigma)/(1+sigma) inside
// mu_inv; published statements disagree, so both are computed and the
// validation suite arbitrates against the exact chain and the grid oracle.
enum class BowmanVariant { AS_PRINTED, RECIPROCAL };

ModuleEstimate bowman_module(double sigma, BowmanVariant variant);

}  // namespace framemod
