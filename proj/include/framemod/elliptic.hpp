#pragma once

#include "framemod/types.hpp"

namespace framemod {

// Elliptic modulus k in (0,1), carried as the triple (k, k', 1-k).
// 1-k is the authoritative component near k = 1, where the plain value
// rounds to 1.0; k is authoritative near 0, where 1-k rounds to 1.0.
// Factories reject inputs within 1e-300 of the interval ends instead of
// clamping, so a collapsed parameter surfaces as an error at the source.
class EllipticModulus {
 public:
  static EllipticModulus from_k(double k);
  static EllipticModulus from_one_minus_k(double one_minus_k);
  static EllipticModulus from_complement(double kc);

  double k() const { return k_; }
  double complement() const { return kc_; }  // k' = sqrt(1 - k^2)
  double one_minus_k() const { return delta_; }
  EllipticModulus complementary() const;  // the modulus k'

 private:
  EllipticModulus(double k, double kc, double delta)
      : k_(k), kc_(kc), delta_(delta) {}
  double k_, kc_, delta_;
};

// Arithmetic-geometric mean of a >= b >= 0.
double agm(double a, double b);

// Complete elliptic integral of the first kind, K(k) = pi / (2 agm(1, k')).
double ellip_K(const EllipticModulus& m);

// K(k') without forming the complementary modulus explicitly.
double ellip_K_complement(const EllipticModulus& m);

// 2 K(k) / K(k'), the quantity the frame chains invert.
double K_ratio(const EllipticModulus& m);

// mu(r) = (pi/2) K(r') / K(r); strictly decreasing, mu(1/sqrt 2) = pi/2.
double mu(const EllipticModulus& r);

// Inverse of mu: returns r with |mu(r) - y| <= tol.
EllipticModulus mu_inv(double y, double tol = 1e-12);

// Returns k with 2 K(k)/K(k') = t to tolerance. Root-finds in log(1-k)
// for t >= 2 and reduces t < 2 through the duality t(k) t(k') = 4, so
// targets as large as t ~ 400 stay representable (1-k down to ~1e-300).
EllipticModulus solve_K_ratio(double t, double tol = 1e-12);

// sn and 1 - |sn| together; the tail is the only way to resolve 1 - sn
// when k is near 1 and sn saturates (1 - sn far below machine epsilon).
struct SnValue {
  double sn;
  double one_minus_abs;
};

// Jacobi elliptic sine on the principal real branch |u| <= K(k).
SnValue jacobi_sn_with_tail(double u, const EllipticModulus& m);
double jacobi_sn(double u, const EllipticModulus& m);

// Incomplete elliptic integral of the first kind on phi in [0, pi/2],
// by adaptive quadrature; independent of the AGM path, F(pi/2, k) = K(k).
double incomplete_F(double phi, const EllipticModulus& m);

}  // namespace framemod
