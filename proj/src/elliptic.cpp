#include "framemod/elliptic.hpp"

#include <cmath>
#include <vector>

namespace framemod {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
// Factories reject moduli this close to 0 or 1 (in whichever component
// the caller supplied) instead of clamping.
constexpr double kRangeEps = 1e-300;

}  // namespace

EllipticModulus EllipticModulus::from_k(double k) {
  if (!std::isfinite(k) || !(k > kRangeEps) || !(k < 1.0))
    throw DegenerateGeometryError("elliptic modulus k outside (0, 1)");
  double delta = 1.0 - k;
  double kc = std::sqrt(delta * (2.0 - delta));
  return EllipticModulus(k, kc, delta);
}

EllipticModulus EllipticModulus::from_one_minus_k(double one_minus_k) {
  if (!std::isfinite(one_minus_k) || !(one_minus_k > kRangeEps) ||
      !(one_minus_k < 1.0))
    throw DegenerateGeometryError("elliptic modulus 1-k outside (0, 1)");
  double k = 1.0 - one_minus_k;  // rounds to 1.0 when 1-k < eps; advisory
  double kc = std::sqrt(one_minus_k * (2.0 - one_minus_k));
  return EllipticModulus(k, kc, one_minus_k);
}

EllipticModulus EllipticModulus::from_complement(double kc) {
  if (!std::isfinite(kc) || !(kc > kRangeEps) || !(kc < 1.0))
    throw DegenerateGeometryError("complementary modulus outside (0, 1)");
  double k = std::sqrt((1.0 - kc) * (1.0 + kc));
  double delta = kc * kc / (1.0 + k);  // 1 - k without cancellation
  return EllipticModulus(k, kc, delta);
}

EllipticModulus EllipticModulus::complementary() const {
  // 1 - kc: exact subtraction is fine unless kc is near 1, where
  // k^2/(1+kc) recovers the tail from the other stored component.
  double delta_c = (kc_ > 0.5) ? k_ * k_ / (1.0 + kc_) : 1.0 - kc_;
  return EllipticModulus(kc_, k_, delta_c);
}

double agm(double a, double b) {
  if (b == 0.0) return 0.0;
  for (int i = 0; i < 120 && (a - b) > 4e-16 * a; ++i) {
    double am = 0.5 * (a + b);
    double gm = std::sqrt(a * b);
    a = am;
    b = gm;
  }
  return 0.5 * (a + b);
}

double ellip_K(const EllipticModulus& m) {
  return kPi / (2.0 * agm(1.0, m.complement()));
}

double ellip_K_complement(const EllipticModulus& m) {
  // K(k') = pi / (2 agm(1, k)); for k rounded up to 1.0 the relative
  // error is O(1-k), below machine epsilon exactly when rounding bites.
  return kPi / (2.0 * agm(1.0, m.k()));
}

double K_ratio(const EllipticModulus& m) {
  return 2.0 * ellip_K(m) / ellip_K_complement(m);
}

double mu(const EllipticModulus& r) {
  return (kPi / 2.0) * ellip_K_complement(r) / ellip_K(r);
}

EllipticModulus solve_K_ratio(double t, double tol) {
  if (!std::isfinite(t) || !(t > 0.0))
    throw std::domain_error("solve_K_ratio requires t > 0");
  if (t < 2.0) {
    // t(k) t(k') = 4: solve the reflected target on the stable branch.
    return solve_K_ratio(4.0 / t, tol).complementary();
  }
  // Root in s = log(1-k); 2K/K' decreases in s. Bracket ends:
  // s_hi at k = 1/sqrt 2 (t = 2), s_lo at the representability floor.
  const double s_hi = std::log(1.0 - 1.0 / std::sqrt(2.0));
  const double s_lo = std::log(1e-299);
  auto f = [&](double s) {
    return K_ratio(EllipticModulus::from_one_minus_k(std::exp(s))) - t;
  };
  double f_hi = f(s_hi);
  if (std::fabs(f_hi) <= tol)
    return EllipticModulus::from_one_minus_k(1.0 - 1.0 / std::sqrt(2.0));
  if (f(s_lo) < 0.0)
    throw IterationLimitError("solve_K_ratio: target ratio out of range");
  double lo = s_lo, hi = s_hi;   // f(lo) > 0 > f(hi)
  double s0 = std::log(8.0) - kPi * t / 2.0;  // asymptotic seed
  double s = (s0 > lo && s0 < hi) ? s0 : 0.5 * (lo + hi);
  double fs = f(s);
  double s_prev = hi, f_prev = f_hi;
  for (int i = 0; i < 200; ++i) {
    if (std::fabs(fs) <= tol) return EllipticModulus::from_one_minus_k(std::exp(s));
    if (fs > 0.0) lo = s; else hi = s;
    if (hi - lo <= 8e-16 * std::fabs(lo))
      return EllipticModulus::from_one_minus_k(std::exp(0.5 * (lo + hi)));
    double s_next;
    if (fs != f_prev) {
      s_next = s - fs * (s - s_prev) / (fs - f_prev);
      if (!(s_next > lo) || !(s_next < hi)) s_next = 0.5 * (lo + hi);
    } else {
      s_next = 0.5 * (lo + hi);
    }
    s_prev = s;
    f_prev = fs;
    s = s_next;
    fs = f(s);
  }
  throw IterationLimitError("solve_K_ratio: no convergence");
}

EllipticModulus mu_inv(double y, double tol) {
  if (!std::isfinite(y) || !(y > 0.0))
    throw std::domain_error("mu_inv requires y > 0");
  // mu(r) = y  <=>  2 K(r')/K(r) = 4y/pi, which is the K-ratio of r'.
  return solve_K_ratio(4.0 * y / kPi, tol * 4.0 / kPi).complementary();
}

SnValue jacobi_sn_with_tail(double u, const EllipticModulus& m) {
  double K = ellip_K(m);
  double r = u / K;
  if (std::fabs(r) > 1.0 + 1e-9)
    throw std::domain_error("jacobi_sn: |u| exceeds K(k)");
  if (r > 1.0) r = 1.0;
  if (r < -1.0) r = -1.0;
  bool negative = r < 0.0;
  double ra = std::fabs(r);

  // Descending Landen chain; (k, 1-k) pairs kept so the levels where k
  // rounds to 1.0 still carry their tails exactly.
  struct Level {
    double k, delta;
  };
  std::vector<Level> chain;
  double kc = m.complement();
  double k_cur = m.k();
  while (k_cur > 1e-10) {
    double d_next = 2.0 * kc / (1.0 + kc);
    double k_next = (1.0 - kc) / (1.0 + kc);
    chain.push_back({k_next, d_next});
    kc = std::sqrt(d_next * (2.0 - d_next));
    k_cur = k_next;
    if (chain.size() > 64)
      throw IterationLimitError("jacobi_sn: Landen descent stalled");
  }

  // At the bottom k <= 1e-10, so sn = sin to ~1e-20 and K = pi/2.
  double uN = ra * (kPi / 2.0);
  double s = std::sin(uN);
  double sh = std::sin(kPi / 4.0 - uN / 2.0);
  double tau = 2.0 * sh * sh;  // 1 - s, stable for uN near pi/2

  // Ascend: sn_n = (1+k_{n+1}) sn_{n+1} / (1 + k_{n+1} sn_{n+1}^2);
  // the tail update multiplies by (tau + s (1-k_{n+1})) instead of
  // (1 - k_{n+1} s), which cancels when both k and s approach 1.
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    double denom = 1.0 + it->k * s * s;
    double s_next = (1.0 + it->k) * s / denom;
    double tau_next = tau * (tau + s * it->delta) / denom;
    s = s_next;
    tau = tau_next;
  }
  if (s > 1.0) s = 1.0;
  if (tau < 0.0) tau = 0.0;
  return SnValue{negative ? -s : s, tau};
}

double jacobi_sn(double u, const EllipticModulus& m) {
  return jacobi_sn_with_tail(u, m).sn;
}

namespace {

struct SimpsonState {
  double k2_low;  // kc^2, the floor of 1 - k^2 sin^2
  double k;
  int max_depth;
};

double integrand(const SimpsonState& st, double theta) {
  double c = st.k * std::cos(theta);
  return 1.0 / std::sqrt(st.k2_low + c * c);
}

double simpson(double a, double fa, double b, double fb, double fmid) {
  return (b - a) / 6.0 * (fa + 4.0 * fmid + fb);
}

double adaptive(const SimpsonState& st, double a, double fa, double b,
                double fb, double fm, double whole, double tol, int depth) {
  if (depth > st.max_depth)
    throw IterationLimitError("incomplete_F: quadrature did not converge");
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = integrand(st, lm), frm = integrand(st, rm);
  double left = simpson(a, fa, m, flm, fm);
  double right = simpson(m, fm, b, fb, frm);
  if (std::fabs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive(st, a, fa, m, fm, flm, left, 0.5 * tol, depth + 1) +
         adaptive(st, m, fm, b, fb, frm, right, 0.5 * tol, depth + 1);
}

}  // namespace

double incomplete_F(double phi, const EllipticModulus& m) {
  if (!(phi >= 0.0) || !(phi <= kPi / 2.0 + 1e-15))
    throw std::domain_error("incomplete_F requires phi in [0, pi/2]");
  if (phi == 0.0) return 0.0;
  SimpsonState st{m.complement() * m.complement(), m.k(), 52};
  double fa = integrand(st, 0.0);
  double fb = integrand(st, phi);
  double fm = integrand(st, 0.5 * phi);
  double whole = simpson(st, 0.0, fa, phi, fb, fm);
  double tol = std::max(1e-15, 1e-14 * std::fabs(whole));
  return adaptive(st, 0.0, fa, phi, fb, fm, whole, tol, 0);
}

const char* method_name(Method m) {
  switch (m) {
    case Method::EXACT_SIGMA_HALF: return "EXACT_SIGMA_HALF";
    case Method::BOWMAN: return "BOWMAN";
    case Method::LEADING: return "LEADING";
    case Method::LARGE_H: return "LARGE_H";
    case Method::ORACLE: return "ORACLE";
  }
  return "UNKNOWN";
}

}  // namespace framemod
