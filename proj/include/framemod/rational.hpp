#pragma once

#include <cstdint>
#include <string>

namespace framemod {

// Exact rational arithmetic for mesh admissibility checks. Values are
// normalized (den > 0, gcd(num, den) = 1); overflow on the small
// magnitudes used for grid geometry is checked and throws.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  // Accepts "3", "-5", "1/2", "0.25", "1.5e0" is NOT supported.
  static Rational parse(const std::string& s);

  double to_double() const;
  bool is_integer() const { return den == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const {
    return num == o.num && den == o.den;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }

  std::string str() const;
};

}  // namespace framemod
