#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace ncqm {

/// Exact rational arithmetic for the bilinear translation-group exponents.
/// Inputs in the golden tests are small, so int64 intermediates suffice.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    reduce();
  }

  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
  Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace ncqm
