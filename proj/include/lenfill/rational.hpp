#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lenfill {

using Int = std::int64_t;

constexpr Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Exact fraction in lowest terms with den >= 0. den == 0 encodes the
/// infinity slope, canonicalized to 1/0 (so -1/0 and 1/0 compare equal).
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n, Int d) : num(n), den(d) { normalize(); }

  static Rational infinity() { return Rational(1, 0); }

  bool is_infinite() const { return den == 0; }

  void normalize() {
    if (den == 0) {
      if (num == 0) throw std::invalid_argument("rational 0/0");
      num = 1;
      return;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = gcd_int(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  // Finite-value order; infinity compares greater than every finite slope.
  friend bool operator<(const Rational& a, const Rational& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    if (is_infinite()) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace lenfill
