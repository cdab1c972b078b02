#include "lenfill/arith.hpp"

#include <stdexcept>

namespace lenfill {

std::string NegCF::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs[i]);
  }
  out += "]";
  return out;
}

std::string LensSpace::str() const {
  return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

LensSpace lens_space(Int p, Int q) {
  if (p < 1) throw std::invalid_argument("lens space needs p >= 1");
  if (p == 1) return LensSpace{1, 0};
  if (q <= 0 || q >= p) throw std::invalid_argument("lens space needs 0 < q < p");
  if (gcd_int(p, q) != 1) throw std::invalid_argument("lens space needs gcd(p,q) = 1");
  return LensSpace{p, q};
}

NegCF neg_cf(Int p, Int q) {
  if (q <= 0 || p <= q) throw std::invalid_argument("neg_cf needs p > q >= 1");
  if (gcd_int(p, q) != 1) throw std::invalid_argument("neg_cf needs gcd(p,q) = 1");
  NegCF cf;
  // Ceiling-division steps: p/q = a - q'/q with a = ceil(p/q), q' = a q - p,
  // so every coefficient comes out >= 2 directly.
  while (q > 0) {
    Int a = (p + q - 1) / q;
    cf.coeffs.push_back(a);
    Int next_q = a * q - p;
    p = q;
    q = next_q;
  }
  return cf;
}

Rational cf_value(const NegCF& cf) {
  if (cf.empty()) return Rational::infinity();
  // Evaluate right to left: v -> a - 1/v.
  Int num = cf.coeffs.back();
  Int den = 1;
  for (std::size_t i = cf.size() - 1; i-- > 0;) {
    Int a = cf.coeffs[i];
    Int new_num = a * num - den;
    den = num;
    num = new_num;
  }
  return Rational(num, den);
}

NegCF riemenschneider_dual(const NegCF& cf) {
  if (cf.empty()) throw std::invalid_argument("dual of the empty expansion is undefined");
  for (Int a : cf.coeffs)
    if (a < 2) throw std::invalid_argument("dual needs all coefficients >= 2");
  // Row j has a_j - 1 dots, starting in the column of the last dot of row
  // j-1. Column i collects b_i - 1 dots.
  std::size_t cols = 0;
  for (Int a : cf.coeffs) cols += static_cast<std::size_t>(a - 1);
  cols -= cf.size() - 1;
  std::vector<Int> count(cols, 0);
  std::size_t col = 0;
  for (Int a : cf.coeffs) {
    for (Int d = 0; d < a - 1; ++d) count[col + static_cast<std::size_t>(d)] += 1;
    col += static_cast<std::size_t>(a - 2);
  }
  NegCF dual;
  dual.coeffs.reserve(cols);
  for (Int c : count) dual.coeffs.push_back(c + 1);
  return dual;
}

Int cf_length(Int p, Int q) { return static_cast<Int>(neg_cf(p, q).size()); }

LensSpace lens_of(const NegCF& cf) {
  if (cf.empty()) return LensSpace{1, 0};
  Rational v = cf_value(cf);
  if (v.is_infinite() || v.num <= 0 || v.den <= 0 || v.num <= v.den)
    throw std::invalid_argument("expansion does not describe a lens space: " + cf.str());
  return lens_space(v.num, v.den);
}

bool lens_equivalent(const LensSpace& a, const LensSpace& b) {
  if (a.p != b.p) return false;
  if (a.p == 1) return true;
  if (a.q == b.q) return true;
  return (static_cast<__int128>(a.q) * b.q) % a.p == 1;
}

bool reversal_symmetric(Int p, Int q) {
  LensSpace l = lens_space(p, q);
  if (l.p == 1) return true;
  return (static_cast<__int128>(l.q) * l.q) % l.p == 1;
}

}  // namespace lenfill
