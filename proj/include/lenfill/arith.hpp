#pragma once

#include <vector>

#include "lenfill/rational.hpp"

namespace lenfill {

/// Negative continued fraction [a1,...,an] = a1 - 1/(a2 - 1/(... - 1/an)).
/// Coefficients are stored positive, all >= 2; the chain framing -ai is
/// represented by ai. The empty expansion stands for the empty chain (S^3).
struct NegCF {
  std::vector<Int> coeffs;

  NegCF() = default;
  explicit NegCF(std::vector<Int> c) : coeffs(std::move(c)) {}

  std::size_t size() const { return coeffs.size(); }
  bool empty() const { return coeffs.empty(); }

  friend bool operator==(const NegCF& a, const NegCF& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const NegCF& a, const NegCF& b) { return !(a == b); }
  friend bool operator<(const NegCF& a, const NegCF& b) { return a.coeffs < b.coeffs; }

  std::string str() const;
};

/// L(p,q): p >= 1, 0 < q < p and gcd(p,q) = 1 for p > 1; L(1,0) is S^3.
struct LensSpace {
  Int p = 1;
  Int q = 0;

  friend bool operator==(const LensSpace& a, const LensSpace& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const LensSpace& a, const LensSpace& b) { return !(a == b); }
  friend bool operator<(const LensSpace& a, const LensSpace& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  }

  std::string str() const;
};

LensSpace lens_space(Int p, Int q);

/// The unique all->=2 expansion of p/q, p > q >= 1, gcd(p,q) = 1.
NegCF neg_cf(Int p, Int q);

/// Value of the expansion; the empty expansion evaluates to the infinity
/// marker 1/0.
Rational cf_value(const NegCF& cf);

/// Expansion of p/(p-q) obtained from the point diagram of the expansion of
/// p/q (rows of a_i - 1 dots, each row starting under the last dot of the
/// previous one; column counts give b_i - 1). Involutive.
NegCF riemenschneider_dual(const NegCF& cf);

/// Number of coefficients of neg_cf(p,q).
Int cf_length(Int p, Int q);

/// Lens space of a chain expansion; the empty expansion gives S^3.
LensSpace lens_of(const NegCF& cf);

/// True iff the spaces are orientation-preserving diffeomorphic:
/// equal p and q' = q or q'q = 1 mod p.
bool lens_equivalent(const LensSpace& a, const LensSpace& b);

/// q^2 = 1 mod p; when true, reversed null sequences give diffeomorphic
/// fillings.
bool reversal_symmetric(Int p, Int q);

}  // namespace lenfill
