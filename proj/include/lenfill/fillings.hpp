#pragma once

#include <optional>
#include <vector>

#include "lenfill/chains.hpp"
#include "lenfill/nullseq.hpp"

namespace lenfill {

/// A minimal filling: descriptor sequence plus cached invariants.
/// b2 = sum(b_i - n_i) - 1 over the dual, euler = b2 + 1, h1_order is the
/// order of the first homology of the handle description.
struct Filling {
  NullSequence seq;
  LensSpace lens;
  Int b2 = 0;
  Int euler = 1;
  Int h1_order = 1;
  bool is_plumbing = false;
  bool is_rational_ball = false;
};

/// Canonical representatives: when q^2 = 1 mod p, each class is represented
/// by the lexicographically smaller of {seq, reverse(seq)}.
struct FillingSet {
  LensSpace lens;
  std::vector<Filling> members;  // sorted by seq

  std::size_t count() const { return members.size(); }
};

/// Populates invariants for an admissible sequence on L(p,q). h1_order comes
/// from Z^m modulo the columns of the tridiagonal linking matrix (diagonal
/// n_i, off-diagonal 1) together with e_i for every slot with b_i - n_i > 0.
Filling invariants(const NullSequence& seq, const LensSpace& lens);

/// Fillings of the universally tight structure: the admissible set with
/// reversal deduplication and invariants.
FillingSet ut_fillings(Int p, Int q);

/// Fillings of an arbitrary chain: union over maximal collections M of the
/// fused images with pivots D union M, deduplicated by reversal at top level
/// iff q^2 = 1 mod p.
FillingSet fillings_of_chain(const Chain& c);

/// Which end of the pivot set the recursion removes first; results agree
/// (fusion associativity), exposed for tests.
enum class PivotOrder { First, Last };
FillingSet fillings_of_chain(const Chain& c, PivotOrder order);

/// The unique filling with b2 = l(p/q): the plumbing sequence
/// (1, 2^{m-2}, 1), or (0) when the dual has length 1.
Filling max_filling(Int p, Int q);

/// Order of pi_1 of a b2 = 1 filling from the slopes r/s, a/b of its two
/// torus knots: gcd(s, b).
Int b2_one_pi1(const Rational& sl1, const Rational& sl2);

/// Slopes (in the order-is-denominator convention of b2_one_pi1) of the
/// 2-handle torus knots of a filling: one slope per unit of b_i - n_i, the
/// slope over slot i being the reciprocal of [n_1,...,n_{i-1}].
std::vector<Rational> torus_knot_slopes(const NullSequence& seq, const LensSpace& lens);

struct SurgeryFamily {
  enum class Kind { Torus, Sporadic, Unknot, None };
  Kind kind = Kind::None;
  Int n = 0;
  Int m = 0;

  std::string str() const;
};

/// Tags L(p,q) when it is surgery on a knot family: TORUS(n,m) for
/// L(nm+1, m^2) with gcd(n,m) = 1 and n,m >= 2; SPORADIC(n) for
/// L(3n^2+3n+1, 3n+1); UNKNOT for L(p,1).
SurgeryFamily surgery_knot_family(Int p, Int q);

}  // namespace lenfill
