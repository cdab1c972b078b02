#pragma once

#include <optional>
#include <vector>

#include "lenfill/arith.hpp"

namespace lenfill {

/// Integer sequence reachable from (0) by strict blowups; the filling
/// descriptor. Entries of a null sequence of length >= 2 are all >= 1.
struct NullSequence {
  std::vector<Int> entries;

  NullSequence() = default;
  explicit NullSequence(std::vector<Int> e) : entries(std::move(e)) {}

  std::size_t size() const { return entries.size(); }

  friend bool operator==(const NullSequence& a, const NullSequence& b) {
    return a.entries == b.entries;
  }
  friend bool operator!=(const NullSequence& a, const NullSequence& b) { return !(a == b); }
  friend bool operator<(const NullSequence& a, const NullSequence& b) {
    return a.entries < b.entries;
  }

  std::string str() const;
};

/// EMPTY marker for the empty chain (S^3) in the fusion calculus.
using SeqOrEmpty = std::optional<NullSequence>;

/// Inserts 1 after position pos (0 <= pos <= k), incrementing the existing
/// neighbor(s): (n_1,...,n_s+1, 1, n_{s+1}+1,...,n_k). Strictness (pos >= 1)
/// is the caller's concern.
NullSequence blowup(const NullSequence& s, std::size_t pos);

/// Exhaustive memoized search over strict blowdown orders back to (0).
bool is_null(const NullSequence& s);

/// Linear-time nullity test via the convergent recurrence
/// P_i = n_i P_{i-1} - P_{i-2}: null iff every proper prefix has P_i > 0 and
/// P_k = 0. Agrees with the blowdown search (tested exhaustively); used by
/// the bounded enumerator where the search would be too slow.
bool is_null_fast(const NullSequence& s);

/// All null sequences of length m, by breadth-first strict blowups from (0)
/// with deduplication. Throws for m above the resource limit (default 14,
/// override with LENFILL_MAX_NULL_LEN).
std::vector<NullSequence> enumerate_null(int m);

/// Null sequences of length m with entries bounded termwise by the given
/// coefficients. Uses convergent-pruned search, usable for long bounds.
std::vector<NullSequence> enumerate_null(int m, const NegCF& bound);

/// Z_{p,q}: null sequences of the dual's length bounded termwise by the dual
/// coefficients.
struct AdmissibleSet {
  LensSpace lens;
  NegCF dual;
  std::vector<NullSequence> sequences;  // sorted
};

AdmissibleSet admissible_set(Int p, Int q);

NullSequence reverse_seq(const NullSequence& s);

/// Fusion F_a(n, m): for a = 2, (n_1,...,n_k + m_1, m_2,...,m_l); for a >= 3,
/// (n_1,...,n_k + 1, 2^{a-3}, m_1 + 1, m_2,...,m_l). EMPTY arguments drop
/// their half: fuse(EMPTY, 2, m) = m, fuse(EMPTY, a>=3, m) = (1, 2^{a-3},
/// m_1+1, ...), symmetrically on the right, and fuse(EMPTY, 2, EMPTY) = (0),
/// fuse(EMPTY, a>=3, EMPTY) = (1, 2^{a-3}, 1).
NullSequence fuse(const SeqOrEmpty& n, Int a, const SeqOrEmpty& m);

/// The unique null sequence with a single entry 1 sitting in a framing-2
/// slot of the dual and agreeing with the dual elsewhere — the rational
/// homology ball descriptor — if one exists.
std::optional<NullSequence> rational_ball_sequence(Int p, Int q);

}  // namespace lenfill
