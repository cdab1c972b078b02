#pragma once

#include <vector>

#include "lenfill/farey.hpp"

namespace lenfill {

/// One framed unknot: surgery framing -a, Thurston-Bennequin invariant
/// -a + 1, so exactly a - 2 stabilizations split as pos + neg.
struct ChainComponent {
  Int a = 2;
  Int pos = 0;
  Int neg = 0;

  bool stabilized() const { return pos > 0 || neg > 0; }
  bool doubly_stabilized() const { return pos > 0 && neg > 0; }
  Int rotation() const { return pos - neg; }

  friend bool operator==(const ChainComponent& x, const ChainComponent& y) {
    return x.a == y.a && x.pos == y.pos && x.neg == y.neg;
  }
};

/// Linear chain of framed unknots; encodes a tight contact structure on the
/// lens space of its expansion.
struct Chain {
  std::vector<ChainComponent> components;

  std::size_t size() const { return components.size(); }
  std::string str() const;
};

/// Throws unless every component satisfies a >= 2, pos, neg >= 0 and
/// pos + neg = a - 2, and the chain is nonempty.
void validate_chain(const Chain& c);

Chain make_chain(std::vector<ChainComponent> comps);

NegCF chain_cf(const Chain& c);
LensSpace chain_lens(const Chain& c);

/// Chain for neg_cf(p,q) with the given rotation numbers r_i = pos_i - neg_i
/// (requires |r_i| <= a_i - 2 and r_i = a_i mod 2).
Chain chain_from_rotation(Int p, Int q, const std::vector<Int>& rot);

/// All prod(a_i - 1) stabilization assignments on neg_cf(p,q).
std::vector<Chain> enumerate_structures(Int p, Int q);

/// Consistently stabilized: every stabilized component uses the same sign.
bool is_universally_tight(const Chain& c);

/// Closed interval of 1-based component indices.
struct IndexInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  friend bool operator==(const IndexInterval& a, const IndexInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// D, the inconsistent subchains of the nicely stabilized pieces of C - D,
/// the set S of components lying in some inconsistent subchain, and every
/// maximal collection (sets meeting each inconsistent subchain in exactly
/// one index). All indices 1-based.
struct StructureClassification {
  std::vector<std::size_t> doubly_stabilized;
  std::vector<IndexInterval> inconsistent_subchains;
  std::vector<std::size_t> subchain_members;
  std::vector<std::vector<std::size_t>> maximal_collections;
};

StructureClassification classify(const Chain& c);

/// 1 + |D| + ceil(#inconsistent subchains / 2).
Int euler_lower_bound(const Chain& c);

std::vector<Int> rotation_vector(const Chain& c);

/// Minimal path of the chain's lens space with block i carrying pos_i plus
/// signs then neg_i minus signs; first and last edges blank.
DecoratedPath decorated_path(const Chain& c);

}  // namespace lenfill
