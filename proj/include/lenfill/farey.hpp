#pragma once

#include <utility>
#include <vector>

#include "lenfill/arith.hpp"

namespace lenfill {

using Slope = Rational;

/// Mediant (a+p)/(b+q) of two reduced slopes.
Slope farey_sum(const Slope& a, const Slope& b);

/// True iff the slopes span a Farey edge: |num(a) den(b) - num(b) den(a)| = 1.
bool is_edge(const Slope& a, const Slope& b);

/// Ordered vertex list; consecutive vertices span Farey edges.
struct FareyPath {
  std::vector<Slope> vertices;

  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Minimal counterclockwise path from 0 to -p/q (through the negative
/// slopes). Edge count is 1 + (a1-1) + sum_{i>=2}(ai-2).
FareyPath minimal_path(Int p, Int q);

/// One block per continued fraction coefficient. Edges are indexed along the
/// path; edge e joins vertices e and e+1. Block i owns the run of jumps that
/// decrement the i-th coefficient: a1-1 edges for the first block (a1 for a
/// single-coefficient path), ai-2 for interior blocks, an-1 for the last.
/// Decorated edges exclude the path's first and last edge, leaving ai-2 per
/// block. down_step counts coefficient steps from the previous block with
/// edges; interior framing-2 coefficients own no edges and show up as
/// down_steps > 1 on the next block that does.
struct CFBlock {
  std::size_t coeff_index = 0;  // 1-based coefficient position
  std::size_t first_edge = 0;
  std::size_t edge_count = 0;
  std::size_t decorated_first = 0;
  std::size_t decorated_count = 0;
  std::size_t down_step = 0;  // 0 for the first block
};

struct CFBlockDecomposition {
  NegCF cf;
  std::vector<CFBlock> blocks;
};

/// Decomposes a path produced by minimal_path; rejects anything else.
CFBlockDecomposition block_decomposition(const FareyPath& path);

/// Removes the k-th coefficient (1-based): ([a1..a_{k-1}], [a_{k+1}..an]).
std::pair<NegCF, NegCF> split_at(const NegCF& cf, std::size_t k);

enum class EdgeSign { Blank, Plus, Minus };

/// Minimal path with signed edges; first and last edge stay blank. Two
/// decorations are equivalent iff they put the same number of + signs on
/// each continued fraction block.
struct DecoratedPath {
  FareyPath path;
  std::vector<EdgeSign> signs;
};

}  // namespace lenfill
