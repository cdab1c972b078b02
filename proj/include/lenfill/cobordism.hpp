#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lenfill/chains.hpp"

namespace lenfill {

enum class Verdict { Forbidden, Rigid, Open };

std::string verdict_str(Verdict v);

/// Length obstruction: FORBIDDEN if l(dst) < l(src); RIGID (any cobordism is
/// an h-cobordism, forcing equivalent spaces and equal structure) if the
/// lengths agree; OPEN otherwise.
Verdict length_obstruction(const LensSpace& src, const LensSpace& dst);

enum class MoveKind {
  Subchain,
  RolledUp1,  // drop the first coefficient, absorb it into the second
  RolledUp2,  // drop the last coefficient
  RolledUp3,  // drop a framing-2 coefficient
  TorusFramed,
  TorusPlusOne,
  TorusMinusOne,
};

std::string move_kind_str(MoveKind k);

struct CobordismMove {
  MoveKind kind = MoveKind::Subchain;
  std::size_t index = 0;    // 1-based coefficient/component, where applicable
  bool reversed = false;    // rolled-up rules with the roles of the ends swapped
  Slope slope{0, 1};        // torus moves
};

/// All expansions one rolled-up deletion below the given one: rules
/// (1) remove a1 and turn a2 into a1 + a2 - 2, (2) remove an, (3) remove any
/// framing-2 coefficient, plus the end-swapped variants of (1) and (2).
/// The empty result stands for S^3.
std::vector<NegCF> rolled_up_predecessors(const NegCF& cf);

/// Framings of the rolled-up (handle-slid) presentation:
/// b_i = 2(i-1) - sum_{j<=i} a_j.
std::vector<Int> rolled_up_framings(const NegCF& cf);

struct RolledUpStep {
  CobordismMove move;
  NegCF result;
};

struct RolledUpPath {
  NegCF start;
  std::vector<RolledUpStep> steps;
};

struct RolledUpSearch {
  std::optional<RolledUpPath> path;
  bool depth_exhausted = false;
};

/// Shortest move sequence from src up to dst within the given depth
/// (breadth-first over predecessors of dst).
RolledUpSearch rolled_up_reachable(const NegCF& src, const NegCF& dst, int depth);

/// Splits a chain at a doubly stabilized component, consuming one +/- pair;
/// returns the two subchains left of and right of the removed component.
std::pair<Chain, Chain> torus_framed_split(const Chain& c, std::size_t i);

using TwistMatrix = std::array<std::array<Int, 2>, 2>;

/// [[1-ab, a^2], [-b^2, 1+ab]] for the curve (a,b); acts on (q, -p).
TwistMatrix twist_plus_matrix(Int a, Int b);
/// [[1+ab, -b^2], [a^2, 1-ab]] for the curve (a,b).
TwistMatrix twist_minus_matrix(Int a, Int b);

/// Surgery with framing one above the torus framing along a curve of the
/// given slope (curve (a,b) with slope b/a, ab != 0). Needs a balanced
/// length-4 block in the chain with this central slope; the slope-level
/// transform is exposed directly, the chain-level search separately.
LensSpace torus_plus_one(const LensSpace& lens, const Slope& slope);

/// Surgery with framing one below the torus framing; requires
/// -p/q < slope < 0.
LensSpace torus_minus_one(const LensSpace& lens, const Slope& slope);

/// Central slopes of balanced length-2k blocks available in the chain:
/// component i qualifies when pos_i >= k and neg_i >= k; each window of 2k
/// decorated edges of its block yields the vertex at its middle.
std::vector<std::pair<std::size_t, Slope>> balanced_central_slopes(const Chain& c, Int k);

struct MakeNiceStep {
  std::size_t component = 0;  // the doubly stabilized component replaced
  Chain left;                 // summand {L_1,...,L_{i-1}, U}
  Chain right;                // summand {L_i', L_{i+1},...,L_n}
  Chain merged;               // {L_1,...,L_{i-1}, U, U, L_i', ...}
};

struct MakeNicePath {
  Chain start;
  std::vector<MakeNiceStep> steps;
  Chain result;
};

/// Iteratively trades each doubly stabilized component i for
/// {..., U, U, L_i', ...} with U an unstabilized framing-2 unknot and L_i'
/// the component destabilized once each way; two handle attachments per
/// step. sum_i min(pos_i, neg_i) strictly decreases, so this terminates in
/// a nicely stabilized chain.
MakeNicePath makenice(const Chain& c);

}  // namespace lenfill
