#include "lenfill/cobordism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace lenfill {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Forbidden:
      return "FORBIDDEN";
    case Verdict::Rigid:
      return "RIGID";
    case Verdict::Open:
      return "OPEN";
  }
  return "OPEN";
}

std::string move_kind_str(MoveKind k) {
  switch (k) {
    case MoveKind::Subchain:
      return "SUBCHAIN";
    case MoveKind::RolledUp1:
      return "ROLLED_UP_1";
    case MoveKind::RolledUp2:
      return "ROLLED_UP_2";
    case MoveKind::RolledUp3:
      return "ROLLED_UP_3";
    case MoveKind::TorusFramed:
      return "TORUS_FRAMED";
    case MoveKind::TorusPlusOne:
      return "TORUS_PLUS_ONE";
    case MoveKind::TorusMinusOne:
      return "TORUS_MINUS_ONE";
  }
  return "?";
}

namespace {

Int lens_length(const LensSpace& l) { return l.p == 1 ? 0 : cf_length(l.p, l.q); }

}  // namespace

Verdict length_obstruction(const LensSpace& src, const LensSpace& dst) {
  Int ls = lens_length(src);
  Int ld = lens_length(dst);
  if (ld < ls) return Verdict::Forbidden;
  if (ld == ls) return Verdict::Rigid;
  return Verdict::Open;
}

namespace {

struct PredMove {
  CobordismMove move;
  std::vector<Int> result;
};

std::vector<PredMove> predecessors_with_moves(const std::vector<Int>& c) {
  std::vector<PredMove> out;
  const std::size_t n = c.size();
  if (n == 0) return out;
  auto push = [&out](MoveKind kind, std::size_t index, bool reversed, std::vector<Int> r) {
    out.push_back({CobordismMove{kind, index, reversed, Slope(0, 1)}, std::move(r)});
  };
  if (n >= 2) {
    // (1) drop a1, absorb into a2.
    std::vector<Int> r(c.begin() + 1, c.end());
    r[0] = c[0] + c[1] - 2;
    push(MoveKind::RolledUp1, 1, false, std::move(r));
    // (1), ends swapped: drop an, absorb into a_{n-1}.
    std::vector<Int> s(c.begin(), c.end() - 1);
    s.back() = c[n - 2] + c[n - 1] - 2;
    push(MoveKind::RolledUp1, n, true, std::move(s));
  }
  // (2) drop an / drop a1.
  push(MoveKind::RolledUp2, n, false, std::vector<Int>(c.begin(), c.end() - 1));
  if (n >= 2) push(MoveKind::RolledUp2, 1, true, std::vector<Int>(c.begin() + 1, c.end()));
  // (3) drop any framing-2 coefficient.
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] != 2) continue;
    std::vector<Int> r;
    r.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) r.push_back(c[j]);
    push(MoveKind::RolledUp3, i + 1, false, std::move(r));
  }
  return out;
}

}  // namespace

std::vector<NegCF> rolled_up_predecessors(const NegCF& cf) {
  if (cf.empty()) throw std::invalid_argument("rolled_up_predecessors needs a nonempty expansion");
  std::set<std::vector<Int>> seen;
  for (auto& pm : predecessors_with_moves(cf.coeffs)) seen.insert(pm.result);
  std::vector<NegCF> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.push_back(NegCF(v));
  return out;
}

std::vector<Int> rolled_up_framings(const NegCF& cf) {
  std::vector<Int> b;
  Int sum = 0;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    sum += cf.coeffs[i];
    b.push_back(2 * static_cast<Int>(i) - sum);
  }
  return b;
}

RolledUpSearch rolled_up_reachable(const NegCF& src, const NegCF& dst, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  RolledUpSearch res;
  if (src == dst) {
    res.path = RolledUpPath{src, {}};
    return res;
  }
  // Breadth-first over iterated predecessors of dst; each edge remembers the
  // move that climbs back up toward dst.
  std::map<std::vector<Int>, std::pair<std::vector<Int>, CobordismMove>> parent;
  std::deque<std::pair<std::vector<Int>, int>> frontier;
  frontier.push_back({dst.coeffs, 0});
  parent[dst.coeffs] = {dst.coeffs, CobordismMove{}};
  bool truncated = false;
  while (!frontier.empty()) {
    auto [cur, d] = frontier.front();
    frontier.pop_front();
    if (d == depth) {
      truncated = true;
      continue;
    }
    for (auto& pm : predecessors_with_moves(cur)) {
      if (parent.count(pm.result)) continue;
      parent[pm.result] = {cur, pm.move};
      if (pm.result == src.coeffs) {
        RolledUpPath path;
        path.start = src;
        std::vector<Int> at = src.coeffs;
        while (at != dst.coeffs) {
          auto& [up, move] = parent[at];
          path.steps.push_back({move, NegCF(up)});
          at = up;
        }
        res.path = std::move(path);
        return res;
      }
      frontier.push_back({pm.result, d + 1});
    }
  }
  res.depth_exhausted = truncated;
  return res;
}

std::pair<Chain, Chain> torus_framed_split(const Chain& c, std::size_t i) {
  validate_chain(c);
  if (i < 1 || i > c.size()) throw std::out_of_range("component index out of range");
  const auto& comp = c.components[i - 1];
  if (!comp.doubly_stabilized())
    throw std::invalid_argument("component must be stabilized both positively and negatively");
  Chain left, right;
  left.components.assign(c.components.begin(), c.components.begin() + (i - 1));
  right.components.assign(c.components.begin() + i, c.components.end());
  return {left, right};
}

TwistMatrix twist_plus_matrix(Int a, Int b) {
  return {{{1 - a * b, a * a}, {-b * b, 1 + a * b}}};
}

TwistMatrix twist_minus_matrix(Int a, Int b) {
  return {{{1 + a * b, -b * b}, {a * a, 1 - a * b}}};
}

namespace {

LensSpace lens_from_meridian(Int c, Int d) {
  // Lower meridian d/c with upper meridian 0; d/c = -p'/q' gives L(p', q').
  if (d == 0) throw std::domain_error("transform does not yield a lens space");
  Int p = d < 0 ? -d : d;
  if (p == 1) return lens_space(1, 0);
  Int q = d < 0 ? c : -c;
  q %= p;
  if (q < 0) q += p;
  if (q == 0) throw std::domain_error("transform does not yield a lens space");
  return lens_space(p, q);
}

std::pair<Int, Int> apply_twist(const TwistMatrix& m, const LensSpace& lens) {
  Int x = lens.q, y = -lens.p;
  return {m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y};
}

}  // namespace

LensSpace torus_plus_one(const LensSpace& lens, const Slope& slope) {
  if (slope.is_infinite() || slope.num == 0 || slope.den == 0)
    throw std::invalid_argument("curve must be incompressible: slope b/a with ab != 0");
  Int a = slope.den, b = slope.num;
  auto [c, d] = apply_twist(twist_plus_matrix(a, b), lens);
  return lens_from_meridian(c, d);
}

LensSpace torus_minus_one(const LensSpace& lens, const Slope& slope) {
  if (slope.is_infinite() || !(Slope(-lens.p, lens.q) < slope && slope < Slope(0, 1)))
    throw std::invalid_argument("slope must lie in (-p/q, 0)");
  Int a = slope.den, b = slope.num;
  auto [c, d] = apply_twist(twist_minus_matrix(a, b), lens);
  return lens_from_meridian(c, d);
}

std::vector<std::pair<std::size_t, Slope>> balanced_central_slopes(const Chain& c, Int k) {
  validate_chain(c);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  LensSpace l = chain_lens(c);
  FareyPath path = minimal_path(l.p, l.q);
  CFBlockDecomposition dec = block_decomposition(path);
  std::vector<std::pair<std::size_t, Slope>> out;
  for (const auto& b : dec.blocks) {
    const auto& comp = c.components[b.coeff_index - 1];
    if (comp.pos < k || comp.neg < k) continue;
    if (b.decorated_count < static_cast<std::size_t>(2 * k)) continue;
    for (std::size_t t = 0; t + 2 * k <= b.decorated_count; ++t) {
      std::size_t central_vertex = b.decorated_first + t + static_cast<std::size_t>(k);
      Slope s = path.vertices[central_vertex];
      if (std::find(out.begin(), out.end(), std::make_pair(b.coeff_index, s)) == out.end())
        out.push_back({b.coeff_index, s});
    }
  }
  return out;
}

MakeNicePath makenice(const Chain& c) {
  validate_chain(c);
  MakeNicePath path;
  path.start = c;
  Chain cur = c;
  while (true) {
    std::size_t pivot = 0;
    for (std::size_t i = 1; i <= cur.size(); ++i)
      if (cur.components[i - 1].doubly_stabilized()) {
        pivot = i;
        break;
      }
    if (pivot == 0) break;
    const ChainComponent& comp = cur.components[pivot - 1];
    ChainComponent unknot{2, 0, 0};
    ChainComponent destab{comp.a - 2, comp.pos - 1, comp.neg - 1};
    MakeNiceStep step;
    step.component = pivot;
    step.left.components.assign(cur.components.begin(), cur.components.begin() + (pivot - 1));
    step.left.components.push_back(unknot);
    step.right.components.push_back(destab);
    step.right.components.insert(step.right.components.end(),
                                 cur.components.begin() + pivot, cur.components.end());
    step.merged.components.assign(cur.components.begin(), cur.components.begin() + (pivot - 1));
    step.merged.components.push_back(unknot);
    step.merged.components.push_back(unknot);
    step.merged.components.push_back(destab);
    step.merged.components.insert(step.merged.components.end(),
                                  cur.components.begin() + pivot, cur.components.end());
    validate_chain(step.merged);
    cur = step.merged;
    path.steps.push_back(std::move(step));
  }
  path.result = cur;
  return path;
}

}  // namespace lenfill
