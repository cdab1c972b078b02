#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lenfill/cobordism.hpp"

using namespace lenfill;

namespace {

std::set<std::vector<Int>> pred_set(std::vector<Int> c) {
  std::set<std::vector<Int>> out;
  for (const auto& cf : rolled_up_predecessors(NegCF(std::move(c)))) out.insert(cf.coeffs);
  return out;
}

}  // namespace

TEST_CASE("length obstruction") {
  CHECK(length_obstruction(lens_space(6, 1), lens_space(14, 3)) == Verdict::Open);
  CHECK(length_obstruction(lens_space(14, 3), lens_space(6, 1)) == Verdict::Forbidden);
  CHECK(length_obstruction(lens_space(8, 3), lens_space(8, 3)) == Verdict::Rigid);
  CHECK(length_obstruction(lens_space(1, 0), lens_space(2, 1)) == Verdict::Open);
}

TEST_CASE("rolled up predecessors") {
  auto p53 = pred_set({5, 3});
  CHECK(p53.count({6}) == 1);     // rule 1
  CHECK(p53.count({5}) == 1);     // rule 2
  CHECK(p53.count({3}) == 1);     // rule 2 with the ends swapped
  CHECK(p53.count({}) == 0);
  auto p242 = pred_set({2, 4, 2});
  CHECK(p242.count({4, 2}) == 1);  // rule 3 at the first coefficient, also rule 1
  CHECK(p242.count({2, 4}) == 1);
  CHECK(p242 == std::set<std::vector<Int>>{{4, 2}, {2, 4}});
  auto p6 = pred_set({6});
  CHECK(p6.count({}) == 1);
}

TEST_CASE("rolled up framings bookkeeping") {
  // b_i = 2(i-1) - sum_{j<=i} a_j; a_i = 2 means b_i = b_{i-1}, and each
  // deletion rule leaves the surviving framings unchanged.
  NegCF cf({5, 3, 2, 4});
  auto b = rolled_up_framings(cf);
  CHECK(b == std::vector<Int>{-5, -6, -6, -8});
  for (std::size_t i = 1; i < cf.size(); ++i)
    CHECK((cf.coeffs[i] == 2) == (b[i] == b[i - 1]));
  // Rule 1: the merged chain has the same framing vector minus its head.
  NegCF merged({5 + 3 - 2, 2, 4});
  auto bm = rolled_up_framings(merged);
  CHECK(std::vector<Int>(b.begin() + 1, b.end()) == bm);
}

TEST_CASE("rolled up reachability") {
  auto hit = rolled_up_reachable(NegCF({6}), NegCF({5, 3}), 1);
  REQUIRE(hit.path.has_value());
  CHECK(hit.path->steps.size() == 1);
  CHECK(hit.path->steps[0].move.kind == MoveKind::RolledUp1);
  CHECK(hit.path->steps[0].result == NegCF({5, 3}));

  auto self = rolled_up_reachable(NegCF({3, 2}), NegCF({3, 2}), 0);
  REQUIRE(self.path.has_value());
  CHECK(self.path->steps.empty());

  auto miss = rolled_up_reachable(NegCF({3}), NegCF({2}), 6);
  CHECK_FALSE(miss.path.has_value());

  auto deep = rolled_up_reachable(NegCF({2}), NegCF({2, 3, 2, 3}), 6);
  if (deep.path) {
    NegCF at({2});
    for (const auto& step : deep.path->steps) at = step.result;
    CHECK(at == NegCF({2, 3, 2, 3}));
  }
}

TEST_CASE("every rolled up move respects the length obstruction") {
  // Sources are one move below the target, so l(src) <= l(target).
  for (Int p = 2; p <= 50; ++p)
    for (Int q = 1; q < p; ++q) {
      if (gcd_int(p, q) != 1) continue;
      NegCF cf = neg_cf(p, q);
      for (const NegCF& pred : rolled_up_predecessors(cf)) {
        if (pred.empty()) continue;
        Rational v = cf_value(pred);
        CHECK(length_obstruction(lens_of(pred), lens_of(cf)) != Verdict::Forbidden);
        CHECK(v.num >= 2);
      }
    }
}

TEST_CASE("torus surgeries never shorten the expansion, small chains") {
  for (Int a1 = 2; a1 <= 6; ++a1)
    for (Int a2 = 2; a2 <= 6; ++a2)
      for (Int a3 = 2; a3 <= 6; ++a3) {
        Rational v = cf_value(NegCF({a1, a2, a3}));
        LensSpace l = lens_space(v.num, v.den);
        for (const Chain& c : enumerate_structures(l.p, l.q))
          for (const auto& [comp, slope] : balanced_central_slopes(c, 2)) {
            LensSpace out = torus_plus_one(l, slope);
            CHECK(length_obstruction(l, out) != Verdict::Forbidden);
          }
      }
}

TEST_CASE("torus framed split") {
  Chain c = make_chain({{2, 0, 0}, {4, 1, 1}, {2, 0, 0}});
  auto [l, r] = torus_framed_split(c, 2);
  REQUIRE(l.components.size() == 1);
  REQUIRE(r.components.size() == 1);
  CHECK(l.components[0].a == 2);
  CHECK(r.components[0].a == 2);

  Chain c6 = make_chain({{6, 2, 2}});
  auto [l6, r6] = torus_framed_split(c6, 1);
  CHECK(l6.components.empty());
  CHECK(r6.components.empty());

  Chain cons = make_chain({{4, 2, 0}, {3, 1, 0}});
  CHECK_THROWS_AS(torus_framed_split(cons, 1), std::invalid_argument);
}

TEST_CASE("torus twist calibration") {
  // Virtually overtwisted L(6,1) with rotation 0: central slope -3.
  CHECK(torus_plus_one(lens_space(6, 1), Slope(-3, 1)) == lens_space(3, 2));
  CHECK_THROWS_AS(torus_plus_one(lens_space(6, 1), Slope(0, 1)), std::invalid_argument);

  // Universally tight L(3,2) along the (a,b) = (-5,4) curve, slope -4/5.
  LensSpace out = torus_minus_one(lens_space(3, 2), Slope(-4, 5));
  CHECK(lens_equivalent(out, lens_space(13, 10)));
  CHECK_THROWS_AS(torus_minus_one(lens_space(3, 2), Slope(-2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(torus_minus_one(lens_space(3, 2), Slope(1, 2)), std::invalid_argument);
}

TEST_CASE("the two twist matrices invert each other exactly") {
  // The plus matrix for a curve undoes the minus matrix for the transposed
  // parameter pair, as exact 2x2 identities.
  for (Int a = -6; a <= 6; ++a)
    for (Int b = -6; b <= 6; ++b) {
      if (a == 0 || b == 0 || gcd_int(a, b) != 1) continue;
      TwistMatrix p = twist_plus_matrix(b, a);
      TwistMatrix m = twist_minus_matrix(a, b);
      TwistMatrix prod{};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          prod[i][j] = p[i][0] * m[0][j] + p[i][1] * m[1][j];
      CHECK(prod[0][0] == 1);
      CHECK(prod[0][1] == 0);
      CHECK(prod[1][0] == 0);
      CHECK(prod[1][1] == 1);
      // Determinants are exactly 1.
      CHECK(p[0][0] * p[1][1] - p[0][1] * p[1][0] == 1);
      CHECK(m[0][0] * m[1][1] - m[0][1] * m[1][0] == 1);
    }
}

TEST_CASE("plus twist agrees with a brute-force coordinate oracle") {
  // The transform must send (q, -p) to a primitive vector and fix the curve.
  for (Int a = -5; a <= 5; ++a)
    for (Int b = -5; b <= 5; ++b) {
      if (a == 0 || b == 0 || gcd_int(a, b) != 1) continue;
      TwistMatrix t = twist_plus_matrix(a, b);
      Int ca = t[0][0] * a + t[0][1] * b;
      Int cb = t[1][0] * a + t[1][1] * b;
      CHECK(ca == a);
      CHECK(cb == b);
    }
}

TEST_CASE("balanced central slopes") {
  Chain c6 = make_chain({{6, 2, 2}});
  auto slopes = balanced_central_slopes(c6, 2);
  REQUIRE(slopes.size() == 1);
  CHECK(slopes[0].first == 1);
  CHECK(slopes[0].second == Slope(-3, 1));

  // One +/- pair gives three placements of a length-2 block.
  auto pairs = balanced_central_slopes(c6, 1);
  CHECK(pairs.size() == 3);

  Chain cons = make_chain({{6, 4, 0}});
  CHECK(balanced_central_slopes(cons, 1).empty());
}

TEST_CASE("makenice") {
  Chain c = make_chain({{2, 0, 0}, {4, 1, 1}, {2, 0, 0}});
  MakeNicePath path = makenice(c);
  REQUIRE(path.steps.size() == 1);
  CHECK(path.steps[0].component == 2);
  // Summands L(3,2) # L(3,2), then the merged chain for L(6,5).
  CHECK(chain_lens(path.steps[0].left) == lens_space(3, 2));
  CHECK(chain_lens(path.steps[0].right) == lens_space(3, 2));
  CHECK(chain_lens(path.result) == lens_space(6, 5));
  for (const auto& comp : path.result.components) CHECK_FALSE(comp.doubly_stabilized());

  Chain nice = make_chain({{3, 1, 0}, {3, 0, 1}});
  CHECK(makenice(nice).steps.empty());

  Chain c66 = make_chain({{6, 2, 2}});
  MakeNicePath p66 = makenice(c66);
  CHECK(p66.steps.size() <= 2);
  for (const auto& comp : p66.result.components) CHECK_FALSE(comp.doubly_stabilized());

  // Termination measure: sum of min(pos, neg) drops every step.
  Chain big = make_chain({{5, 2, 1}, {6, 2, 2}, {4, 1, 1}});
  MakeNicePath pb = makenice(big);
  Chain prev = big;
  auto measure = [](const Chain& ch) {
    Int s = 0;
    for (const auto& comp : ch.components) s += std::min(comp.pos, comp.neg);
    return s;
  };
  for (const auto& step : pb.steps) {
    CHECK(measure(step.merged) == measure(prev) - 1);
    prev = step.merged;
  }
  for (const auto& comp : pb.result.components) CHECK_FALSE(comp.doubly_stabilized());
}
