#include "lenfill/fillings.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace lenfill {

namespace {

bool is_plumbing_seq(const NullSequence& s) {
  const std::size_t m = s.size();
  if (m == 1) return s.entries[0] == 0;
  if (s.entries.front() != 1 || s.entries.back() != 1) return false;
  for (std::size_t i = 1; i + 1 < m; ++i)
    if (s.entries[i] != 2) return false;
  return true;
}

// h1 of the handle description: mu_{i+1} = -mu_{i-1} - n_i mu_i expresses
// every generator as c_i mu_1; marked slots (b_i > n_i) and the last linking
// relation then cut mu_1 down to Z/g. Coefficients c_i are prefix convergent
// numerators of the sequence, so they stay below p once the running gcd is
// folded in.
Int h1_order_fast(const NullSequence& seq, const NegCF& dual) {
  const std::size_t m = seq.size();
  std::vector<bool> marked(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (seq.entries[i] > dual.coeffs[i])
      throw std::invalid_argument("sequence exceeds the dual bound");
    marked[i] = dual.coeffs[i] > seq.entries[i];
  }
  auto fold = [](Int g, Int v) { return gcd_int(g, v); };
  Int g = 0;
  Int c_prev = 0;  // coefficient of mu_0 (absent)
  Int c = 1;       // mu_1
  if (marked[0]) g = fold(g, c);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (c > (Int{1} << 50) || c < -(Int{1} << 50))
      throw std::overflow_error("h1 coefficient overflow");
    Int c_next = -c_prev - seq.entries[i] * c;
    if (g > 0) c_next %= g;
    if (marked[i + 1]) g = fold(g, c_next);
    c_prev = c;
    c = c_next;
  }
  Int residual = (m == 1) ? seq.entries[0] * c : c_prev + seq.entries[m - 1] * c;
  g = fold(g, residual);
  if (g == 0) throw std::domain_error("infinite first homology");
  return g;
}

std::mutex g_adm_mutex;
std::map<std::vector<Int>, std::shared_ptr<const std::vector<NullSequence>>> g_adm_memo;

// Raw admissible sequences of the lens space of a (possibly empty) chain
// expansion; memoized across calls.
std::shared_ptr<const std::vector<NullSequence>> leaf_sequences(const NegCF& cf) {
  {
    std::lock_guard<std::mutex> lock(g_adm_mutex);
    auto it = g_adm_memo.find(cf.coeffs);
    if (it != g_adm_memo.end()) return it->second;
  }
  NegCF dual = riemenschneider_dual(cf);
  auto seqs = std::make_shared<std::vector<NullSequence>>(
      enumerate_null(static_cast<int>(dual.size()), dual));
  std::lock_guard<std::mutex> lock(g_adm_mutex);
  g_adm_memo.emplace(cf.coeffs, seqs);
  return seqs;
}

bool consistently_stabilized(const Chain& c, std::size_t lo, std::size_t hi) {
  bool any_pos = false, any_neg = false;
  for (std::size_t i = lo; i <= hi; ++i) {
    if (c.components[i - 1].pos > 0) any_pos = true;
    if (c.components[i - 1].neg > 0) any_neg = true;
  }
  return !(any_pos && any_neg);
}

// Image of the gluing over the subchain [lo, hi] with the given pivot set.
// Leaves are consistently stabilized subchains contributing their raw
// admissible sets; EMPTY stands for the empty chain.
std::vector<SeqOrEmpty> fuse_images(const Chain& c, std::size_t lo, std::size_t hi,
                                    const std::vector<std::size_t>& pivots, PivotOrder order) {
  if (lo > hi) return {SeqOrEmpty{}};
  std::size_t pivot = 0;
  bool found = false;
  if (order == PivotOrder::First) {
    for (std::size_t r : pivots)
      if (r >= lo && r <= hi) {
        pivot = r;
        found = true;
        break;
      }
  } else {
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it)
      if (*it >= lo && *it <= hi) {
        pivot = *it;
        found = true;
        break;
      }
  }
  if (!found) {
    if (!consistently_stabilized(c, lo, hi))
      throw std::logic_error("recursion leaf is not consistently stabilized");
    NegCF cf;
    for (std::size_t i = lo; i <= hi; ++i) cf.coeffs.push_back(c.components[i - 1].a);
    auto seqs = leaf_sequences(cf);
    std::vector<SeqOrEmpty> out;
    out.reserve(seqs->size());
    for (const auto& s : *seqs) out.emplace_back(s);
    return out;
  }
  auto left = fuse_images(c, lo, pivot - 1, pivots, order);
  auto right = fuse_images(c, pivot + 1, hi, pivots, order);
  std::set<NullSequence> merged;
  Int a = c.components[pivot - 1].a;
  for (const auto& x : left)
    for (const auto& y : right) merged.insert(fuse(x, a, y));
  std::vector<SeqOrEmpty> out;
  out.reserve(merged.size());
  for (const auto& s : merged) out.emplace_back(s);
  return out;
}

FillingSet assemble(const LensSpace& lens, std::set<NullSequence> raw) {
  bool dedup = reversal_symmetric(lens.p, lens.q);
  std::set<NullSequence> reps;
  for (const auto& s : raw) {
    if (dedup) {
      NullSequence r = reverse_seq(s);
      reps.insert(std::min(s, r));
    } else {
      reps.insert(s);
    }
  }
  FillingSet fs;
  fs.lens = lens;
  for (const auto& s : reps) fs.members.push_back(invariants(s, lens));
  return fs;
}

}  // namespace

Filling invariants(const NullSequence& seq, const LensSpace& lens) {
  if (lens.p < 2) throw std::invalid_argument("invariants need p >= 2");
  NegCF dual = riemenschneider_dual(neg_cf(lens.p, lens.q));
  if (seq.size() != dual.size()) throw std::invalid_argument("sequence length mismatch");
  Filling f;
  f.seq = seq;
  f.lens = lens;
  Int handles = 0;
  for (std::size_t i = 0; i < dual.size(); ++i) {
    if (seq.entries[i] > dual.coeffs[i])
      throw std::invalid_argument("sequence exceeds the dual bound");
    handles += dual.coeffs[i] - seq.entries[i];
  }
  f.b2 = handles - 1;
  f.euler = f.b2 + 1;
  f.h1_order = h1_order_fast(seq, dual);
  f.is_plumbing = is_plumbing_seq(seq);
  f.is_rational_ball = (f.b2 == 0);
  return f;
}

FillingSet ut_fillings(Int p, Int q) {
  AdmissibleSet adm = admissible_set(p, q);
  std::set<NullSequence> raw(adm.sequences.begin(), adm.sequences.end());
  return assemble(adm.lens, std::move(raw));
}

FillingSet fillings_of_chain(const Chain& c) { return fillings_of_chain(c, PivotOrder::First); }

FillingSet fillings_of_chain(const Chain& c, PivotOrder order) {
  validate_chain(c);
  LensSpace lens = chain_lens(c);
  if (lens.p < 2) throw std::invalid_argument("chain does not describe a lens space with p >= 2");
  StructureClassification sc = classify(c);
  std::set<NullSequence> raw;
  for (const auto& m : sc.maximal_collections) {
    std::vector<std::size_t> pivots = sc.doubly_stabilized;
    pivots.insert(pivots.end(), m.begin(), m.end());
    std::sort(pivots.begin(), pivots.end());
    auto images = fuse_images(c, 1, c.size(), pivots, order);
    for (const auto& s : images) {
      if (!s) throw std::logic_error("top-level image cannot be empty");
      raw.insert(*s);
    }
  }
  return assemble(lens, std::move(raw));
}

Filling max_filling(Int p, Int q) {
  LensSpace lens = lens_space(p, q);
  NegCF dual = riemenschneider_dual(neg_cf(lens.p, lens.q));
  NullSequence plumbing;
  if (dual.size() == 1) {
    plumbing.entries = {0};
  } else {
    plumbing.entries.assign(dual.size(), 2);
    plumbing.entries.front() = 1;
    plumbing.entries.back() = 1;
  }
  return invariants(plumbing, lens);
}

Int b2_one_pi1(const Rational& sl1, const Rational& sl2) { return gcd_int(sl1.den, sl2.den); }

std::vector<Rational> torus_knot_slopes(const NullSequence& seq, const LensSpace& lens) {
  NegCF dual = riemenschneider_dual(neg_cf(lens.p, lens.q));
  if (seq.size() != dual.size()) throw std::invalid_argument("sequence length mismatch");
  std::vector<Rational> out;
  NegCF prefix;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Int mult = dual.coeffs[i] - seq.entries[i];
    if (mult < 0) throw std::invalid_argument("sequence exceeds the dual bound");
    if (mult > 0) {
      Rational v = cf_value(prefix);  // infinity for the empty prefix
      Rational slope(v.den, v.num);   // reciprocal: order = denominator
      for (Int k = 0; k < mult; ++k) out.push_back(slope);
    }
    prefix.coeffs.push_back(seq.entries[i]);
  }
  return out;
}

std::string SurgeryFamily::str() const {
  switch (kind) {
    case Kind::Torus:
      return "TORUS(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case Kind::Sporadic:
      return "SPORADIC(" + std::to_string(n) + ")";
    case Kind::Unknot:
      return "UNKNOT";
    case Kind::None:
      return "none";
  }
  return "none";
}

SurgeryFamily surgery_knot_family(Int p, Int q) {
  LensSpace lens = lens_space(p, q);
  if (lens.p > 1) {
    for (Int m = 2; m <= lens.p - 1; ++m) {
      if ((lens.p - 1) % m != 0) continue;
      Int n = (lens.p - 1) / m;
      if (n < 2 || gcd_int(n, m) != 1) continue;
      Int qq = (m * m) % lens.p;
      if (qq != 0 && lens_equivalent(lens, lens_space(lens.p, qq)))
        return SurgeryFamily{SurgeryFamily::Kind::Torus, n, m};
    }
    for (Int n = 1; 3 * n * n + 3 * n + 1 <= lens.p; ++n) {
      if (3 * n * n + 3 * n + 1 != lens.p) continue;
      Int qq = (3 * n + 1) % lens.p;
      if (lens_equivalent(lens, lens_space(lens.p, qq)))
        return SurgeryFamily{SurgeryFamily::Kind::Sporadic, n, 0};
    }
    if (lens.q == 1 || lens_equivalent(lens, lens_space(lens.p, 1)))
      return SurgeryFamily{SurgeryFamily::Kind::Unknot, 0, 0};
  }
  return SurgeryFamily{};
}

}  // namespace lenfill
