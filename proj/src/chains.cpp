#include "lenfill/chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace lenfill {

std::string Chain::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ",";
    const auto& c = components[i];
    out += std::to_string(c.a);
    if (c.stabilized())
      out += "(" + std::to_string(c.pos) + "+," + std::to_string(c.neg) + "-)";
  }
  out += "]";
  return out;
}

void validate_chain(const Chain& c) {
  if (c.components.empty()) throw std::invalid_argument("chain must be nonempty");
  for (const auto& comp : c.components) {
    if (comp.a < 2) throw std::invalid_argument("chain framing coefficient must be >= 2");
    if (comp.pos < 0 || comp.neg < 0 || comp.pos + comp.neg != comp.a - 2)
      throw std::invalid_argument("component needs pos + neg = a - 2");
  }
}

Chain make_chain(std::vector<ChainComponent> comps) {
  Chain c{std::move(comps)};
  validate_chain(c);
  return c;
}

NegCF chain_cf(const Chain& c) {
  NegCF cf;
  cf.coeffs.reserve(c.size());
  for (const auto& comp : c.components) cf.coeffs.push_back(comp.a);
  return cf;
}

LensSpace chain_lens(const Chain& c) { return lens_of(chain_cf(c)); }

Chain chain_from_rotation(Int p, Int q, const std::vector<Int>& rot) {
  NegCF cf = neg_cf(p, q);
  if (rot.size() != cf.size())
    throw std::invalid_argument("rotation vector length must match the expansion length");
  Chain c;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    Int a = cf.coeffs[i];
    Int r = rot[i];
    if (r < -(a - 2) || r > a - 2 || ((r - a) % 2 != 0))
      throw std::invalid_argument("rotation number " + std::to_string(r) +
                                  " invalid for coefficient " + std::to_string(a));
    ChainComponent comp;
    comp.a = a;
    comp.pos = (a - 2 + r) / 2;
    comp.neg = (a - 2 - r) / 2;
    c.components.push_back(comp);
  }
  validate_chain(c);
  return c;
}

std::vector<Chain> enumerate_structures(Int p, Int q) {
  NegCF cf = neg_cf(p, q);
  std::vector<Chain> out;
  Chain cur;
  cur.components.resize(cf.size());
  for (std::size_t i = 0; i < cf.size(); ++i) cur.components[i].a = cf.coeffs[i];
  // Odometer over pos_i in [0, a_i - 2].
  std::size_t n = cf.size();
  std::vector<Int> pos(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      cur.components[i].pos = pos[i];
      cur.components[i].neg = cf.coeffs[i] - 2 - pos[i];
    }
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n) {
      if (pos[i] < cf.coeffs[i] - 2) {
        ++pos[i];
        break;
      }
      pos[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

bool is_universally_tight(const Chain& c) {
  validate_chain(c);
  bool any_pos = false, any_neg = false;
  for (const auto& comp : c.components) {
    if (comp.pos > 0) any_pos = true;
    if (comp.neg > 0) any_neg = true;
  }
  return !(any_pos && any_neg);
}

namespace {

// Sign of a (nicely stabilized) component: +1, -1 or 0.
int comp_sign(const ChainComponent& c) {
  if (c.pos > 0) return 1;
  if (c.neg > 0) return -1;
  return 0;
}

void collect_collections(const std::vector<IndexInterval>& chains, std::size_t at,
                         std::vector<std::size_t>& picked,
                         std::vector<std::vector<std::size_t>>& out) {
  if (at == chains.size()) {
    std::vector<std::size_t> m = picked;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  const auto& iv = chains[at];
  // Already hit by an earlier pick (overlapping endpoints)?
  for (std::size_t x : picked) {
    if (x >= iv.lo && x <= iv.hi) {
      // Must contain exactly one element of this subchain.
      collect_collections(chains, at + 1, picked, out);
      return;
    }
  }
  for (std::size_t x = iv.lo; x <= iv.hi; ++x) {
    // Picking x must not give a later (or earlier) subchain two elements;
    // earlier ones are already satisfied, so check is done when they come up.
    picked.push_back(x);
    bool clash = false;
    for (std::size_t j = 0; j < at; ++j) {
      std::size_t hits = 0;
      for (std::size_t y : picked)
        if (y >= chains[j].lo && y <= chains[j].hi) ++hits;
      if (hits != 1) clash = true;
    }
    if (!clash) collect_collections(chains, at + 1, picked, out);
    picked.pop_back();
  }
}

}  // namespace

StructureClassification classify(const Chain& c) {
  validate_chain(c);
  StructureClassification sc;
  const std::size_t n = c.size();
  std::vector<bool> in_d(n + 1, false);
  for (std::size_t i = 1; i <= n; ++i)
    if (c.components[i - 1].doubly_stabilized()) {
      sc.doubly_stabilized.push_back(i);
      in_d[i] = true;
    }
  // Runs of C - D are nicely stabilized; inconsistent subchains have
  // oppositely stabilized endpoints and unstabilized interior.
  std::size_t run_start = 1;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    if (i == n + 1 || in_d[i]) {
      if (run_start < i) {
        std::size_t lo = run_start, hi = i - 1;
        for (std::size_t s = lo; s <= hi; ++s) {
          int sgn = comp_sign(c.components[s - 1]);
          if (sgn == 0) continue;
          for (std::size_t e = s + 1; e <= hi; ++e) {
            int sgn2 = comp_sign(c.components[e - 1]);
            if (sgn2 == 0) continue;
            if (sgn2 == -sgn) sc.inconsistent_subchains.push_back({s, e});
            break;  // interior must be unstabilized
          }
        }
      }
      run_start = i + 1;
    }
  }
  std::vector<bool> in_s(n + 1, false);
  for (const auto& iv : sc.inconsistent_subchains)
    for (std::size_t x = iv.lo; x <= iv.hi; ++x) in_s[x] = true;
  for (std::size_t i = 1; i <= n; ++i)
    if (in_s[i]) sc.subchain_members.push_back(i);

  std::vector<std::size_t> picked;
  collect_collections(sc.inconsistent_subchains, 0, picked, sc.maximal_collections);
  std::sort(sc.maximal_collections.begin(), sc.maximal_collections.end());
  sc.maximal_collections.erase(
      std::unique(sc.maximal_collections.begin(), sc.maximal_collections.end()),
      sc.maximal_collections.end());
  return sc;
}

Int euler_lower_bound(const Chain& c) {
  StructureClassification sc = classify(c);
  Int k = static_cast<Int>(sc.doubly_stabilized.size());
  Int l = static_cast<Int>(sc.inconsistent_subchains.size());
  return 1 + k + (l + 1) / 2;
}

std::vector<Int> rotation_vector(const Chain& c) {
  validate_chain(c);
  std::vector<Int> rot;
  rot.reserve(c.size());
  for (const auto& comp : c.components) rot.push_back(comp.rotation());
  return rot;
}

DecoratedPath decorated_path(const Chain& c) {
  validate_chain(c);
  LensSpace l = chain_lens(c);
  FareyPath path = minimal_path(l.p, l.q);
  CFBlockDecomposition dec = block_decomposition(path);
  DecoratedPath dp;
  dp.signs.assign(path.edge_count(), EdgeSign::Blank);
  for (const auto& b : dec.blocks) {
    const auto& comp = c.components[b.coeff_index - 1];
    if (static_cast<Int>(b.decorated_count) != comp.a - 2)
      throw std::logic_error("decorated block length mismatch");
    std::size_t e = b.decorated_first;
    for (Int k = 0; k < comp.pos; ++k) dp.signs[e++] = EdgeSign::Plus;
    for (Int k = 0; k < comp.neg; ++k) dp.signs[e++] = EdgeSign::Minus;
  }
  dp.path = std::move(path);
  return dp;
}

}  // namespace lenfill
