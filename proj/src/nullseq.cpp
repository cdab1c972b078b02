#include "lenfill/nullseq.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace lenfill {

std::string NullSequence::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries[i]);
  }
  out += ")";
  return out;
}

NullSequence blowup(const NullSequence& s, std::size_t pos) {
  const std::size_t k = s.size();
  if (pos > k) throw std::out_of_range("blowup position out of range");
  NullSequence out;
  out.entries.reserve(k + 1);
  for (std::size_t i = 0; i < pos; ++i) out.entries.push_back(s.entries[i]);
  if (pos >= 1) out.entries[pos - 1] += 1;
  out.entries.push_back(1);
  for (std::size_t i = pos; i < k; ++i) out.entries.push_back(s.entries[i]);
  if (pos < k) out.entries[pos + 1] += 1;
  return out;
}

namespace {

bool is_zero_seq(const std::vector<Int>& e) { return e.size() == 1 && e[0] == 0; }

bool is_null_search(const std::vector<Int>& e, std::map<std::vector<Int>, bool>& memo) {
  if (is_zero_seq(e)) return true;
  if (e.size() < 2) return false;
  for (Int x : e)
    if (x < 1) return false;
  auto it = memo.find(e);
  if (it != memo.end()) return it->second;
  bool ok = false;
  // Strict blowdown: remove an entry 1 at position j >= 2 (1-based) and
  // decrement its neighbors; (1,1) blows down to (0).
  for (std::size_t j = 1; j < e.size() && !ok; ++j) {
    if (e[j] != 1) continue;
    std::vector<Int> next;
    next.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i == j) continue;
      Int v = e[i];
      if (i + 1 == j || i == j + 1) v -= 1;
      next.push_back(v);
    }
    if (is_zero_seq(next))
      ok = true;
    else {
      bool valid = true;
      for (Int x : next)
        if (x < 1) valid = false;
      if (valid) ok = is_null_search(next, memo);
    }
  }
  memo[e] = ok;
  return ok;
}

std::mutex g_null_memo_mutex;
std::map<std::vector<Int>, bool> g_null_memo;

int max_null_len() {
  if (const char* env = std::getenv("LENFILL_MAX_NULL_LEN")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 14;
}

// Convergent recurrence P_i = n_i P_{i-1} - P_{i-2}, P_0 = 1, P_{-1} = 0.
// A positive-integer sequence is null iff all proper prefixes have P_i > 0
// and P_k = 0 (blowups preserve this and every such sequence admits a strict
// blowdown keeping it; cross-checked against the blowdown search in tests).
bool null_by_convergents(const std::vector<Int>& e) {
  if (is_zero_seq(e)) return true;
  if (e.size() < 2) return false;
  const __int128 cap = static_cast<__int128>(1) << 100;
  __int128 prev = 0, cur = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1) return false;
    if (cur > cap) throw std::overflow_error("convergent overflow");
    __int128 nxt = e[i] * cur - prev;
    prev = cur;
    cur = nxt;
    if (i + 1 < e.size() && cur <= 0) return false;
  }
  return cur == 0;
}

void bounded_dfs(const std::vector<Int>& bound, const std::vector<__int128>& suffix_cap,
                 std::vector<Int>& cur, Int prev, Int p, Int partial_sum,
                 std::vector<NullSequence>& out) {
  const std::size_t m = bound.size();
  const std::size_t i = cur.size();
  if (i == m) {
    if (p == 0) out.push_back(NullSequence(cur));
    return;
  }
  // Blowup sum identity: a length-m null sequence has entry sum <= 3m - 4
  // (m >= 2); remaining entries are >= 1 each.
  const Int max_sum = 3 * static_cast<Int>(m) - 4;
  for (Int n = 1; n <= bound[i]; ++n) {
    __int128 wide = static_cast<__int128>(n) * p - prev;
    bool last = (i + 1 == m);
    if (last) {
      if (wide != 0) continue;
    } else {
      if (wide <= 0) continue;
      if (wide > suffix_cap[i + 1]) continue;
      if (m >= 2 && partial_sum + n + static_cast<Int>(m - i - 1) > max_sum) continue;
    }
    Int nxt = static_cast<Int>(wide);
    cur.push_back(n);
    bounded_dfs(bound, suffix_cap, cur, p, nxt, partial_sum + n, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_null(const NullSequence& s) {
  std::lock_guard<std::mutex> lock(g_null_memo_mutex);
  return is_null_search(s.entries, g_null_memo);
}

bool is_null_fast(const NullSequence& s) { return null_by_convergents(s.entries); }

std::vector<NullSequence> enumerate_null(int m) {
  if (m < 1) throw std::invalid_argument("enumerate_null needs m >= 1");
  if (m > max_null_len())
    throw std::runtime_error("enumerate_null: length " + std::to_string(m) +
                             " exceeds the resource limit");
  std::set<std::vector<Int>> level;
  level.insert({0});
  for (int len = 1; len < m; ++len) {
    std::set<std::vector<Int>> next;
    for (const auto& e : level) {
      NullSequence s{e};
      for (std::size_t pos = 1; pos <= s.size(); ++pos)
        next.insert(blowup(s, pos).entries);
    }
    level = std::move(next);
  }
  std::vector<NullSequence> out;
  out.reserve(level.size());
  for (const auto& e : level) out.push_back(NullSequence(e));
  return out;
}

std::vector<NullSequence> enumerate_null(int m, const NegCF& bound) {
  if (m < 1) throw std::invalid_argument("enumerate_null needs m >= 1");
  if (bound.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("bound length must equal m");
  if (m == 1) {
    std::vector<NullSequence> out;
    if (bound.coeffs[0] >= 0) out.push_back(NullSequence{{0}});
    return out;
  }
  // suffix_cap[i] bounds |P_i| on any prefix completable to 0 within the
  // bounds: going backwards from (P_m, P_{m-1}) = (0, 1) each step scales by
  // at most (b_j + 1).
  std::vector<__int128> suffix_cap(m + 1, 1);
  const __int128 cap_limit = static_cast<__int128>(4) * 1000000000LL * 1000000000LL;
  for (int i = m - 1; i >= 0; --i) {
    __int128 c = suffix_cap[i + 1] * (bound.coeffs[i] + 1);
    suffix_cap[i] = c > cap_limit ? cap_limit : c;
  }
  std::vector<NullSequence> out;
  std::vector<Int> cur;
  cur.reserve(m);
  bounded_dfs(bound.coeffs, suffix_cap, cur, 0, 1, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

AdmissibleSet admissible_set(Int p, Int q) {
  LensSpace lens = lens_space(p, q);
  if (lens.p < 2) throw std::invalid_argument("admissible_set needs p >= 2");
  NegCF dual = riemenschneider_dual(neg_cf(lens.p, lens.q));
  AdmissibleSet out;
  out.lens = lens;
  out.dual = dual;
  out.sequences = enumerate_null(static_cast<int>(dual.size()), dual);
  return out;
}

NullSequence reverse_seq(const NullSequence& s) {
  NullSequence out = s;
  std::reverse(out.entries.begin(), out.entries.end());
  return out;
}

NullSequence fuse(const SeqOrEmpty& n, Int a, const SeqOrEmpty& m) {
  if (a < 2) throw std::invalid_argument("fusion coefficient must be >= 2");
  if (a == 2) {
    if (!n && !m) return NullSequence{{0}};
    if (!n) return *m;
    if (!m) return *n;
    NullSequence out = *n;
    out.entries.back() += m->entries.front();
    out.entries.insert(out.entries.end(), m->entries.begin() + 1, m->entries.end());
    return out;
  }
  NullSequence out;
  if (n) {
    out = *n;
    out.entries.back() += 1;
  } else {
    out.entries.push_back(1);
  }
  for (Int i = 0; i < a - 3; ++i) out.entries.push_back(2);
  if (m) {
    out.entries.push_back(m->entries.front() + 1);
    out.entries.insert(out.entries.end(), m->entries.begin() + 1, m->entries.end());
  } else {
    out.entries.push_back(1);
  }
  return out;
}

std::optional<NullSequence> rational_ball_sequence(Int p, Int q) {
  LensSpace lens = lens_space(p, q);
  if (lens.p < 2) return std::nullopt;
  NegCF dual = riemenschneider_dual(neg_cf(lens.p, lens.q));
  std::optional<NullSequence> found;
  for (std::size_t i = 0; i < dual.size(); ++i) {
    if (dual.coeffs[i] != 2) continue;
    std::vector<Int> cand = dual.coeffs;
    cand[i] = 1;
    if (null_by_convergents(cand)) {
      if (found) throw std::logic_error("rational ball descriptor is not unique");
      found = NullSequence(cand);
    }
  }
  return found;
}

}  // namespace lenfill
