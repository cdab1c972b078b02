#include "lenfill/farey.hpp"

#include <algorithm>
#include <stdexcept>

namespace lenfill {

Slope farey_sum(const Slope& a, const Slope& b) {
  return Slope(a.num + b.num, a.den + b.den);
}

bool is_edge(const Slope& a, const Slope& b) {
  __int128 det = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
  return det == 1 || det == -1;
}

FareyPath minimal_path(Int p, Int q) {
  NegCF cf = neg_cf(p, q);
  // Walk clockwise from -p/q to 0: each jump decrements the last working
  // coefficient, and [..., a, 1] collapses to [..., a-1] (same vertex).
  // Reversing the walk gives the counterclockwise minimal path from 0.
  std::vector<Int> w = cf.coeffs;
  std::vector<Slope> verts;
  auto value = [](const std::vector<Int>& c) {
    Rational v = cf_value(NegCF(c));
    return Slope(-v.num, v.den);
  };
  verts.push_back(value(w));
  while (!(w.size() == 1 && w[0] == 0)) {
    w.back() -= 1;
    while (w.size() > 1 && w.back() == 1) {
      w.pop_back();
      w.back() -= 1;
    }
    verts.push_back(value(w));
  }
  std::reverse(verts.begin(), verts.end());
  FareyPath path;
  path.vertices = std::move(verts);
  return path;
}

CFBlockDecomposition block_decomposition(const FareyPath& path) {
  if (path.vertices.size() < 2 || path.vertices.front() != Slope(0, 1))
    throw std::invalid_argument("not a minimal path from 0");
  Slope last = path.vertices.back();
  if (last.is_infinite() || last.num >= 0)
    throw std::invalid_argument("not a minimal path to a negative slope");
  NegCF cf = neg_cf(-last.num, last.den);
  FareyPath expect = minimal_path(-last.num, last.den);
  if (expect.vertices != path.vertices)
    throw std::invalid_argument("not a minimal path produced by minimal_path");

  const std::size_t n = cf.size();
  const std::size_t total = path.edge_count();
  CFBlockDecomposition dec;
  dec.cf = cf;
  std::size_t edge = 0;
  std::size_t prev_with_edges = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    Int a = cf.coeffs[i - 1];
    std::size_t len;
    if (n == 1)
      len = static_cast<std::size_t>(a);
    else if (i == 1 || i == n)
      len = static_cast<std::size_t>(a - 1);
    else
      len = static_cast<std::size_t>(a - 2);
    CFBlock b;
    b.coeff_index = i;
    b.first_edge = edge;
    b.edge_count = len;
    // Decorated part: drop the path's first and last edge.
    std::size_t lo = std::max<std::size_t>(b.first_edge, 1);
    std::size_t hi = std::min(b.first_edge + len, total - 1);  // one past end
    b.decorated_first = lo < hi ? lo : 0;
    b.decorated_count = lo < hi ? hi - lo : 0;
    b.down_step = (i == 1) ? 0 : i - prev_with_edges;
    if (len > 0) prev_with_edges = i;
    dec.blocks.push_back(b);
    edge += len;
  }
  if (edge != total) throw std::logic_error("block decomposition does not tile the path");
  return dec;
}

std::pair<NegCF, NegCF> split_at(const NegCF& cf, std::size_t k) {
  if (k < 1 || k > cf.size()) throw std::out_of_range("split_at index out of range");
  NegCF left, right;
  left.coeffs.assign(cf.coeffs.begin(), cf.coeffs.begin() + (k - 1));
  right.coeffs.assign(cf.coeffs.begin() + k, cf.coeffs.end());
  return {left, right};
}

}  // namespace lenfill
