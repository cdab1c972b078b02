#include "lenfill/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lenfill {

namespace {

using Wide = __int128;

Wide wabs(Wide x) { return x < 0 ? -x : x; }

}  // namespace

std::optional<Int> cokernel_order(std::vector<std::vector<Int>> cols, std::size_t rows) {
  const std::size_t n = cols.size();
  std::vector<std::vector<Wide>> a(rows, std::vector<Wide>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = cols[j][i];
  }
  Wide order = 1;
  std::size_t r = 0, c = 0;
  while (r < rows && c < n) {
    // Pick the smallest nonzero entry in the remaining block as pivot.
    std::size_t pi = r, pj = c;
    Wide best = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = c; j < n; ++j)
        if (a[i][j] != 0 && (best == 0 || wabs(a[i][j]) < best)) {
          best = wabs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(a[pi], a[r]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][c]);
    bool reduced = true;
    for (std::size_t i = r + 1; i < rows; ++i) {
      Wide f = a[i][c] / a[r][c];
      if (f != 0)
        for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
      if (a[i][c] != 0) reduced = false;
    }
    for (std::size_t j = c + 1; j < n; ++j) {
      Wide f = a[r][j] / a[r][c];
      if (f != 0)
        for (std::size_t i = r; i < rows; ++i) a[i][j] -= f * a[i][c];
      if (a[r][j] != 0) reduced = false;
    }
    if (!reduced) continue;  // remainders became new, smaller pivots
    order *= wabs(a[r][c]);
    ++r;
    ++c;
  }
  if (r < rows) return std::nullopt;  // rank deficit: infinite quotient
  if (order > static_cast<Wide>(INT64_MAX)) throw std::overflow_error("cokernel order overflow");
  return static_cast<Int>(order);
}

}  // namespace lenfill
