#pragma once

#include <optional>
#include <vector>

#include "lenfill/rational.hpp"

namespace lenfill {

/// Order of Z^rows / (lattice spanned by the columns), or nullopt when the
/// quotient is infinite. Columns are given as length-`rows` vectors.
/// Generic dense Smith normal form; intended for small matrices.
std::optional<Int> cokernel_order(std::vector<std::vector<Int>> cols, std::size_t rows);

}  // namespace lenfill
