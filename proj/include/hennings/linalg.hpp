// Dense exact linear algebra over cyclotomic scalars.
#pragma once

#include <cstddef>
#include <vector>

#include "hennings/cyclo.hpp"

namespace hennings {

using Matrix = std::vector<std::vector<CycloScalar>>;

/// Basis of {v : M v = 0}, one vector per free column of the reduced row
/// echelon form, with a 1 in that column. Rows must all have length ncols.
std::vector<std::vector<CycloScalar>> nullspace(Matrix rows, std::size_t ncols);

/// Rank of M.
std::size_t rank(Matrix rows, std::size_t ncols);

}  // namespace hennings
