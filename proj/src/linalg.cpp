#include "hennings/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hennings {

namespace {

// Reduces in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const CycloScalar inv = m[row][col].inverse();
    for (std::size_t c = col; c < ncols; ++c) {
      if (!m[row][c].is_zero()) m[row][c] *= inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const CycloScalar f = m[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void check_shape(const Matrix& m, std::size_t ncols) {
  for (const auto& r : m) {
    if (r.size() != ncols) throw std::invalid_argument("matrix row has wrong length");
  }
}

}  // namespace

std::vector<std::vector<CycloScalar>> nullspace(Matrix rows, std::size_t ncols) {
  check_shape(rows, ncols);
  const auto pivots = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (const auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<CycloScalar>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycloScalar> v(ncols);
    v[free] = CycloScalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(Matrix rows, std::size_t ncols) {
  check_shape(rows, ncols);
  return rref(rows, ncols).size();
}

}  // namespace hennings
