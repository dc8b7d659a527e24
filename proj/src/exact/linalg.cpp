#include "ellsub/exact/linalg.hpp"

namespace ellsub {

std::vector<std::size_t> row_reduce(Matrix &m) {
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j)
      m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Vector> nullspace(Matrix m, std::size_t ncols) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free])
      continue;
    Vector x(ncols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = -m[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> solve_unique(const Matrix &m, const Vector &b,
                                   std::size_t ncols) {
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i)
    aug[i].push_back(b[i]);
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == ncols)
    return std::nullopt; // inconsistent
  if (pivots.size() != ncols)
    return std::nullopt;
  Vector x(ncols);
  for (std::size_t i = 0; i < ncols; ++i)
    x[pivots[i]] = aug[i][ncols];
  return x;
}

} // namespace ellsub
