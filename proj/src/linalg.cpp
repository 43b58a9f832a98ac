#include "graph_essence/linalg.hpp"

#include <utility>

namespace essence {

namespace {

// Reduces rows in place to row echelon form; returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<Vector>& rows,
                                   std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Weight lead = rows[r][c];
    for (std::size_t k = c; k < cols; ++k) rows[r][k] /= lead;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c].is_zero()) continue;
      const Weight f = rows[q][c];
      for (std::size_t k = c; k < cols; ++k) rows[q][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != cols) throw StructuralError("vector length mismatch");
  auto rows = vectors;
  return eliminate(rows, cols).size();
}

std::optional<Vector> solve_exact(const std::vector<Vector>& columns,
                                  const Vector& target) {
  const std::size_t m = target.size();
  const std::size_t k = columns.size();
  for (const auto& c : columns)
    if (c.size() != m) throw StructuralError("vector length mismatch");

  // Augmented matrix, one row per coordinate.
  std::vector<Vector> rows(m, Vector(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = columns[j][i];
    rows[i][k] = target[i];
  }
  const auto pivots = eliminate(rows, k + 1);
  Vector x(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == k) return std::nullopt;  // inconsistent
    x[pivots[r]] = rows[r][k];
  }
  return x;
}

}  // namespace essence
