#pragma once

#include <optional>
#include <vector>

#include "graph_essence/graph.hpp"

namespace essence {

using Vector = std::vector<Weight>;

// Rank of a family of vectors by exact Gaussian elimination.
std::size_t rank(const std::vector<Vector>& vectors);

// Coefficients c with sum_k c[k] * columns[k] = target, if any solution
// exists. Columns must be linearly independent for the answer to be unique.
std::optional<Vector> solve_exact(const std::vector<Vector>& columns,
                                  const Vector& target);

template <PairSymmetry S>
Vector flatten(const PairGraph<S>& g) {
  return {g.upper().begin(), g.upper().end()};
}

template <PairSymmetry S>
std::vector<Vector> flatten(const std::vector<PairGraph<S>>& gs) {
  std::vector<Vector> out;
  out.reserve(gs.size());
  for (const auto& g : gs) out.push_back(flatten(g));
  return out;
}

}  // namespace essence
