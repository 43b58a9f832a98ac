#include "graph_essence/basis.hpp"

#include <string>

namespace essence {

namespace {

void require_distinct(std::initializer_list<Vertex> vs, std::size_t n) {
  for (auto a = vs.begin(); a != vs.end(); ++a) {
    if (*a >= n)
      throw DomainError("vertex " + std::to_string(*a + 1) + " out of range");
    for (auto b = a + 1; b != vs.end(); ++b)
      if (*a == *b)
        throw DomainError("repeated vertex V" + std::to_string(*a + 1));
  }
}

}  // namespace

AsymGraph three_cycle(Vertex i, Vertex j, Vertex k, std::size_t n) {
  require_distinct({i, j, k}, n);
  AsymGraph g(n);
  g.set(i, j, 1);
  g.set(j, k, 1);
  g.set(k, i, 1);
  return g;
}

SymGraph four_cycle(Vertex i, Vertex j, Vertex k, Vertex s, std::size_t n) {
  require_distinct({i, j, k, s}, n);
  SymGraph g(n);
  g.set(i, j, 1);
  g.set(j, k, -1);
  g.set(k, s, 1);
  g.set(s, i, -1);
  return g;
}

SymGraph cpi_basis_sym(Vertex j, std::size_t n) {
  if (j >= n) throw DomainError("vertex " + std::to_string(j + 1) + " out of range");
  SymGraph g(n);
  for (Vertex k = 0; k < n; ++k)
    if (k != j) g.set(j, k, 1);
  return g;
}

std::vector<AsymGraph> three_cycle_basis(std::size_t n) {
  std::vector<AsymGraph> out;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex k = j + 1; k < n; ++k) out.push_back(three_cycle(0, j, k, n));
  return out;
}

std::vector<SymGraph> four_cycle_basis(std::size_t n) {
  std::vector<SymGraph> out;
  for (Vertex j = 2; j < n; ++j)
    for (Vertex k = j + 1; k < n; ++k) out.push_back(four_cycle(0, 1, j, k, n));
  for (Vertex j = 3; j < n; ++j) out.push_back(four_cycle(0, 1, j, 2, n));
  return out;
}

std::vector<SymGraph> cpi_basis_sym_all(std::size_t n) {
  std::vector<SymGraph> out;
  for (Vertex j = 0; j < n; ++j) out.push_back(cpi_basis_sym(j, n));
  return out;
}

}  // namespace essence
