#pragma once

#include <optional>
#include <string_view>
#include <type_traits>
#include <vector>

#include "graph_essence/graph.hpp"

namespace essence::search {

enum class Objective { shortest, longest };

Objective parse_objective(std::string_view text);

struct SearchSpec {
  Objective objective = Objective::shortest;
  // Circuit vertex set; all vertices when absent. Needs at least 3.
  std::optional<std::vector<Vertex>> subset;
  std::optional<AdmissibilityMask> mask;
  // Rotate the reported circuit to begin here.
  std::optional<Vertex> start;
  // Overrides enumeration_limit() for this call.
  std::optional<std::size_t> max_vertices;
};

struct SearchResult {
  Path path;
  Weight length;
  bool optimal = false;
};

// Dense arc costs plus admissibility, shared by every solver.
struct CostMatrix {
  std::size_t n = 0;
  bool symmetric = false;
  std::vector<Weight> cost;    // row-major n*n
  std::vector<char> allowed;   // row-major n*n

  const Weight& at(Vertex i, Vertex j) const { return cost[i * n + j]; }
  bool allows(Vertex i, Vertex j) const { return allowed[i * n + j] != 0; }
};

template <ArcWeighted G>
CostMatrix cost_matrix(const G& g, const AdmissibilityMask* mask = nullptr) {
  CostMatrix m;
  m.n = g.size();
  m.symmetric = std::is_same_v<G, SymGraph>;
  m.cost.resize(m.n * m.n);
  m.allowed.assign(m.n * m.n, 0);
  for (Vertex i = 0; i < m.n; ++i)
    for (Vertex j = 0; j < m.n; ++j) {
      if (i == j) continue;
      m.cost[i * m.n + j] = g.at(i, j);
      m.allowed[i * m.n + j] = mask == nullptr || mask->allows(i, j);
    }
  return m;
}

// Largest vertex set the exhaustive search accepts: 10 unless the
// GRAPH_ESSENCE_MAX_N environment variable says otherwise.
std::size_t enumeration_limit();

// Best simple circuit over the spec's vertex set. Ties go to the
// lexicographically smallest sequence starting at the smallest vertex; for
// symmetric costs only the direction with second vertex < last is visited.
// The OpenMP version splits the search by three-vertex prefixes and reduces
// the per-prefix winners in prefix order, so both return identical results.
SearchResult exhaustive_optimum(const CostMatrix& m, const SearchSpec& spec);
SearchResult exhaustive_optimum_serial(const CostMatrix& m,
                                       const SearchSpec& spec);

template <ArcWeighted G>
SearchResult exhaustive_optimum(const G& g, const SearchSpec& spec) {
  return exhaustive_optimum(cost_matrix(g, spec.mask ? &*spec.mask : nullptr),
                            spec);
}

template <ArcWeighted G>
SearchResult exhaustive_optimum_serial(const G& g, const SearchSpec& spec) {
  return exhaustive_optimum_serial(
      cost_matrix(g, spec.mask ? &*spec.mask : nullptr), spec);
}

// Nearest (or farthest) unvisited neighbour, lowest index on ties, then the
// closing arc. spec.start is required.
SearchResult greedy_neighbor(const CostMatrix& m, const SearchSpec& spec);

template <ArcWeighted G>
SearchResult greedy_neighbor(const G& g, const SearchSpec& spec) {
  return greedy_neighbor(cost_matrix(g, spec.mask ? &*spec.mask : nullptr),
                         spec);
}

// Some Hamiltonian circuit that uses only `edges`, found by lexicographic
// backtracking from V1.
std::optional<Path> hamiltonian_in_edge_set(
    std::size_t n, const std::vector<VertexPair>& edges);

struct SortedArcResult {
  SearchResult result;
  std::vector<VertexPair> ranking;  // allowed edges, ascending
  std::size_t initial_marked = 0;   // n plus ties with the n-th weight
  std::size_t final_marked = 0;
};

// Marks the n cheapest edges (whole weight classes at the boundary), then
// adds the next weight class until the marked edges hold a Hamiltonian
// circuit, and returns the shortest circuit within the marked set.
// Throws DomainError if the input has nonzero vertex sums and
// InfeasibleError if every allowed edge is marked without success.
SortedArcResult sorted_arc_search(const SymGraph& cyclic,
                                  const AdmissibilityMask* mask = nullptr);

// Every simple closed path with at least `min_size` vertices, once per
// direction, each starting at its smallest vertex.
std::vector<Path> simple_circuits(std::size_t n, std::size_t min_size = 2);

// Every Hamiltonian circuit starting at V1, once per direction.
std::vector<Path> hamiltonian_circuits(std::size_t n);

}  // namespace essence::search
