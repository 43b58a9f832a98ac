#pragma once

#include <map>

#include "graph_essence/graph.hpp"

namespace essence::sym {

struct VertexSums {
  std::vector<Weight> sums;  // sum of edge weights at each vertex
  Weight total;              // T = sum(sums) / (n - 1)
};

using OmegaWeights = std::vector<Weight>;

struct SymDecomposition {
  SymGraph original;
  SymGraph cpi;
  SymGraph cyclic;
  VertexSums sums;
  OmegaWeights omega;
};

VertexSums vertex_sums(const SymGraph& g);

// omega_j = (sums_j - T/2) / (n - 2). Throws DomainError for n < 3.
OmegaWeights omega(const VertexSums& sums, std::size_t n);

SymDecomposition decompose(const SymGraph& g);

// There are omega_j with d(j,k) = omega_j + omega_k for every pair.
bool is_cpi(const SymGraph& g);

// T plus the cyclic circuit length. Throws DomainError unless p is a
// Hamiltonian circuit.
Weight hamiltonian_length_via(const SymDecomposition& d, const Path& p);

// Cyclic length plus the vertex-weight contribution of each visit: an open
// path counts its endpoints once and interior visits twice, a closed path
// counts every visit twice.
Weight subset_path_length_via(const SymDecomposition& d, const Path& p);
// The vertex-weight part alone, i.e. the length of p in the cpi component.
Weight visit_term(const OmegaWeights& omega, const Path& p);

struct FourCycleExpansion {
  std::size_t n = 0;
  // (j,k), 2 <= j < k -> multiple of four_cycle(0, 1, j, k).
  std::map<VertexPair, Weight> a;
  // j >= 3 -> multiple of four_cycle(0, 1, j, 2).
  std::map<Vertex, Weight> b;

  SymGraph reconstruct() const;
  std::size_t size() const { return a.size() + b.size(); }
};

// Switching extraction. Throws DomainError if the input has nonzero vertex
// sums or the residual does not vanish.
FourCycleExpansion four_cycle_expansion(const SymGraph& cyclic);

struct Bounds {
  Weight lower;
  Weight upper;
};

// [T + sum of the n smallest cyclic edges, T]. With a mask only allowed
// edges are candidates for the lower sum.
Bounds hamiltonian_bounds(const SymDecomposition& d,
                          const AdmissibilityMask* mask = nullptr);

// The cpi graph satisfies the triangle inequality iff no weight is negative.
bool cpi_triangle_inequality(const OmegaWeights& omega);

// n = 4 cyclic component as u * b(0,3,1,2) + v * b(0,1,2,3).
struct QuadParams {
  Weight u;
  Weight v;
};

// v = d(0,1), u = -d(0,2). Throws DomainError for n != 4 or non-cyclic input.
QuadParams quad_params(const SymGraph& cyclic);
SymGraph reconstruct(const QuadParams& q);

struct QuadRegion {
  bool no_diagonal_crossing;
  bool triangle_inequality;
};

QuadRegion quad_region_predicates(const QuadParams& q,
                                  const OmegaWeights& omega);

struct Completion {
  SymGraph graph;
  AdmissibilityMask mask;
};

// `partial` keys are unordered pairs in either orientation.
Completion complete_incomplete(const std::map<VertexPair, Weight>& partial,
                               const AdmissibilityMask& mask,
                               const Weight& fill = 0);

}  // namespace essence::sym
