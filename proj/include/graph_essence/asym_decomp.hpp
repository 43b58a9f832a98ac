#pragma once

#include <map>
#include <set>

#include "graph_essence/graph.hpp"

namespace essence::asym {

using PotentialVector = std::vector<Weight>;

struct AsymDecomposition {
  AsymGraph original;
  AsymGraph cpi;
  AsymGraph cyclic;
  PotentialVector potentials;
};

// s[j] = (1/n) * sum_k d(j,k).
PotentialVector potentials(const AsymGraph& g);

AsymDecomposition decompose(const AsymGraph& g);

// d(i,j) + d(j,k) = d(i,k) for every triplet.
bool is_strongly_transitive(const AsymGraph& g);

// Every potential is zero.
bool is_cyclic(const AsymGraph& g);

struct ThreeCycleExpansion {
  Vertex anchor = 0;
  std::size_t n = 0;
  // (j,k), anchor excluded, j < k -> multiple of three_cycle(anchor, j, k).
  std::map<VertexPair, Weight> coeffs;

  AsymGraph reconstruct() const;
};

// Throws DomainError unless `cyclic` has zero potentials.
ThreeCycleExpansion three_cycle_expansion(const AsymGraph& cyclic,
                                          Vertex anchor = 0);

// Open-path length as cyclic length plus the cpi arc joining the endpoints.
Weight connected_path_length_via(const AsymDecomposition& d, const Path& p);

struct SourcesAndSinks {
  std::set<Vertex> sources;
  std::set<Vertex> sinks;
};

// A source has every outgoing arc strictly positive, a sink strictly
// negative. Vertices with a zero arc are neither.
SourcesAndSinks sources_and_sinks(const AsymGraph& g);

struct Completion {
  AsymGraph graph;
  AdmissibilityMask mask;
};

// `partial` maps ordered pairs to d(i,j); either direction may be given.
// Every allowed pair must be present; forbidden pairs get `fill`.
Completion complete_incomplete(const std::map<VertexPair, Weight>& partial,
                               const AdmissibilityMask& mask,
                               const Weight& fill = 0);

}  // namespace essence::asym
