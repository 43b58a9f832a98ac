#pragma once

#include "graph_essence/graph.hpp"

namespace essence {

// Unit directed three-cycle i -> j -> k -> i.
AsymGraph three_cycle(Vertex i, Vertex j, Vertex k, std::size_t n);

// Symmetric edge pattern {i,j}:+1, {j,k}:-1, {k,s}:+1, {s,i}:-1.
SymGraph four_cycle(Vertex i, Vertex j, Vertex k, Vertex s, std::size_t n);

// Edges {j,k} = 1 for every k != j.
SymGraph cpi_basis_sym(Vertex j, std::size_t n);

// Canonical cyclic bases, in the order the expansions report them.
// Three-cycles (anchor, j, k) for anchor < j < k, anchor = 0.
std::vector<AsymGraph> three_cycle_basis(std::size_t n);
// b(0,1,j,k) for 2 <= j < k, then b(0,1,j,2) for 3 <= j.
std::vector<SymGraph> four_cycle_basis(std::size_t n);
std::vector<SymGraph> cpi_basis_sym_all(std::size_t n);

}  // namespace essence
