#pragma once

#include "graph_essence/asym_decomp.hpp"
#include "graph_essence/sym_decomp.hpp"

namespace essence::general {

struct Split {
  SymGraph average;  // (d(i,j) + d(j,i)) / 2
  AsymGraph excess;  // d(i,j) - average
};

Split split(const GeneralGraph& g);

struct GeneralDecomposition {
  GeneralGraph original;
  SymGraph sym_part;
  AsymGraph asym_part;
  sym::SymDecomposition sym;
  asym::AsymDecomposition asym;
  // Arcwise sum of the two cyclic components.
  GeneralGraph reduced;
};

GeneralDecomposition decompose(const GeneralGraph& g);

// Join a symmetric and a skew graph back into one arcwise graph.
GeneralGraph combine(const SymGraph& s, const AsymGraph& a);

// T plus the reduced circuit length. Throws DomainError unless p is a
// Hamiltonian circuit.
Weight hamiltonian_length_via(const GeneralDecomposition& d, const Path& p);

// Any path: vertex-weight visit terms of the symmetric cpi part, plus the
// skew cpi arc joining the endpoints of an open path, plus the reduced length.
Weight path_length_via(const GeneralDecomposition& d, const Path& p);

}  // namespace essence::general
