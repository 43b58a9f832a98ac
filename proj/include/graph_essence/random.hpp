#pragma once

#include <cstdint>
#include <random>

#include "graph_essence/graph.hpp"

namespace essence::rnd {

// mt19937_64 output is specified bit-for-bit by the standard; values are
// drawn with a plain modulus so streams match on every platform.
using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);

AsymGraph random_asym(std::size_t n, Rng& rng, long lo = -9, long hi = 9);
SymGraph random_sym(std::size_t n, Rng& rng, long lo = -9, long hi = 9);
GeneralGraph random_general(std::size_t n, Rng& rng, long lo = -9,
                            long hi = 9);

// Projections of random graphs onto the cyclic and cpi subspaces.
AsymGraph random_cyclic_asym(std::size_t n, Rng& rng);
SymGraph random_cyclic_sym(std::size_t n, Rng& rng);
AsymGraph random_cpi_asym(std::size_t n, Rng& rng);
// Edges omega_j + omega_k with omega_j drawn from [lo, hi].
SymGraph random_cpi_sym(std::size_t n, Rng& rng, long lo = -9, long hi = 9);

// Each pair forbidden with probability percent/100.
AdmissibilityMask random_mask(std::size_t n, Rng& rng, int percent);

// Random closed path of `length` vertices (revisits allowed, no immediate
// repeats, last != first).
Path random_closed_path(std::size_t n, std::size_t length, Rng& rng);
Path random_open_path(std::size_t n, std::size_t length, Rng& rng);

}  // namespace essence::rnd
