#include "graph_essence/random.hpp"

#include "graph_essence/asym_decomp.hpp"
#include "graph_essence/sym_decomp.hpp"

namespace essence::rnd {

long uniform(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

AsymGraph random_asym(std::size_t n, Rng& rng, long lo, long hi) {
  AsymGraph g(n);
  for (const auto& [i, j] : all_pairs(n)) g.set(i, j, uniform(rng, lo, hi));
  return g;
}

SymGraph random_sym(std::size_t n, Rng& rng, long lo, long hi) {
  SymGraph g(n);
  for (const auto& [i, j] : all_pairs(n)) g.set(i, j, uniform(rng, lo, hi));
  return g;
}

GeneralGraph random_general(std::size_t n, Rng& rng, long lo, long hi) {
  GeneralGraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j) g.set(i, j, uniform(rng, lo, hi));
  return g;
}

AsymGraph random_cyclic_asym(std::size_t n, Rng& rng) {
  return asym::decompose(random_asym(n, rng)).cyclic;
}

SymGraph random_cyclic_sym(std::size_t n, Rng& rng) {
  return sym::decompose(random_sym(n, rng)).cyclic;
}

AsymGraph random_cpi_asym(std::size_t n, Rng& rng) {
  return asym::decompose(random_asym(n, rng)).cpi;
}

SymGraph random_cpi_sym(std::size_t n, Rng& rng, long lo, long hi) {
  std::vector<long> w(n);
  for (auto& x : w) x = uniform(rng, lo, hi);
  SymGraph g(n);
  for (const auto& [i, j] : all_pairs(n)) g.set(i, j, w[i] + w[j]);
  return g;
}

AdmissibilityMask random_mask(std::size_t n, Rng& rng, int percent) {
  auto mask = AdmissibilityMask::all(n);
  for (const auto& [i, j] : all_pairs(n))
    if (uniform(rng, 0, 99) < percent) mask.forbid(i, j);
  return mask;
}

namespace {

std::vector<Vertex> walk(std::size_t n, std::size_t length, Rng& rng) {
  std::vector<Vertex> vs;
  vs.push_back(static_cast<Vertex>(uniform(rng, 0, static_cast<long>(n) - 1)));
  while (vs.size() < length) {
    // Uniform over the n-1 vertices other than the current one.
    auto v = static_cast<Vertex>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (v >= vs.back()) ++v;
    vs.push_back(v);
  }
  return vs;
}

}  // namespace

Path random_closed_path(std::size_t n, std::size_t length, Rng& rng) {
  for (;;) {
    auto vs = walk(n, length, rng);
    if (vs.size() == 1 || vs.back() != vs.front())
      return Path::closed(std::move(vs));
  }
}

Path random_open_path(std::size_t n, std::size_t length, Rng& rng) {
  return Path::open(walk(n, length, rng));
}

}  // namespace essence::rnd
