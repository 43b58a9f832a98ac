#include "graph_essence/general_decomp.hpp"

namespace essence::general {

Split split(const GeneralGraph& g) {
  const std::size_t n = g.size();
  const Weight half(1, 2);
  SymGraph average(n);
  AsymGraph excess(n);
  for (const auto& [i, j] : all_pairs(n)) {
    const Weight a = (g.at(i, j) + g.at(j, i)) * half;
    average.set(i, j, a);
    excess.set(i, j, g.at(i, j) - a);
  }
  return {std::move(average), std::move(excess)};
}

GeneralGraph combine(const SymGraph& s, const AsymGraph& a) {
  if (s.size() != a.size()) throw StructuralError("graph size mismatch");
  GeneralGraph g(s.size());
  for (const auto& [i, j] : all_pairs(s.size())) {
    g.set(i, j, s.at(i, j) + a.at(i, j));
    g.set(j, i, s.at(j, i) + a.at(j, i));
  }
  return g;
}

GeneralDecomposition decompose(const GeneralGraph& g) {
  auto [average, excess] = split(g);
  auto sd = sym::decompose(average);
  auto ad = asym::decompose(excess);
  GeneralGraph reduced = combine(sd.cyclic, ad.cyclic);
  return {g, std::move(average), std::move(excess), std::move(sd),
          std::move(ad), std::move(reduced)};
}

Weight hamiltonian_length_via(const GeneralDecomposition& d, const Path& p) {
  if (!p.is_hamiltonian(d.original.size()))
    throw DomainError("path is not a Hamiltonian circuit");
  return d.sym.sums.total + path_length(d.reduced, p);
}

Weight path_length_via(const GeneralDecomposition& d, const Path& p) {
  Weight total = sym::visit_term(d.sym.omega, p) + path_length(d.reduced, p);
  if (!p.is_closed()) total += d.asym.cpi.at(p.front(), p.back());
  return total;
}

}  // namespace essence::general
