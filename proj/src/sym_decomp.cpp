#include "graph_essence/sym_decomp.hpp"

#include <algorithm>
#include <string>

#include "graph_essence/basis.hpp"

namespace essence::sym {

VertexSums vertex_sums(const SymGraph& g) {
  const std::size_t n = g.size();
  VertexSums out{std::vector<Weight>(n), {}};
  for (const auto& [i, j] : all_pairs(n)) {
    const Weight& w = g.upper(pair_index(n, i, j));
    out.sums[i] += w;
    out.sums[j] += w;
  }
  for (const auto& s : out.sums) out.total += s;
  out.total /= Weight(static_cast<long>(n) - 1);
  return out;
}

OmegaWeights omega(const VertexSums& sums, std::size_t n) {
  if (n < 3) throw DomainError("vertex weights need n >= 3");
  if (sums.sums.size() != n) throw StructuralError("vertex sum count != n");
  const Weight half_t = sums.total / Weight(2);
  const Weight denom(static_cast<long>(n) - 2);
  OmegaWeights w;
  w.reserve(n);
  for (const auto& s : sums.sums) w.push_back((s - half_t) / denom);
  return w;
}

SymDecomposition decompose(const SymGraph& g) {
  const std::size_t n = g.size();
  auto sums = vertex_sums(g);
  auto w = omega(sums, n);
  std::vector<Weight> upper;
  upper.reserve(pair_count(n));
  for (const auto& [i, j] : all_pairs(n)) upper.push_back(w[i] + w[j]);
  SymGraph cpi(n, std::move(upper));
  SymGraph cyclic = g - cpi;
  return {g, std::move(cpi), std::move(cyclic), std::move(sums), std::move(w)};
}

bool is_cpi(const SymGraph& g) { return decompose(g).cyclic.is_zero(); }

Weight hamiltonian_length_via(const SymDecomposition& d, const Path& p) {
  if (!p.is_hamiltonian(d.original.size()))
    throw DomainError("path is not a Hamiltonian circuit");
  return d.sums.total + path_length(d.cyclic, p);
}

Weight visit_term(const OmegaWeights& omega, const Path& p) {
  if (p.size() == 1) return {};
  const auto vs = p.vertices();
  Weight visits;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (vs[k] >= omega.size()) throw StructuralError("path vertex out of range");
    const bool endpoint = !p.is_closed() && (k == 0 || k + 1 == vs.size());
    visits += endpoint ? omega[vs[k]] : Weight(2) * omega[vs[k]];
  }
  return visits;
}

Weight subset_path_length_via(const SymDecomposition& d, const Path& p) {
  return path_length(d.cyclic, p) + visit_term(d.omega, p);
}

SymGraph FourCycleExpansion::reconstruct() const {
  SymGraph g(n);
  for (const auto& [jk, c] : a) g += c * four_cycle(0, 1, jk.first, jk.second, n);
  for (const auto& [j, c] : b) g += c * four_cycle(0, 1, j, 2, n);
  return g;
}

FourCycleExpansion four_cycle_expansion(const SymGraph& cyclic) {
  const std::size_t n = cyclic.size();
  for (const auto& s : vertex_sums(cyclic).sums)
    if (!s.is_zero())
      throw DomainError("four-cycle expansion needs zero vertex sums");

  FourCycleExpansion e;
  e.n = n;
  if (n < 4) return e;  // the symmetric cyclic space is {0}

  SymGraph residual = cyclic;
  auto take_a = [&](Vertex j, Vertex k) {
    const Weight c = residual.at(j, k);
    e.a[{j, k}] = c;
    if (!c.is_zero()) residual -= c * four_cycle(0, 1, j, k, n);
  };
  // Edges among V4..Vn each lie on exactly one A-family cycle.
  for (Vertex j = 3; j < n; ++j)
    for (Vertex k = j + 1; k < n; ++k) take_a(j, k);
  // Then peel {2,s} with the B family and {3,s} with the A family.
  for (Vertex s = n - 1; s >= 3; --s) {
    const Weight c = -residual.at(1, s);
    e.b[s] = c;
    if (!c.is_zero()) residual -= c * four_cycle(0, 1, s, 2, n);
    take_a(2, s);
  }
  if (!residual.is_zero())
    throw DomainError("residual did not vanish; input is not cyclic");
  return e;
}

Bounds hamiltonian_bounds(const SymDecomposition& d,
                          const AdmissibilityMask* mask) {
  const std::size_t n = d.cyclic.size();
  std::vector<Weight> edges;
  for (const auto& [i, j] : all_pairs(n))
    if (mask == nullptr || mask->allows(i, j))
      edges.push_back(d.cyclic.upper(pair_index(n, i, j)));
  if (edges.size() < n)
    throw InfeasibleError("fewer allowed edges than vertices");
  std::partial_sort(edges.begin(), edges.begin() + static_cast<long>(n),
                    edges.end());
  Weight lower = d.sums.total;
  for (std::size_t k = 0; k < n; ++k) lower += edges[k];
  return {lower, d.sums.total};
}

bool cpi_triangle_inequality(const OmegaWeights& omega) {
  return std::all_of(omega.begin(), omega.end(),
                     [](const Weight& w) { return w.sign() >= 0; });
}

QuadParams quad_params(const SymGraph& cyclic) {
  if (cyclic.size() != 4) throw DomainError("quad parameters need n = 4");
  for (const auto& s : vertex_sums(cyclic).sums)
    if (!s.is_zero()) throw DomainError("quad parameters need a cyclic graph");
  return {-cyclic.at(0, 2), cyclic.at(0, 1)};
}

SymGraph reconstruct(const QuadParams& q) {
  return q.u * four_cycle(0, 3, 1, 2, 4) + q.v * four_cycle(0, 1, 2, 3, 4);
}

QuadRegion quad_region_predicates(const QuadParams& q,
                                  const OmegaWeights& omega) {
  if (omega.size() != 4) throw DomainError("quad predicates need n = 4");
  const Weight neg_u = -q.u;
  const Weight u_minus_v = q.u - q.v;
  const Weight w = *std::min_element(omega.begin(), omega.end());
  return {neg_u > q.v && neg_u > u_minus_v,
          w >= neg_u && w >= q.v && w >= u_minus_v};
}

Completion complete_incomplete(const std::map<VertexPair, Weight>& partial,
                               const AdmissibilityMask& mask,
                               const Weight& fill) {
  const std::size_t n = mask.size();
  SymGraph g(n);
  std::vector<char> seen(pair_count(n), 0);
  for (const auto& [ij, w] : partial) {
    const Vertex i = std::min(ij.first, ij.second);
    const Vertex j = std::max(ij.first, ij.second);
    if (j >= n || i == j) throw DomainError("bad pair in partial graph");
    if (!mask.allows(i, j))
      throw DomainError("value given for forbidden pair {V" +
                        std::to_string(i + 1) + ", V" + std::to_string(j + 1) +
                        "}");
    auto& flag = seen[pair_index(n, i, j)];
    if (flag) throw DomainError("pair given twice in partial graph");
    flag = 1;
    g.set(i, j, w);
  }
  for (const auto& [i, j] : all_pairs(n)) {
    if (mask.allows(i, j)) {
      if (!seen[pair_index(n, i, j)])
        throw DomainError("allowed pair {V" + std::to_string(i + 1) + ", V" +
                          std::to_string(j + 1) + "} missing");
    } else {
      g.set(i, j, fill);
    }
  }
  return {std::move(g), mask};
}

}  // namespace essence::sym
