#include "graph_essence/asym_decomp.hpp"

#include <algorithm>
#include <string>

#include "graph_essence/basis.hpp"

namespace essence::asym {

PotentialVector potentials(const AsymGraph& g) {
  const std::size_t n = g.size();
  PotentialVector s(n);
  for (const auto& [i, j] : all_pairs(n)) {
    const Weight& w = g.upper(pair_index(n, i, j));
    s[i] += w;
    s[j] -= w;
  }
  const Weight inv_n(1, static_cast<long>(n));
  for (auto& x : s) x *= inv_n;
  return s;
}

AsymDecomposition decompose(const AsymGraph& g) {
  const std::size_t n = g.size();
  auto s = potentials(g);
  std::vector<Weight> upper;
  upper.reserve(pair_count(n));
  for (const auto& [i, j] : all_pairs(n)) upper.push_back(s[i] - s[j]);
  AsymGraph cpi(n, std::move(upper));
  AsymGraph cyclic = g - cpi;
  return {g, std::move(cpi), std::move(cyclic), std::move(s)};
}

bool is_strongly_transitive(const AsymGraph& g) {
  const std::size_t n = g.size();
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      for (Vertex k = j + 1; k < n; ++k)
        if (g.at(i, j) + g.at(j, k) != g.at(i, k)) return false;
  return true;
}

bool is_cyclic(const AsymGraph& g) {
  for (const auto& s : potentials(g))
    if (!s.is_zero()) return false;
  return true;
}

AsymGraph ThreeCycleExpansion::reconstruct() const {
  AsymGraph g(n);
  for (const auto& [jk, c] : coeffs)
    g += c * three_cycle(anchor, jk.first, jk.second, n);
  return g;
}

ThreeCycleExpansion three_cycle_expansion(const AsymGraph& cyclic,
                                          Vertex anchor) {
  const std::size_t n = cyclic.size();
  if (anchor >= n) throw DomainError("anchor out of range");
  if (!is_cyclic(cyclic))
    throw DomainError("three-cycle expansion needs a cyclic graph");
  // Each arc j -> k that avoids the anchor lies on exactly one basis cycle.
  ThreeCycleExpansion e{anchor, n, {}};
  for (const auto& [j, k] : all_pairs(n))
    if (j != anchor && k != anchor) e.coeffs[{j, k}] = cyclic.at(j, k);
  return e;
}

Weight connected_path_length_via(const AsymDecomposition& d, const Path& p) {
  if (p.is_closed()) return path_length(d.cyclic, p);
  return path_length(d.cyclic, p) + d.cpi.at(p.front(), p.back());
}

SourcesAndSinks sources_and_sinks(const AsymGraph& g) {
  SourcesAndSinks out;
  const std::size_t n = g.size();
  for (Vertex j = 0; j < n; ++j) {
    bool all_pos = true, all_neg = true;
    for (Vertex k = 0; k < n; ++k) {
      if (k == j) continue;
      const int s = g.at(j, k).sign();
      all_pos &= s > 0;
      all_neg &= s < 0;
    }
    if (all_pos) out.sources.insert(j);
    if (all_neg) out.sinks.insert(j);
  }
  return out;
}

Completion complete_incomplete(const std::map<VertexPair, Weight>& partial,
                               const AdmissibilityMask& mask,
                               const Weight& fill) {
  const std::size_t n = mask.size();
  AsymGraph g(n);
  std::vector<char> seen(pair_count(n), 0);
  for (const auto& [ij, w] : partial) {
    auto [i, j] = ij;
    if (i >= n || j >= n || i == j)
      throw DomainError("bad pair in partial graph");
    if (!mask.allows(i, j))
      throw DomainError("value given for forbidden pair {V" +
                        std::to_string(std::min(i, j) + 1) + ", V" +
                        std::to_string(std::max(i, j) + 1) + "}");
    auto& flag = seen[pair_index(n, std::min(i, j), std::max(i, j))];
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

}  // namespace essence::asym
