#include "graph_essence/search.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace essence::search {

Objective parse_objective(std::string_view text) {
  if (text == "shortest") return Objective::shortest;
  if (text == "longest") return Objective::longest;
  throw DomainError("objective must be 'shortest' or 'longest'");
}

std::size_t enumeration_limit() {
  constexpr std::size_t fallback = 10;
  const char* env = std::getenv("GRAPH_ESSENCE_MAX_N");
  if (env == nullptr) return fallback;
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return fallback;
  return value;
}

namespace {

std::vector<Vertex> vertex_set(const CostMatrix& m, const SearchSpec& spec) {
  std::vector<Vertex> vs;
  if (spec.subset) {
    vs = *spec.subset;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      throw DomainError("subset lists a vertex twice");
    if (!vs.empty() && vs.back() >= m.n)
      throw DomainError("subset vertex out of range");
  } else {
    vs.resize(m.n);
    for (Vertex v = 0; v < m.n; ++v) vs[v] = v;
  }
  if (vs.size() < 3) throw DomainError("circuits need at least 3 vertices");
  return vs;
}

Path rotate_to(std::vector<Vertex> seq, const std::optional<Vertex>& start) {
  if (start) {
    auto it = std::find(seq.begin(), seq.end(), *start);
    if (it == seq.end())
      throw DomainError("start vertex V" + std::to_string(*start + 1) +
                        " is not on the circuit");
    std::rotate(seq.begin(), it, seq.end());
  }
  return Path::closed(std::move(seq));
}

struct Best {
  std::vector<Vertex> seq;
  Weight length;
  bool found = false;
};

// Depth-first enumeration of circuits over vs, in lexicographic order,
// extending a fixed prefix. Keeps the first strictly better circuit.
class CircuitSearch {
 public:
  CircuitSearch(const CostMatrix& m, const std::vector<Vertex>& vs,
                bool longest)
      : m_(m), vs_(vs), longest_(longest), used_(vs.size(), 0),
        partial_(vs.size()) {}

  // prefix holds positions into vs; prefix[0] must be 0.
  Best run(const std::vector<std::size_t>& prefix) {
    best_ = Best{};
    seq_.clear();
    std::fill(used_.begin(), used_.end(), 0);
    partial_[0] = Weight();
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      const std::size_t p = prefix[d];
      if (used_[p]) return best_;
      if (d > 0) {
        const Vertex from = vs_[seq_.back()], to = vs_[p];
        if (!m_.allows(from, to)) return best_;
        partial_[d] = partial_[d - 1] + m_.at(from, to);
      }
      used_[p] = 1;
      seq_.push_back(p);
    }
    descend();
    return best_;
  }

 private:
  bool better(const Weight& a, const Weight& b) const {
    return longest_ ? a > b : a < b;
  }

  void descend() {
    const std::size_t depth = seq_.size();
    const std::size_t size = vs_.size();
    const Vertex last = vs_[seq_.back()];
    if (depth == size) {
      // One direction per symmetric circuit: second vertex below the last.
      if (m_.symmetric && seq_[1] > seq_.back()) return;
      const Vertex first = vs_[seq_.front()];
      if (!m_.allows(last, first)) return;
      Weight total = partial_[depth - 1] + m_.at(last, first);
      if (!best_.found || better(total, best_.length)) {
        best_.found = true;
        best_.length = std::move(total);
        best_.seq.clear();
        for (std::size_t p : seq_) best_.seq.push_back(vs_[p]);
      }
      return;
    }
    for (std::size_t p = 1; p < size; ++p) {
      if (used_[p] || !m_.allows(last, vs_[p])) continue;
      partial_[depth] = partial_[depth - 1] + m_.at(last, vs_[p]);
      used_[p] = 1;
      seq_.push_back(p);
      descend();
      seq_.pop_back();
      used_[p] = 0;
    }
  }

  const CostMatrix& m_;
  const std::vector<Vertex>& vs_;
  bool longest_;
  std::vector<char> used_;
  std::vector<Weight> partial_;
  std::vector<std::size_t> seq_;
  Best best_;
};

std::vector<Vertex> checked_vertex_set(const CostMatrix& m,
                                       const SearchSpec& spec) {
  auto vs = vertex_set(m, spec);
  const std::size_t limit = spec.max_vertices.value_or(enumeration_limit());
  if (vs.size() > limit)
    throw CapacityError("exhaustive search over " + std::to_string(vs.size()) +
                        " vertices exceeds the limit of " +
                        std::to_string(limit));
  return vs;
}

SearchResult finish(Best best, const SearchSpec& spec) {
  if (!best.found) throw InfeasibleError("no admissible circuit exists");
  return {rotate_to(std::move(best.seq), spec.start), std::move(best.length),
          true};
}

}  // namespace

SearchResult exhaustive_optimum_serial(const CostMatrix& m,
                                       const SearchSpec& spec) {
  const auto vs = checked_vertex_set(m, spec);
  CircuitSearch s(m, vs, spec.objective == Objective::longest);
  return finish(s.run({0}), spec);
}

SearchResult exhaustive_optimum(const CostMatrix& m, const SearchSpec& spec) {
  const auto vs = checked_vertex_set(m, spec);
  const bool longest = spec.objective == Objective::longest;
  const std::size_t size = vs.size();

  std::vector<std::vector<std::size_t>> tasks;
  for (std::size_t a = 1; a < size; ++a)
    for (std::size_t b = 1; b < size; ++b)
      if (a != b) tasks.push_back({0, a, b});

  std::vector<Best> winners(tasks.size());
  const long count = static_cast<long>(tasks.size());
#pragma omp parallel
  {
    CircuitSearch local(m, vs, longest);
#pragma omp for schedule(dynamic)
    for (long t = 0; t < count; ++t) winners[t] = local.run(tasks[t]);
  }

  // Tasks are in lexicographic prefix order, so a strict comparison keeps
  // the same winner as the serial scan.
  Best best;
  for (auto& w : winners) {
    if (!w.found) continue;
    if (!best.found ||
        (longest ? w.length > best.length : w.length < best.length))
      best = std::move(w);
  }
  return finish(std::move(best), spec);
}

SearchResult greedy_neighbor(const CostMatrix& m, const SearchSpec& spec) {
  if (!spec.start) throw DomainError("greedy search needs a start vertex");
  auto vs = vertex_set(m, spec);
  const Vertex start = *spec.start;
  if (std::find(vs.begin(), vs.end(), start) == vs.end())
    throw DomainError("start vertex is not in the vertex set");
  const bool longest = spec.objective == Objective::longest;

  std::vector<Vertex> seq{start};
  std::vector<char> visited(m.n, 0);
  visited[start] = 1;
  Weight length;
  while (seq.size() < vs.size()) {
    const Vertex cur = seq.back();
    std::optional<Vertex> pick;
    for (Vertex v : vs) {
      if (visited[v] || !m.allows(cur, v)) continue;
      if (!pick || (longest ? m.at(cur, v) > m.at(cur, *pick)
                            : m.at(cur, v) < m.at(cur, *pick)))
        pick = v;
    }
    if (!pick)
      throw InfeasibleError("greedy walk stranded at V" +
                            std::to_string(cur + 1));
    length += m.at(cur, *pick);
    visited[*pick] = 1;
    seq.push_back(*pick);
  }
  if (!m.allows(seq.back(), start))
    throw InfeasibleError("greedy walk cannot close its circuit");
  length += m.at(seq.back(), start);
  return {Path::closed(std::move(seq)), std::move(length), false};
}

namespace {

bool extend_hamiltonian(const std::vector<std::vector<char>>& adj,
                        std::vector<Vertex>& seq, std::vector<char>& used) {
  const std::size_t n = adj.size();
  if (seq.size() == n) return adj[seq.back()][seq.front()] != 0;
  for (Vertex v = 1; v < n; ++v) {
    if (used[v] || !adj[seq.back()][v]) continue;
    used[v] = 1;
    seq.push_back(v);
    if (extend_hamiltonian(adj, seq, used)) return true;
    seq.pop_back();
    used[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<Path> hamiltonian_in_edge_set(
    std::size_t n, const std::vector<VertexPair>& edges) {
  if (n < 3) return std::nullopt;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [i, j] : edges) {
    if (i >= n || j >= n || i == j) throw StructuralError("bad edge");
    adj[i][j] = adj[j][i] = 1;
  }
  std::vector<Vertex> seq{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  if (!extend_hamiltonian(adj, seq, used)) return std::nullopt;
  return Path::closed(std::move(seq));
}

SortedArcResult sorted_arc_search(const SymGraph& cyclic,
                                  const AdmissibilityMask* mask) {
  const std::size_t n = cyclic.size();
  {
    std::vector<Weight> sums(n);
    for (const auto& [i, j] : all_pairs(n)) {
      sums[i] += cyclic.at(i, j);
      sums[j] += cyclic.at(i, j);
    }
    for (const auto& s : sums)
      if (!s.is_zero())
        throw DomainError("sorted-arc search needs a cyclic component");
  }

  std::vector<VertexPair> ranking;
  for (const auto& e : all_pairs(n))
    if (mask == nullptr || mask->allows(e.first, e.second))
      ranking.push_back(e);
  std::stable_sort(ranking.begin(), ranking.end(),
                   [&](const VertexPair& a, const VertexPair& b) {
                     return cyclic.at(a.first, a.second) <
                            cyclic.at(b.first, b.second);
                   });
  const std::size_t total = ranking.size();
  auto weight = [&](std::size_t k) {
    return cyclic.at(ranking[k].first, ranking[k].second);
  };
  // Grow k past every edge that ties with edge k-1.
  auto close_class = [&](std::size_t k) {
    while (k > 0 && k < total && weight(k) == weight(k - 1)) ++k;
    return k;
  };

  const std::size_t initial = close_class(std::min(n, total));
  for (std::size_t k = initial;;) {
    std::vector<VertexPair> marked(ranking.begin(),
                                   ranking.begin() + static_cast<long>(k));
    if (hamiltonian_in_edge_set(n, marked)) {
      auto sparse = AdmissibilityMask::none(n);
      for (const auto& [i, j] : marked) sparse.allow(i, j);
      SearchSpec spec;
      spec.objective = Objective::shortest;
      spec.mask = std::move(sparse);
      spec.max_vertices = n;
      auto best = exhaustive_optimum(cyclic, spec);
      best.optimal = false;
      return {std::move(best), std::move(ranking), initial, k};
    }
    if (k == total)
      throw InfeasibleError("allowed edges contain no Hamiltonian circuit");
    k = close_class(k + 1);
  }
}

namespace {

void grow_circuits(std::size_t n, std::size_t min_size, std::vector<Vertex>& seq,
                   std::vector<char>& used, std::vector<Path>& out) {
  if (seq.size() >= min_size) out.push_back(Path::closed(seq));
  for (Vertex v = seq.front() + 1; v < n; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    seq.push_back(v);
    grow_circuits(n, min_size, seq, used, out);
    seq.pop_back();
    used[v] = 0;
  }
}

}  // namespace

std::vector<Path> simple_circuits(std::size_t n, std::size_t min_size) {
  std::vector<Path> out;
  min_size = std::max<std::size_t>(min_size, 2);
  std::vector<char> used(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> seq{s};
    used[s] = 1;
    grow_circuits(n, min_size, seq, used, out);
    used[s] = 0;
  }
  return out;
}

std::vector<Path> hamiltonian_circuits(std::size_t n) {
  std::vector<Vertex> rest;
  for (Vertex v = 1; v < n; ++v) rest.push_back(v);
  std::vector<Path> out;
  do {
    std::vector<Vertex> seq{0};
    seq.insert(seq.end(), rest.begin(), rest.end());
    out.push_back(Path::closed(std::move(seq)));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace essence::search
