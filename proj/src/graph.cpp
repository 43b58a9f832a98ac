#include "graph_essence/graph.hpp"

#include <algorithm>
#include <string>

namespace essence {

std::vector<VertexPair> all_pairs(std::size_t n) {
  std::vector<VertexPair> pairs;
  pairs.reserve(pair_count(n));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

// ---------------------------------------------------------------------------
// AdmissibilityMask

AdmissibilityMask AdmissibilityMask::all(std::size_t n) { return {n, true}; }
AdmissibilityMask AdmissibilityMask::none(std::size_t n) { return {n, false}; }

bool AdmissibilityMask::allows(Vertex i, Vertex j) const {
  if (i >= n_ || j >= n_) throw StructuralError("mask vertex out of range");
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return allowed_[pair_index(n_, i, j)] != 0;
}

void AdmissibilityMask::assign(Vertex i, Vertex j, bool value) {
  if (i >= n_ || j >= n_ || i == j)
    throw StructuralError("mask pair out of range");
  if (i > j) std::swap(i, j);
  allowed_[pair_index(n_, i, j)] = value ? 1 : 0;
}

bool AdmissibilityMask::is_complete() const {
  return std::all_of(allowed_.begin(), allowed_.end(),
                     [](char c) { return c != 0; });
}

std::vector<VertexPair> AdmissibilityMask::forbidden_pairs() const {
  std::vector<VertexPair> out;
  for (const auto& [i, j] : all_pairs(n_))
    if (!allowed_[pair_index(n_, i, j)]) out.emplace_back(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// PairGraph

template <PairSymmetry S>
PairGraph<S>::PairGraph(std::size_t n) : n_(n), upper_(pair_count(n)) {
  if (n < 3) throw StructuralError("graphs need at least 3 vertices");
}

template <PairSymmetry S>
PairGraph<S>::PairGraph(std::size_t n, std::vector<Weight> upper)
    : n_(n), upper_(std::move(upper)) {
  if (n < 3) throw StructuralError("graphs need at least 3 vertices");
  if (upper_.size() != pair_count(n))
    throw StructuralError("expected " + std::to_string(pair_count(n)) +
                          " pair entries, got " +
                          std::to_string(upper_.size()));
}

template <PairSymmetry S>
void PairGraph<S>::check_vertex(Vertex v) const {
  if (v >= n_)
    throw StructuralError("vertex " + std::to_string(v + 1) +
                          " out of range for n = " + std::to_string(n_));
}

template <PairSymmetry S>
void PairGraph<S>::check_same_size(const PairGraph& rhs) const {
  if (rhs.n_ != n_) throw StructuralError("graph size mismatch");
}

template <PairSymmetry S>
Weight PairGraph<S>::at(Vertex i, Vertex j) const {
  check_vertex(i);
  check_vertex(j);
  if (i == j) return {};
  if (i < j) return upper_[pair_index(n_, i, j)];
  const Weight& w = upper_[pair_index(n_, j, i)];
  if constexpr (S == PairSymmetry::skew)
    return -w;
  else
    return w;
}

template <PairSymmetry S>
void PairGraph<S>::set(Vertex i, Vertex j, const Weight& w) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw StructuralError("graphs have no loops");
  if (i < j) {
    upper_[pair_index(n_, i, j)] = w;
  } else if constexpr (S == PairSymmetry::skew) {
    upper_[pair_index(n_, j, i)] = -w;
  } else {
    upper_[pair_index(n_, j, i)] = w;
  }
}

template <PairSymmetry S>
bool PairGraph<S>::is_zero() const {
  return std::all_of(upper_.begin(), upper_.end(),
                     [](const Weight& w) { return w.is_zero(); });
}

template <PairSymmetry S>
PairGraph<S>& PairGraph<S>::operator+=(const PairGraph& rhs) {
  check_same_size(rhs);
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] += rhs.upper_[k];
  return *this;
}

template <PairSymmetry S>
PairGraph<S>& PairGraph<S>::operator-=(const PairGraph& rhs) {
  check_same_size(rhs);
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] -= rhs.upper_[k];
  return *this;
}

template <PairSymmetry S>
PairGraph<S>& PairGraph<S>::operator*=(const Weight& factor) {
  for (auto& w : upper_) w *= factor;
  return *this;
}

template class PairGraph<PairSymmetry::skew>;
template class PairGraph<PairSymmetry::symmetric>;

template <PairSymmetry S>
Weight inner_product(const PairGraph<S>& a, const PairGraph<S>& b) {
  if (a.size() != b.size()) throw StructuralError("graph size mismatch");
  Weight total;
  for (std::size_t k = 0; k < a.upper().size(); ++k)
    total += a.upper(k) * b.upper(k);
  return total;
}

template Weight inner_product(const AsymGraph&, const AsymGraph&);
template Weight inner_product(const SymGraph&, const SymGraph&);

// ---------------------------------------------------------------------------
// GeneralGraph

GeneralGraph::GeneralGraph(std::size_t n) : n_(n), arcs_(n * n) {
  if (n < 3) throw StructuralError("graphs need at least 3 vertices");
}

void GeneralGraph::check_vertex(Vertex v) const {
  if (v >= n_)
    throw StructuralError("vertex " + std::to_string(v + 1) +
                          " out of range for n = " + std::to_string(n_));
}

void GeneralGraph::check_same_size(const GeneralGraph& rhs) const {
  if (rhs.n_ != n_) throw StructuralError("graph size mismatch");
}

Weight GeneralGraph::at(Vertex i, Vertex j) const {
  check_vertex(i);
  check_vertex(j);
  return arcs_[i * n_ + j];
}

void GeneralGraph::set(Vertex i, Vertex j, const Weight& w) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw StructuralError("graphs have no loops");
  arcs_[i * n_ + j] = w;
}

bool GeneralGraph::is_zero() const {
  return std::all_of(arcs_.begin(), arcs_.end(),
                     [](const Weight& w) { return w.is_zero(); });
}

GeneralGraph& GeneralGraph::operator+=(const GeneralGraph& rhs) {
  check_same_size(rhs);
  for (std::size_t k = 0; k < arcs_.size(); ++k) arcs_[k] += rhs.arcs_[k];
  return *this;
}

GeneralGraph& GeneralGraph::operator-=(const GeneralGraph& rhs) {
  check_same_size(rhs);
  for (std::size_t k = 0; k < arcs_.size(); ++k) arcs_[k] -= rhs.arcs_[k];
  return *this;
}

GeneralGraph& GeneralGraph::operator*=(const Weight& factor) {
  for (auto& w : arcs_) w *= factor;
  return *this;
}

Weight inner_product(const GeneralGraph& a, const GeneralGraph& b) {
  if (a.size() != b.size()) throw StructuralError("graph size mismatch");
  Weight total;
  for (Vertex i = 0; i < a.size(); ++i)
    for (Vertex j = 0; j < a.size(); ++j)
      if (i != j) total += a.at(i, j) * b.at(i, j);
  return total;
}

// ---------------------------------------------------------------------------
// Path

Path::Path(std::vector<Vertex> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  if (vertices_.empty()) throw StructuralError("empty path");
  for (std::size_t k = 1; k < vertices_.size(); ++k)
    if (vertices_[k] == vertices_[k - 1])
      throw StructuralError("path repeats V" + std::to_string(vertices_[k] + 1) +
                            " consecutively");
  if (closed_ && vertices_.size() > 1 && vertices_.front() == vertices_.back())
    throw StructuralError(
        "closed path must not repeat its first vertex at the end");
}

Path Path::open(std::vector<Vertex> vertices) {
  return Path(std::move(vertices), false);
}

Path Path::closed(std::vector<Vertex> vertices) {
  return Path(std::move(vertices), true);
}

std::vector<VertexPair> Path::arcs() const {
  std::vector<VertexPair> out;
  for (std::size_t k = 1; k < vertices_.size(); ++k)
    out.emplace_back(vertices_[k - 1], vertices_[k]);
  if (closed_ && vertices_.size() > 1)
    out.emplace_back(vertices_.back(), vertices_.front());
  return out;
}

Path Path::reversed() const {
  std::vector<Vertex> rev(vertices_.rbegin(), vertices_.rend());
  if (closed_) {
    // Keep the same starting vertex: v0, v_{m-1}, ..., v1.
    std::rotate(rev.begin(), rev.end() - 1, rev.end());
  }
  return Path(std::move(rev), closed_);
}

bool Path::is_hamiltonian(std::size_t n) const {
  if (!closed_ || vertices_.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : vertices_) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace essence
