#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graph_essence/errors.hpp"
#include "graph_essence/weight.hpp"

namespace essence {

// Internal vertex index, 0-based. Documents, CLI output and error messages
// use the 1-based labels V_1..V_n.
using Vertex = std::size_t;
using VertexPair = std::pair<Vertex, Vertex>;

// Number of unordered pairs of n vertices.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Position of {i, j} (i < j) in the lexicographic order
// (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
constexpr std::size_t pair_index(std::size_t n, Vertex i, Vertex j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Every unordered pair in pair_index order.
std::vector<VertexPair> all_pairs(std::size_t n);

// Which unordered pairs may be traversed. Applies to both arc directions.
class AdmissibilityMask {
 public:
  static AdmissibilityMask all(std::size_t n);
  static AdmissibilityMask none(std::size_t n);

  std::size_t size() const { return n_; }
  bool allows(Vertex i, Vertex j) const;
  void allow(Vertex i, Vertex j) { assign(i, j, true); }
  void forbid(Vertex i, Vertex j) { assign(i, j, false); }

  bool is_complete() const;
  std::vector<VertexPair> forbidden_pairs() const;

  friend bool operator==(const AdmissibilityMask&,
                         const AdmissibilityMask&) = default;

 private:
  AdmissibilityMask(std::size_t n, bool value)
      : n_(n), allowed_(pair_count(n), value ? 1 : 0) {}
  void assign(Vertex i, Vertex j, bool value);

  std::size_t n_ = 0;
  std::vector<char> allowed_;
};

enum class PairSymmetry { skew, symmetric };

// Complete graph whose costs are determined by one value per unordered pair.
// skew:      d(j,i) = -d(i,j)   (excess-cost graphs)
// symmetric: d(j,i) =  d(i,j)
// Only the i<j triangle is stored; the sign convention lives in at().
template <PairSymmetry S>
class PairGraph {
 public:
  static constexpr PairSymmetry symmetry = S;

  // Zero graph on n >= 3 vertices.
  explicit PairGraph(std::size_t n);
  // Entries in pair_index order.
  PairGraph(std::size_t n, std::vector<Weight> upper);

  std::size_t size() const { return n_; }

  // d(i,j) for any i, j < n; d(i,i) = 0.
  Weight at(Vertex i, Vertex j) const;
  // Sets d(i,j) (and implicitly d(j,i) by the pair convention).
  void set(Vertex i, Vertex j, const Weight& w);

  std::span<const Weight> upper() const { return upper_; }
  const Weight& upper(std::size_t index) const { return upper_[index]; }

  bool is_zero() const;

  PairGraph& operator+=(const PairGraph& rhs);
  PairGraph& operator-=(const PairGraph& rhs);
  PairGraph& operator*=(const Weight& factor);
  friend PairGraph operator+(PairGraph a, const PairGraph& b) { return a += b; }
  friend PairGraph operator-(PairGraph a, const PairGraph& b) { return a -= b; }
  friend PairGraph operator*(PairGraph a, const Weight& f) { return a *= f; }
  friend PairGraph operator*(const Weight& f, PairGraph a) { return a *= f; }
  PairGraph operator-() const { return *this * Weight(-1); }

  friend bool operator==(const PairGraph& a, const PairGraph& b) {
    return a.n_ == b.n_ && a.upper_ == b.upper_;
  }

 private:
  void check_vertex(Vertex v) const;
  void check_same_size(const PairGraph& rhs) const;

  std::size_t n_;
  std::vector<Weight> upper_;
};

using AsymGraph = PairGraph<PairSymmetry::skew>;
using SymGraph = PairGraph<PairSymmetry::symmetric>;

extern template class PairGraph<PairSymmetry::skew>;
extern template class PairGraph<PairSymmetry::symmetric>;

// Complete directed graph with both arc directions stored independently.
class GeneralGraph {
 public:
  explicit GeneralGraph(std::size_t n);

  std::size_t size() const { return n_; }
  Weight at(Vertex i, Vertex j) const;
  void set(Vertex i, Vertex j, const Weight& w);

  bool is_zero() const;

  GeneralGraph& operator+=(const GeneralGraph& rhs);
  GeneralGraph& operator-=(const GeneralGraph& rhs);
  GeneralGraph& operator*=(const Weight& factor);
  friend GeneralGraph operator+(GeneralGraph a, const GeneralGraph& b) {
    return a += b;
  }
  friend GeneralGraph operator-(GeneralGraph a, const GeneralGraph& b) {
    return a -= b;
  }
  friend GeneralGraph operator*(GeneralGraph a, const Weight& f) {
    return a *= f;
  }
  friend GeneralGraph operator*(const Weight& f, GeneralGraph a) {
    return a *= f;
  }

  friend bool operator==(const GeneralGraph&, const GeneralGraph&) = default;

 private:
  void check_vertex(Vertex v) const;
  void check_same_size(const GeneralGraph& rhs) const;

  std::size_t n_;
  std::vector<Weight> arcs_;  // row-major n*n, diagonal unused (zero)
};

// Sum over unordered pairs of d1(i,j) * d2(i,j), i<j representative.
template <PairSymmetry S>
Weight inner_product(const PairGraph<S>& a, const PairGraph<S>& b);
// Sum over all ordered arcs.
Weight inner_product(const GeneralGraph& a, const GeneralGraph& b);

// Vertex sequence; a closed path returns from the last vertex to the first
// without repeating it. Vertices may be revisited, but never consecutively.
class Path {
 public:
  static Path open(std::vector<Vertex> vertices);
  static Path closed(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const { return vertices_; }
  bool is_closed() const { return closed_; }
  std::size_t size() const { return vertices_.size(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  // Traversed arcs in order, including the closing arc of a closed path.
  std::vector<VertexPair> arcs() const;

  Path reversed() const;

  // True when closed and each of the n vertices appears exactly once.
  bool is_hamiltonian(std::size_t n) const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  Path(std::vector<Vertex> vertices, bool closed);

  std::vector<Vertex> vertices_;
  bool closed_;
};

template <typename G>
concept ArcWeighted = requires(const G& g, Vertex i, Vertex j) {
  { g.size() } -> std::convertible_to<std::size_t>;
  { g.at(i, j) } -> std::convertible_to<Weight>;
};

// Sum of arc weights along p (closing arc included when p is closed).
// Throws AdmissibilityError if p traverses a pair the mask forbids.
template <ArcWeighted G>
Weight path_length(const G& g, const Path& p,
                   const AdmissibilityMask* mask = nullptr) {
  Weight total;
  for (const auto& [from, to] : p.arcs()) {
    if (from >= g.size() || to >= g.size())
      throw StructuralError("path vertex out of range");
    if (mask != nullptr && !mask->allows(from, to))
      throw AdmissibilityError("path uses forbidden pair {V" +
                               std::to_string(from + 1) + ", V" +
                               std::to_string(to + 1) + "}");
    total += g.at(from, to);
  }
  return total;
}

template <ArcWeighted G>
Weight path_length(const G& g, const Path& p, const AdmissibilityMask& mask) {
  return path_length(g, p, &mask);
}

}  // namespace essence
