#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "graph_essence/graph.hpp"

namespace essence::testing {

// Builders take 1-based labels and pair values in (1,2), (1,3), ... order.
template <typename G>
G from_upper(std::size_t n, std::initializer_list<long> values) {
  std::vector<Weight> w(values.begin(), values.end());
  return G(n, std::move(w));
}

inline std::vector<Vertex> zero_based(std::initializer_list<Vertex> labels) {
  std::vector<Vertex> out;
  for (Vertex v : labels) out.push_back(v - 1);
  return out;
}

inline Path closed1(std::initializer_list<Vertex> labels) {
  return Path::closed(zero_based(labels));
}

inline Path open1(std::initializer_list<Vertex> labels) {
  return Path::open(zero_based(labels));
}

inline std::vector<Weight> weights(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

inline std::string fixture(const std::string& name) {
  return std::string(GRAPH_ESSENCE_FIXTURES) + "/" + name + ".json";
}

}  // namespace essence::testing
