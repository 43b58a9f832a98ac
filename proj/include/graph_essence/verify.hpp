#pragma once

#include <functional>
#include <string>
#include <vector>

#include "graph_essence/graph.hpp"

namespace essence::verify {

struct Violation {
  std::string check;
  std::string detail;
};

// Runs every decomposition invariant for the graph's kind. Closed-path
// checks enumerate all simple circuits for n <= 7 and sample otherwise; paths
// are restricted to the mask when one is given. An empty result means pass.
std::vector<Violation> verify_graph(const AsymGraph& g,
                                    const AdmissibilityMask* mask = nullptr);
std::vector<Violation> verify_graph(const SymGraph& g,
                                    const AdmissibilityMask* mask = nullptr);
std::vector<Violation> verify_graph(const GeneralGraph& g,
                                    const AdmissibilityMask* mask = nullptr);

// Greedily zeroes entries while `fails` keeps returning true.
template <typename G>
G shrink_counterexample(G g, const std::function<bool(const G&)>& fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex i = 0; i < g.size(); ++i)
      for (Vertex j = 0; j < g.size(); ++j) {
        if (i == j || g.at(i, j).is_zero()) continue;
        G trial = g;
        trial.set(i, j, 0);
        if (fails(trial)) {
          g = std::move(trial);
          changed = true;
        }
      }
  }
  return g;
}

}  // namespace essence::verify
