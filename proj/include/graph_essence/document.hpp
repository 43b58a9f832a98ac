#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graph_essence/graph.hpp"

namespace essence::io {

enum class GraphKind { asymmetric, symmetric, general };

std::string_view to_string(GraphKind kind);

struct EdgeRecord {
  Vertex i = 0;  // 1-based, as written
  Vertex j = 0;
  Weight w;
  std::size_t line = 0;
};

struct GraphDocument {
  GraphKind kind = GraphKind::symmetric;
  std::size_t n = 0;
  bool complete = true;
  std::vector<EdgeRecord> edges;
};

// Reads and validates a document. Errors carry the offending line.
GraphDocument parse_document(std::string_view text);

std::string serialize(const GraphDocument& doc);

using AnyGraph = std::variant<AsymGraph, SymGraph, GeneralGraph>;

struct BuiltGraph {
  AnyGraph graph;
  AdmissibilityMask mask;
};

// Pairs absent from an incomplete document are forbidden and get `fill`.
BuiltGraph build_graph(const GraphDocument& doc, const Weight& fill = 0);

GraphDocument to_document(const AsymGraph& g,
                          const AdmissibilityMask* mask = nullptr);
GraphDocument to_document(const SymGraph& g,
                          const AdmissibilityMask* mask = nullptr);
GraphDocument to_document(const GeneralGraph& g,
                          const AdmissibilityMask* mask = nullptr);
GraphDocument to_document(const AnyGraph& g,
                          const AdmissibilityMask* mask = nullptr);

// parse_document + build_graph on a file. Throws ParseError on I/O failure.
BuiltGraph load_graph(const std::string& path, const Weight& fill = 0);

}  // namespace essence::io
