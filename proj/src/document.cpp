#include "graph_essence/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace essence::io {

using nlohmann::json;

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::asymmetric: return "asymmetric";
    case GraphKind::symmetric: return "symmetric";
    case GraphKind::general: return "general";
  }
  return "?";
}

namespace {

std::size_t line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of every element of the top-level "edges" array, in order.
std::vector<std::size_t> edge_lines(std::string_view text) {
  std::vector<std::size_t> lines;
  int depth = 0;
  int edges_depth = -1;  // depth inside the edges array while in it
  bool key_is_edges = false;
  bool expect_element = false;
  std::string last_string;
  std::size_t line = 1;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '\n') {
      ++line;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (expect_element && depth == edges_depth && c != ']') {
      lines.push_back(line);
      expect_element = false;
    }
    if (c == '"') {
      std::string s;
      for (++k; k < text.size() && text[k] != '"'; ++k) {
        if (text[k] == '\\') ++k;
        else s += text[k];
      }
      last_string = std::move(s);
    } else if (c == ':') {
      key_is_edges = depth == 1 && last_string == "edges";
    } else if (c == '[' || c == '{') {
      ++depth;
      if (c == '[' && key_is_edges && edges_depth == -1) {
        edges_depth = depth;
        expect_element = true;
      }
      key_is_edges = false;
    } else if (c == ']' || c == '}') {
      if (depth == edges_depth) edges_depth = -2;
      --depth;
    } else if (c == ',' && depth == edges_depth) {
      expect_element = true;
    }
  }
  return lines;
}

Weight weight_of(const json& w, std::size_t line) {
  try {
    if (w.is_string()) return Weight::parse(w.get<std::string>());
    if (w.is_number_integer() || w.is_number_unsigned() || w.is_number_float())
      return Weight::parse(w.dump());
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) +
                         " (write non-decimal weights as strings, e.g. \"9/2\")",
                     line);
  }
  throw ParseError("weight must be a number or a string", line);
}

Vertex vertex_of(const json& obj, const char* key, std::size_t n,
                 std::size_t line) {
  if (!obj.contains(key)) throw ParseError(std::string("edge lacks '") + key + "'", line);
  const json& v = obj.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw ParseError(std::string("'") + key + "' must be an integer", line);
  const long long id = v.get<long long>();
  if (id < 1 || static_cast<std::size_t>(id) > n)
    throw ParseError("vertex id " + std::to_string(id) + " outside 1.." +
                         std::to_string(n),
                     line);
  return static_cast<Vertex>(id);
}

std::string pair_name(Vertex i, Vertex j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

GraphDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON", line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!root.is_object()) throw ParseError("document must be a JSON object", 1);

  GraphDocument doc;
  if (!root.contains("kind") || !root["kind"].is_string())
    throw ParseError("missing string field 'kind'", 1);
  const auto kind = root["kind"].get<std::string>();
  if (kind == "asymmetric") doc.kind = GraphKind::asymmetric;
  else if (kind == "symmetric") doc.kind = GraphKind::symmetric;
  else if (kind == "general") doc.kind = GraphKind::general;
  else throw ParseError("unknown kind '" + kind + "'", 1);

  if (!root.contains("n") || !root["n"].is_number_integer() ||
      root["n"].get<long long>() < 3)
    throw ParseError("'n' must be an integer >= 3", 1);
  doc.n = root["n"].get<std::size_t>();

  if (root.contains("complete")) {
    if (!root["complete"].is_boolean())
      throw ParseError("'complete' must be true or false", 1);
    doc.complete = root["complete"].get<bool>();
  }

  if (!root.contains("edges") || !root["edges"].is_array())
    throw ParseError("missing array field 'edges'", 1);
  const auto lines = edge_lines(text);
  const json& edges = root["edges"];
  std::map<VertexPair, std::size_t> seen;  // ordered arc -> line
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::size_t line = k < lines.size() ? lines[k] : 0;
    const json& e = edges[k];
    if (!e.is_object()) throw ParseError("edge must be an object", line);
    EdgeRecord r;
    r.line = line;
    r.i = vertex_of(e, "i", doc.n, line);
    r.j = vertex_of(e, "j", doc.n, line);
    if (r.i == r.j) throw ParseError("loop at vertex " + std::to_string(r.i), line);
    if (!e.contains("w")) throw ParseError("edge lacks 'w'", line);
    r.w = weight_of(e["w"], line);

    if (doc.kind == GraphKind::symmetric && r.i > r.j)
      throw ParseError("symmetric edges need i < j, got " + pair_name(r.i, r.j),
                       line);
    if (auto it = seen.find({r.i, r.j}); it != seen.end())
      throw ParseError("duplicate pair " + pair_name(r.i, r.j) +
                           " (first given on line " +
                           std::to_string(it->second) + ")",
                       line);
    if (doc.kind == GraphKind::asymmetric)
      if (auto it = seen.find({r.j, r.i}); it != seen.end())
        throw ParseError("asymmetric pair " + pair_name(r.j, r.i) +
                             " already given on line " +
                             std::to_string(it->second) +
                             "; give one direction only",
                         line);
    seen[{r.i, r.j}] = line;
    doc.edges.push_back(std::move(r));
  }

  if (doc.kind == GraphKind::general)
    for (const auto& r : doc.edges)
      if (!seen.count({r.j, r.i}))
        throw ParseError("general pair " + pair_name(r.i, r.j) +
                             " lacks the reverse arc " + pair_name(r.j, r.i),
                         r.line);

  if (doc.complete) {
    for (Vertex i = 1; i <= doc.n; ++i)
      for (Vertex j = i + 1; j <= doc.n; ++j)
        if (!seen.count({i, j}) && !seen.count({j, i}))
          throw ParseError("complete document lacks pair " + pair_name(i, j) +
                               "; set \"complete\": false to forbid it",
                           1);
  }
  return doc;
}

std::string serialize(const GraphDocument& doc) {
  std::ostringstream os;
  os << "{\n  \"kind\": \"" << to_string(doc.kind) << "\",\n  \"n\": " << doc.n
     << ",\n  \"complete\": " << (doc.complete ? "true" : "false")
     << ",\n  \"edges\": [";
  for (std::size_t k = 0; k < doc.edges.size(); ++k) {
    const auto& e = doc.edges[k];
    os << (k ? ",\n" : "\n") << "    {\"i\": " << e.i << ", \"j\": " << e.j
       << ", \"w\": \"" << e.w.str() << "\"}";
  }
  os << (doc.edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

BuiltGraph build_graph(const GraphDocument& doc, const Weight& fill) {
  const std::size_t n = doc.n;
  auto mask = AdmissibilityMask::none(n);
  for (const auto& e : doc.edges) mask.allow(e.i - 1, e.j - 1);

  auto fill_forbidden = [&](auto& g) {
    for (const auto& [i, j] : mask.forbidden_pairs()) {
      g.set(i, j, fill);
      if constexpr (std::is_same_v<std::decay_t<decltype(g)>, GeneralGraph>)
        g.set(j, i, fill);
    }
  };
  switch (doc.kind) {
    case GraphKind::asymmetric: {
      AsymGraph g(n);
      for (const auto& e : doc.edges) g.set(e.i - 1, e.j - 1, e.w);
      fill_forbidden(g);
      return {std::move(g), std::move(mask)};
    }
    case GraphKind::symmetric: {
      SymGraph g(n);
      for (const auto& e : doc.edges) g.set(e.i - 1, e.j - 1, e.w);
      fill_forbidden(g);
      return {std::move(g), std::move(mask)};
    }
    case GraphKind::general: {
      GeneralGraph g(n);
      for (const auto& e : doc.edges) g.set(e.i - 1, e.j - 1, e.w);
      fill_forbidden(g);
      return {std::move(g), std::move(mask)};
    }
  }
  throw StructuralError("unknown graph kind");
}

namespace {

template <typename Emit>
GraphDocument pairs_document(GraphKind kind, std::size_t n,
                             const AdmissibilityMask* mask, Emit emit) {
  GraphDocument doc;
  doc.kind = kind;
  doc.n = n;
  doc.complete = mask == nullptr || mask->is_complete();
  for (const auto& [i, j] : all_pairs(n))
    if (mask == nullptr || mask->allows(i, j)) emit(doc, i, j);
  return doc;
}

}  // namespace

GraphDocument to_document(const AsymGraph& g, const AdmissibilityMask* mask) {
  return pairs_document(GraphKind::asymmetric, g.size(), mask,
                        [&](GraphDocument& d, Vertex i, Vertex j) {
                          // Store the direction with the nonnegative weight.
                          if (g.at(i, j).sign() < 0)
                            d.edges.push_back({j + 1, i + 1, g.at(j, i), 0});
                          else
                            d.edges.push_back({i + 1, j + 1, g.at(i, j), 0});
                        });
}

GraphDocument to_document(const SymGraph& g, const AdmissibilityMask* mask) {
  return pairs_document(GraphKind::symmetric, g.size(), mask,
                        [&](GraphDocument& d, Vertex i, Vertex j) {
                          d.edges.push_back({i + 1, j + 1, g.at(i, j), 0});
                        });
}

GraphDocument to_document(const GeneralGraph& g, const AdmissibilityMask* mask) {
  return pairs_document(GraphKind::general, g.size(), mask,
                        [&](GraphDocument& d, Vertex i, Vertex j) {
                          d.edges.push_back({i + 1, j + 1, g.at(i, j), 0});
                          d.edges.push_back({j + 1, i + 1, g.at(j, i), 0});
                        });
}

GraphDocument to_document(const AnyGraph& g, const AdmissibilityMask* mask) {
  return std::visit([&](const auto& x) { return to_document(x, mask); }, g);
}

BuiltGraph load_graph(const std::string& path, const Weight& fill) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return build_graph(parse_document(buf.str()), fill);
}

}  // namespace essence::io
