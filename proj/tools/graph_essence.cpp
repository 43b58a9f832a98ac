// graph_essence: decompose, expand, bound, search and verify weighted graphs.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "graph_essence/asym_decomp.hpp"
#include "graph_essence/document.hpp"
#include "graph_essence/general_decomp.hpp"
#include "graph_essence/random.hpp"
#include "graph_essence/search.hpp"
#include "graph_essence/sym_decomp.hpp"
#include "graph_essence/verify.hpp"

using namespace essence;
using nlohmann::json;

namespace {

enum Exit { ok = 0, parse = 2, domain = 3, infeasible = 4, capacity = 5, invariant = 6 };

std::string join(const std::vector<Weight>& ws) {
  std::string out;
  for (std::size_t k = 0; k < ws.size(); ++k) out += (k ? ", " : "") + ws[k].str();
  return out;
}

json strings(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(w.str());
  return a;
}

std::string label(Vertex v) { return std::to_string(v + 1); }

std::string show(const Path& p) {
  std::string out;
  for (Vertex v : p.vertices()) out += (out.empty() ? "V" : " -> V") + label(v);
  if (p.is_closed()) out += " -> V" + label(p.front());
  return out;
}

// Arc list of a graph. Graphs with one value per pair print i < j only.
template <typename G>
void table_entries(std::ostream& os, const std::string& title, const G& g,
                   const AdmissibilityMask& mask, bool masked_as_inf) {
  os << title << ":\n";
  const bool both = std::is_same_v<G, GeneralGraph>;
  for (Vertex i = 0; i < g.size(); ++i)
    for (Vertex j = 0; j < g.size(); ++j) {
      if (i == j || (!both && j < i)) continue;
      os << "  d(" << label(i) << "," << label(j) << ") = ";
      if (masked_as_inf && !mask.allows(i, j)) os << "inf\n";
      else os << g.at(i, j) << "\n";
    }
}

template <typename G>
json json_entries(const G& g, const AdmissibilityMask& mask) {
  json a = json::array();
  const bool both = std::is_same_v<G, GeneralGraph>;
  for (Vertex i = 0; i < g.size(); ++i)
    for (Vertex j = 0; j < g.size(); ++j) {
      if (i == j || (!both && j < i)) continue;
      a.push_back({{"i", i + 1}, {"j", j + 1}, {"w", g.at(i, j).str()},
                   {"allowed", mask.allows(i, j)}});
    }
  return a;
}

// ---------------------------------------------------------------------------

struct DecomposeOpts {
  std::string file;
  bool json_out = false;
  std::string fill = "0";
};

int run_decompose(const DecomposeOpts& o) {
  auto built = io::load_graph(o.file, Weight::parse(o.fill));
  const auto& mask = built.mask;
  std::ostringstream os;
  json j;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        j["n"] = g.size();
        os << "n = " << g.size() << "\n";
        if constexpr (std::is_same_v<G, AsymGraph>) {
          const auto d = asym::decompose(g);
          j["kind"] = "asymmetric";
          j["potentials"] = strings(d.potentials);
          j["cpi"] = json_entries(d.cpi, mask);
          j["cyclic"] = json_entries(d.cyclic, mask);
          os << "kind = asymmetric\n"
             << "potentials = " << join(d.potentials) << "\n";
          table_entries(os, "cpi", d.cpi, mask, false);
          table_entries(os, "cyclic", d.cyclic, mask, true);
        } else if constexpr (std::is_same_v<G, SymGraph>) {
          const auto d = sym::decompose(g);
          j["kind"] = "symmetric";
          j["vertex_sums"] = strings(d.sums.sums);
          j["T"] = d.sums.total.str();
          j["omega"] = strings(d.omega);
          j["cpi"] = json_entries(d.cpi, mask);
          j["cyclic"] = json_entries(d.cyclic, mask);
          os << "kind = symmetric\n"
             << "vertex sums = " << join(d.sums.sums) << "\n"
             << "T = " << d.sums.total << "\n"
             << "omega = " << join(d.omega) << "\n";
          table_entries(os, "cpi", d.cpi, mask, false);
          table_entries(os, "cyclic", d.cyclic, mask, true);
        } else {
          const auto d = general::decompose(g);
          j["kind"] = "general";
          j["vertex_sums"] = strings(d.sym.sums.sums);
          j["T"] = d.sym.sums.total.str();
          j["omega"] = strings(d.sym.omega);
          j["potentials"] = strings(d.asym.potentials);
          j["average"] = json_entries(d.sym_part, mask);
          j["excess"] = json_entries(d.asym_part, mask);
          j["reduced"] = json_entries(d.reduced, mask);
          os << "kind = general\n"
             << "vertex sums = " << join(d.sym.sums.sums) << "\n"
             << "T = " << d.sym.sums.total << "\n"
             << "omega = " << join(d.sym.omega) << "\n"
             << "potentials = " << join(d.asym.potentials) << "\n";
          table_entries(os, "average", d.sym_part, mask, false);
          table_entries(os, "excess", d.asym_part, mask, false);
          table_entries(os, "reduced", d.reduced, mask, true);
        }
      },
      built.graph);
  if (!mask.is_complete()) {
    json forbidden = json::array();
    os << "forbidden =";
    for (const auto& [a, b] : mask.forbidden_pairs()) {
      forbidden.push_back({a + 1, b + 1});
      os << " {" << label(a) << "," << label(b) << "}";
    }
    os << "\n";
    j["forbidden"] = forbidden;
  }
  std::cout << (o.json_out ? j.dump(2) + "\n" : os.str());
  return ok;
}

// ---------------------------------------------------------------------------

struct AnalyzeOpts {
  std::string file;
  std::string objective = "shortest";
  std::string subset;
  bool exact = false, greedy = false, sorted_arc = false;
  int start = 0;
  std::size_t max_n = 0;
  std::string on = "component";
  std::string fill = "0";
};

std::vector<Vertex> parse_subset(const std::string& text, std::size_t n) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw DomainError("bad subset entry '" + item + "'");
    }
    if (pos != item.size() || v < 1 || static_cast<std::size_t>(v) > n)
      throw DomainError("bad subset entry '" + item + "'");
    out.push_back(static_cast<Vertex>(v - 1));
  }
  return out;
}

int run_analyze(const AnalyzeOpts& o) {
  auto built = io::load_graph(o.file, Weight::parse(o.fill));
  const std::size_t n = std::visit([](const auto& g) { return g.size(); }, built.graph);
  search::SearchSpec spec;
  spec.objective = search::parse_objective(o.objective);
  if (!o.subset.empty()) spec.subset = parse_subset(o.subset, n);
  if (!built.mask.is_complete()) spec.mask = built.mask;
  if (o.start != 0) {
    if (o.start < 1 || static_cast<std::size_t>(o.start) > n)
      throw DomainError("start vertex out of range");
    spec.start = static_cast<Vertex>(o.start - 1);
  }
  if (o.max_n != 0) spec.max_vertices = o.max_n;
  if (o.greedy && !spec.start) throw DomainError("--greedy needs --start");
  if (o.on != "component" && o.on != "original")
    throw DomainError("--on must be 'component' or 'original'");
  const bool on_original = o.on == "original";
  const char* solver = o.greedy ? "greedy" : o.sorted_arc ? "sorted-arc" : "exact";

  std::ostringstream os;
  os << "solver = " << solver << "\n"
     << "objective = " << o.objective << "\n";

  auto solve = [&](const auto& target, const char* name) {
    os << "searched = " << name << "\n";
    if (o.greedy) return search::greedy_neighbor(target, spec);
    return search::exhaustive_optimum(target, spec);
  };

  std::optional<search::SearchResult> result;
  Weight original;
  Weight direct;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, AsymGraph>) {
          if (o.sorted_arc) throw DomainError("sorted-arc search needs a symmetric graph");
          const auto d = asym::decompose(g);
          result = on_original ? solve(g, "original") : solve(d.cyclic, "cyclic");
          original = path_length(d.cyclic, result->path);
        } else if constexpr (std::is_same_v<G, SymGraph>) {
          const auto d = sym::decompose(g);
          if (o.sorted_arc) {
            if (spec.subset) throw DomainError("sorted-arc search covers all vertices");
            const AdmissibilityMask* m = spec.mask ? &*spec.mask : nullptr;
            auto r = search::sorted_arc_search(d.cyclic, m);
            os << "searched = cyclic\n"
               << "marked edges = " << r.initial_marked << " initially, "
               << r.final_marked << " finally\n";
            result = std::move(r.result);
            if (spec.start) {
              auto vs = std::vector<Vertex>(result->path.vertices().begin(),
                                            result->path.vertices().end());
              std::rotate(vs.begin(), std::find(vs.begin(), vs.end(), *spec.start), vs.end());
              result->path = Path::closed(std::move(vs));
            }
          } else {
            result = on_original ? solve(g, "original") : solve(d.cyclic, "cyclic");
          }
          original = sym::subset_path_length_via(d, result->path);
        } else {
          if (o.sorted_arc) throw DomainError("sorted-arc search needs a symmetric graph");
          const auto d = general::decompose(g);
          result = on_original ? solve(g, "original") : solve(d.reduced, "reduced");
          original = general::path_length_via(d, result->path);
        }
        direct = path_length(g, result->path);
      },
      built.graph);

  os << "circuit = " << show(result->path) << "\n"
     << "length = " << result->length << "\n"
     << "original length = " << original << "\n"
     << "optimal = " << (result->optimal ? "yes" : "unknown") << "\n";
  std::cout << os.str();
  if (original != direct) {
    std::cerr << "invariant violated: direct evaluation gives " << direct << "\n";
    return invariant;
  }
  return ok;
}

// ---------------------------------------------------------------------------

int run_expand(const std::string& file) {
  auto built = io::load_graph(file);
  std::ostringstream os;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        auto asym_part = [&](const AsymGraph& cyclic) {
          const auto e = asym::three_cycle_expansion(cyclic);
          os << "three-cycles (V" << label(e.anchor) << " -> Vj -> Vk):\n";
          for (const auto& [jk, c] : e.coeffs)
            os << "  t(" << label(e.anchor) << "," << label(jk.first) << ","
               << label(jk.second) << ") = " << c << "\n";
        };
        auto sym_part = [&](const SymGraph& cyclic) {
          const auto e = sym::four_cycle_expansion(cyclic);
          os << "four-cycles (" << e.size() << " coefficients):\n";
          for (const auto& [jk, c] : e.a)
            os << "  b(1,2," << label(jk.first) << "," << label(jk.second)
               << ") = " << c << "\n";
          for (const auto& [j, c] : e.b)
            os << "  b(1,2," << label(j) << ",3) = " << c << "\n";
        };
        if constexpr (std::is_same_v<G, AsymGraph>) {
          asym_part(asym::decompose(g).cyclic);
        } else if constexpr (std::is_same_v<G, SymGraph>) {
          sym_part(sym::decompose(g).cyclic);
        } else {
          const auto d = general::decompose(g);
          sym_part(d.sym.cyclic);
          asym_part(d.asym.cyclic);
        }
      },
      built.graph);
  std::cout << os.str();
  return ok;
}

int run_bound(const std::string& file, const std::string& fill) {
  auto built = io::load_graph(file, Weight::parse(fill));
  const auto* g = std::get_if<SymGraph>(&built.graph);
  if (g == nullptr) throw DomainError("bounds are defined for symmetric graphs");
  const auto d = sym::decompose(*g);
  const auto b = sym::hamiltonian_bounds(d, built.mask.is_complete() ? nullptr : &built.mask);
  std::cout << "[" << b.lower << ", " << b.upper << "]\n";
  return ok;
}

// ---------------------------------------------------------------------------

template <typename G>
bool report_failure(const G& g, const AdmissibilityMask* mask,
                    const std::string& where) {
  const auto found = verify::verify_graph(g, mask);
  if (found.empty()) return false;
  std::cout << where << ": FAILED " << found.front().check;
  if (!found.front().detail.empty()) std::cout << " (" << found.front().detail << ")";
  std::cout << "\n";
  const std::string check = found.front().check;
  const G small = verify::shrink_counterexample<G>(g, [&](const G& t) {
    for (const auto& v : verify::verify_graph(t, mask))
      if (v.check == check) return true;
    return false;
  });
  std::cout << "counterexample:\n" << io::serialize(io::to_document(small, mask));
  return true;
}

int run_verify(const std::string& file, std::size_t trials, std::uint64_t seed) {
  auto built = io::load_graph(file);
  const AdmissibilityMask* mask = built.mask.is_complete() ? nullptr : &built.mask;
  bool failed = std::visit(
      [&](const auto& g) { return report_failure(g, mask, "file"); }, built.graph);
  if (!failed) std::cout << "file: ok\n";

  rnd::Rng rng(seed);
  std::size_t passed = 0;
  for (std::size_t t = 0; t < trials && !failed; ++t) {
    const std::string where = "random graph " + std::to_string(t + 1);
    failed = std::visit(
        [&](const auto& g) {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, AsymGraph>)
            return report_failure(rnd::random_asym(g.size(), rng), nullptr, where);
          else if constexpr (std::is_same_v<G, SymGraph>)
            return report_failure(rnd::random_sym(g.size(), rng), nullptr, where);
          else
            return report_failure(rnd::random_general(g.size(), rng), nullptr, where);
        },
        built.graph);
    if (!failed) ++passed;
  }
  std::cout << "random: " << passed << " of " << trials << " ok (seed " << seed << ")\n";
  return failed ? invariant : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose weighted graphs into cpi and cyclic components"};
  app.require_subcommand(1);

  DecomposeOpts dec;
  auto* c_dec = app.add_subcommand("decompose", "Print the cpi and cyclic components");
  c_dec->add_option("file", dec.file, "Graph document")->required();
  auto* f_json = c_dec->add_flag("--json", dec.json_out, "JSON output");
  auto* f_table = c_dec->add_flag("--table", "Table output (default)");
  f_json->excludes(f_table);
  c_dec->add_option("--fill", dec.fill, "Weight given to forbidden pairs");

  AnalyzeOpts an;
  auto* c_an = app.add_subcommand("analyze", "Search circuits on the cyclic or reduced component");
  c_an->add_option("file", an.file, "Graph document")->required();
  c_an->add_option("--objective", an.objective, "shortest or longest")->required();
  c_an->add_option("--subset", an.subset, "Circuit vertex set, e.g. 1,2,4,5");
  auto* f_exact = c_an->add_flag("--exact", an.exact, "Exhaustive search (default)");
  auto* f_greedy = c_an->add_flag("--greedy", an.greedy, "Greedy nearest neighbour");
  auto* f_sorted = c_an->add_flag("--sorted-arc", an.sorted_arc, "Sorted-arc marking");
  f_exact->excludes(f_greedy)->excludes(f_sorted);
  f_greedy->excludes(f_sorted);
  c_an->add_option("--start", an.start, "Start vertex (1-based)");
  c_an->add_option("--max-n", an.max_n, "Override the exhaustive search vertex limit");
  c_an->add_option("--on", an.on, "component (default) or original");
  c_an->add_option("--fill", an.fill, "Weight given to forbidden pairs");

  std::string expand_file;
  auto* c_exp = app.add_subcommand("expand", "Cycle-basis coefficients of the cyclic component");
  c_exp->add_option("file", expand_file, "Graph document")->required();

  std::string bound_file, bound_fill = "0";
  auto* c_bnd = app.add_subcommand("bound", "Bounds on the shortest Hamiltonian circuit");
  c_bnd->add_option("file", bound_file, "Symmetric graph document")->required();
  c_bnd->add_option("--fill", bound_fill, "Weight given to forbidden pairs");

  std::string verify_file;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  auto* c_ver = app.add_subcommand("verify", "Check decomposition invariants");
  c_ver->add_option("file", verify_file, "Graph document")->required();
  c_ver->add_option("--trials", trials, "Random graphs of the same kind and size");
  c_ver->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return parse;
  }

  try {
    if (*c_dec) return run_decompose(dec);
    if (*c_an) return run_analyze(an);
    if (*c_exp) return run_expand(expand_file);
    if (*c_bnd) return run_bound(bound_file, bound_fill);
    if (*c_ver) return run_verify(verify_file, trials, seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return infeasible;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return capacity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return domain;
  }
  return ok;
}
