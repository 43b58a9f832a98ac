#include "graph_essence/verify.hpp"

#include <sstream>

#include "graph_essence/asym_decomp.hpp"
#include "graph_essence/basis.hpp"
#include "graph_essence/general_decomp.hpp"
#include "graph_essence/random.hpp"
#include "graph_essence/search.hpp"
#include "graph_essence/sym_decomp.hpp"

namespace essence::verify {

namespace {

constexpr std::size_t kFullEnumeration = 7;
constexpr std::size_t kSamples = 300;

std::string show(const Path& p) {
  std::ostringstream os;
  for (std::size_t k = 0; k < p.size(); ++k)
    os << (k ? "->" : "") << "V" << p.vertices()[k] + 1;
  if (p.is_closed()) os << "->V" << p.front() + 1;
  return os.str();
}

bool admissible(const Path& p, const AdmissibilityMask* mask) {
  if (mask == nullptr) return true;
  for (const auto& [a, b] : p.arcs())
    if (!mask->allows(a, b)) return false;
  return true;
}

// Closed paths to test: every simple circuit when small, plus random walks.
std::vector<Path> closed_paths(std::size_t n, const AdmissibilityMask* mask) {
  std::vector<Path> out;
  rnd::Rng rng(n);
  if (n <= kFullEnumeration) {
    for (auto& p : search::simple_circuits(n))
      if (admissible(p, mask)) out.push_back(std::move(p));
  }
  for (std::size_t k = 0; k < kSamples; ++k) {
    auto p = rnd::random_closed_path(n, 2 + k % (2 * n), rng);
    if (admissible(p, mask)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Path> open_paths(std::size_t n, const AdmissibilityMask* mask) {
  std::vector<Path> out;
  rnd::Rng rng(n + 1000);
  for (std::size_t k = 0; k < kSamples; ++k) {
    auto p = rnd::random_open_path(n, 1 + k % (2 * n), rng);
    if (admissible(p, mask)) out.push_back(std::move(p));
  }
  return out;
}

struct Collector {
  std::vector<Violation> found;
  void expect(bool ok, const std::string& check, const std::string& detail = {}) {
    if (!ok) found.push_back({check, detail});
  }
};

std::string mismatch(const Path& p, const Weight& a, const Weight& b) {
  return show(p) + ": " + a.str() + " != " + b.str();
}

}  // namespace

std::vector<Violation> verify_graph(const AsymGraph& g,
                                    const AdmissibilityMask* mask) {
  Collector c;
  const std::size_t n = g.size();
  const auto d = asym::decompose(g);
  c.expect(d.cpi + d.cyclic == g, "reconstruction");
  c.expect(inner_product(d.cpi, d.cyclic).is_zero(), "orthogonality");
  Weight sum;
  for (const auto& s : d.potentials) sum += s;
  c.expect(sum.is_zero(), "potentials sum to zero");
  c.expect(asym::is_cyclic(d.cyclic), "cyclic potentials vanish");
  c.expect(asym::is_strongly_transitive(d.cpi), "cpi strongly transitive");
  c.expect(asym::decompose(d.cpi).cyclic.is_zero() &&
               asym::decompose(d.cyclic).cpi.is_zero(),
           "idempotence");
  c.expect(asym::three_cycle_expansion(d.cyclic).reconstruct() == d.cyclic,
           "three-cycle round trip");
  for (const auto& t : three_cycle_basis(n))
    if (!inner_product(t, d.cpi).is_zero()) {
      c.expect(false, "basis cycles orthogonal to cpi");
      break;
    }

  for (const auto& p : closed_paths(n, mask)) {
    const Weight a = path_length(g, p), b = path_length(d.cyclic, p);
    if (a != b) {
      c.expect(false, "closed-path invariance", mismatch(p, a, b));
      break;
    }
    if (path_length(g, p.reversed()) != -a) {
      c.expect(false, "reversal antisymmetry", show(p));
      break;
    }
  }
  for (const auto& p : open_paths(n, mask)) {
    const Weight a = path_length(g, p);
    const Weight b = asym::connected_path_length_via(d, p);
    if (a != b) {
      c.expect(false, "open-path transfer", mismatch(p, a, b));
      break;
    }
    if (path_length(d.cpi, p) != d.cpi.at(p.front(), p.back())) {
      c.expect(false, "cpi path equals endpoint arc", show(p));
      break;
    }
  }
  return c.found;
}

std::vector<Violation> verify_graph(const SymGraph& g,
                                    const AdmissibilityMask* mask) {
  Collector c;
  const std::size_t n = g.size();
  const auto d = sym::decompose(g);
  c.expect(d.cpi + d.cyclic == g, "reconstruction");
  c.expect(inner_product(d.cpi, d.cyclic).is_zero(), "orthogonality");
  Weight twice_omega;
  for (const auto& w : d.omega) twice_omega += Weight(2) * w;
  c.expect(twice_omega == d.sums.total, "T equals twice the vertex weights");
  c.expect(sym::vertex_sums(d.cpi).total == d.sums.total, "T of cpi equals T");
  bool zero_sums = true;
  for (const auto& s : sym::vertex_sums(d.cyclic).sums) zero_sums &= s.is_zero();
  c.expect(zero_sums, "cyclic vertex sums vanish");
  c.expect(sym::is_cpi(d.cpi) && sym::decompose(d.cyclic).cpi.is_zero(),
           "idempotence");
  c.expect(sym::four_cycle_expansion(d.cyclic).reconstruct() == d.cyclic,
           "four-cycle round trip");
  if (n >= 4)
    for (const auto& b : four_cycle_basis(n))
      if (!inner_product(b, d.cpi).is_zero()) {
        c.expect(false, "basis cycles orthogonal to cpi");
        break;
      }

  for (const auto& p : closed_paths(n, mask)) {
    const Weight a = path_length(g, p);
    const Weight b = sym::subset_path_length_via(d, p);
    if (a != b) {
      c.expect(false, "closed-path visit formula", mismatch(p, a, b));
      break;
    }
    if (p.is_hamiltonian(n) && sym::hamiltonian_length_via(d, p) != a) {
      c.expect(false, "Hamiltonian transfer", show(p));
      break;
    }
  }
  for (const auto& p : open_paths(n, mask)) {
    const Weight a = path_length(g, p);
    const Weight b = sym::subset_path_length_via(d, p);
    if (a != b) {
      c.expect(false, "open-path visit formula", mismatch(p, a, b));
      break;
    }
  }

  if (n <= search::enumeration_limit()) {
    try {
      search::SearchSpec spec;
      if (mask) spec.mask = *mask;
      const auto best = search::exhaustive_optimum(d.cyclic, spec);
      const auto bounds = sym::hamiltonian_bounds(d, mask);
      const Weight opt = d.sums.total + best.length;
      c.expect(bounds.lower <= opt, "lower bound",
               bounds.lower.str() + " > optimum " + opt.str());
      c.expect(opt <= bounds.upper || mask != nullptr, "upper bound",
               opt.str() + " > T " + bounds.upper.str());
      const auto direct = search::exhaustive_optimum(g, spec);
      c.expect(direct.length == opt, "oracle agreement",
               direct.length.str() + " != " + opt.str());
    } catch (const InfeasibleError&) {
      // The mask admits no Hamiltonian circuit; nothing to bound.
    }
  }
  return c.found;
}

std::vector<Violation> verify_graph(const GeneralGraph& g,
                                    const AdmissibilityMask* mask) {
  Collector c;
  const std::size_t n = g.size();
  const auto d = general::decompose(g);
  c.expect(general::combine(d.sym_part, d.asym_part) == g, "recombination");
  c.expect(d.sym.cpi + d.sym.cyclic == d.sym_part, "symmetric reconstruction");
  c.expect(d.asym.cpi + d.asym.cyclic == d.asym_part, "skew reconstruction");
  const auto rs = general::split(d.reduced);
  bool zero_sums = true;
  for (const auto& s : sym::vertex_sums(rs.average).sums) zero_sums &= s.is_zero();
  c.expect(zero_sums, "reduced averages have zero vertex sums");
  c.expect(asym::is_cyclic(rs.excess), "reduced excesses have zero potentials");

  for (const auto& p : closed_paths(n, mask)) {
    const Weight a = path_length(g, p);
    const Weight b = general::path_length_via(d, p);
    if (a != b) {
      c.expect(false, "closed-path visit formula", mismatch(p, a, b));
      break;
    }
    if (p.is_hamiltonian(n) && general::hamiltonian_length_via(d, p) != a) {
      c.expect(false, "Hamiltonian transfer", show(p));
      break;
    }
  }
  for (const auto& p : open_paths(n, mask)) {
    const Weight a = path_length(g, p);
    const Weight b = general::path_length_via(d, p);
    if (a != b) {
      c.expect(false, "open-path transfer", mismatch(p, a, b));
      break;
    }
  }
  return c.found;
}

}  // namespace essence::verify
