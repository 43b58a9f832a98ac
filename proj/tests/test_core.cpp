#include "doctest.h"

#include "graph_essence/basis.hpp"
#include "graph_essence/graph.hpp"
#include "graph_essence/linalg.hpp"
#include "graph_essence/weight.hpp"
#include "support.hpp"

using namespace essence;
using namespace essence::testing;

TEST_CASE("weights are exact rationals") {
  CHECK(Weight::parse("9/2") == Weight(9, 2));
  CHECK(Weight::parse(" -4.5 ") == Weight(-9, 2));
  CHECK(Weight(6, 4).str() == "3/2");
  CHECK(Weight(-8, 2).str() == "-4");
  CHECK((Weight(1, 3) + Weight(2, 3)).is_integer());
  CHECK_THROWS_AS(Weight::parse("abc"), ParseError);
  CHECK_THROWS_AS(Weight(1) / Weight(0), DomainError);
}

TEST_CASE("pair graphs store one value per pair") {
  auto a = from_upper<AsymGraph>(3, {8, 12, 10});
  CHECK(a.at(0, 1) == 8);
  CHECK(a.at(1, 0) == -8);
  CHECK(a.at(2, 0) == -12);
  a.set(2, 1, 4);
  CHECK(a.at(1, 2) == -4);

  auto s = from_upper<SymGraph>(3, {1, 2, 3});
  CHECK(s.at(2, 1) == 3);
  CHECK_THROWS_AS(s.set(1, 1, 5), StructuralError);
  CHECK_THROWS_AS(s.at(3, 0), StructuralError);
  CHECK_THROWS_AS(SymGraph(2), StructuralError);
  CHECK_THROWS_AS(SymGraph(3) + SymGraph(4), StructuralError);
}

TEST_CASE("path lengths and reversal") {
  const auto a = from_upper<AsymGraph>(3, {8, 12, 10});
  const auto p = closed1({1, 2, 3});
  CHECK(path_length(a, p) == 8 + 10 - 12);
  CHECK(path_length(a, p.reversed()) == -6);
  CHECK(p.reversed() == closed1({1, 3, 2}));
  CHECK(p.arcs().size() == 3);
  CHECK(open1({1, 2, 3}).arcs().size() == 2);
  CHECK(p.is_hamiltonian(3));
  CHECK_FALSE(open1({1, 2, 3}).is_hamiltonian(3));
  CHECK_THROWS_AS(Path::closed({0, 1, 0}), StructuralError);
  CHECK_THROWS_AS(Path::open({0, 0, 1}), StructuralError);

  auto mask = AdmissibilityMask::all(3);
  mask.forbid(2, 0);
  CHECK_FALSE(mask.allows(0, 2));
  CHECK(mask.forbidden_pairs() == std::vector<VertexPair>{{0, 2}});
  CHECK_THROWS_AS(path_length(a, p, mask), AdmissibilityError);
  CHECK(path_length(a, open1({1, 2, 3}), mask) == 18);
}

TEST_CASE("three-cycle and four-cycle basis elements") {
  const auto t = three_cycle(0, 1, 2, 3);
  CHECK(t.at(0, 1) == 1);
  CHECK(t.at(1, 2) == 1);
  CHECK(t.at(2, 0) == 1);
  CHECK(inner_product(t, t) == 3);
  CHECK_THROWS_AS(three_cycle(0, 0, 2, 3), DomainError);
  CHECK_THROWS_AS(three_cycle(0, 1, 3, 3), DomainError);

  const auto b = four_cycle(0, 1, 2, 3, 4);
  CHECK(b.at(0, 1) == 1);
  CHECK(b.at(1, 2) == -1);
  CHECK(b.at(2, 3) == 1);
  CHECK(b.at(3, 0) == -1);
  CHECK(b.at(0, 2) == 0);
  CHECK_THROWS_AS(four_cycle(0, 1, 1, 3, 4), DomainError);

  // Orthogonal to every cpi direction.
  for (const auto& c : cpi_basis_sym_all(4)) CHECK(inner_product(c, b) == 0);
  CHECK_THROWS_AS(cpi_basis_sym(5, 5), DomainError);
}

TEST_CASE("basis sizes and ranks") {
  for (std::size_t n = 4; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(three_cycle_basis(n).size() == (n - 1) * (n - 2) / 2);
    CHECK(rank(flatten(three_cycle_basis(n))) == (n - 1) * (n - 2) / 2);
    CHECK(four_cycle_basis(n).size() == n * (n - 3) / 2);
    CHECK(rank(flatten(four_cycle_basis(n))) == n * (n - 3) / 2);
    CHECK(rank(flatten(cpi_basis_sym_all(n))) == n);
  }
}

TEST_CASE("exact solver") {
  const std::vector<Vector> cols{weights({1, 0, 1}), weights({0, 1, 1})};
  const auto x = solve_exact(cols, weights({2, 3, 5}));
  REQUIRE(x.has_value());
  CHECK(*x == weights({2, 3}));
  CHECK_FALSE(solve_exact(cols, weights({2, 3, 4})).has_value());
  const auto two = Weight(2) * four_cycle(0, 1, 3, 2, 4);
  const auto c = solve_exact(flatten(std::vector<SymGraph>{
                                 four_cycle(0, 1, 2, 3, 4), four_cycle(0, 1, 3, 2, 4)}),
                             flatten(two));
  REQUIRE(c.has_value());
  CHECK(*c == weights({0, 2}));
}
