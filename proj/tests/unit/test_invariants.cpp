#include <doctest.h>

#include "corpus.hpp"
#include "holefree/generators.hpp"
#include "holefree/invariants.hpp"
#include "holefree/named_graphs.hpp"
#include "oracles.hpp"

using namespace holefree;

TEST_CASE("clique number of reference graphs") {
  CHECK(max_clique(complete_graph(6)).size() == 6);
  CHECK(max_clique(cycle_graph(7)).size() == 2);
  CHECK(max_clique(petersen_graph()).size() == oracle::clique_number(petersen_graph()));
  CHECK(max_clique(petersen_graph()).size() == 2);
  CHECK(max_clique(empty_graph(0)).size() == 0);
  CHECK(max_clique(empty_graph(4)).size() == 1);
}

TEST_CASE("independence number of reference graphs") {
  CHECK(independence_number(cycle_graph(7)).size() == 3);
  CHECK(independence_number(complete_graph(5)).size() == 1);
  std::vector<Edge> edges = cycle_graph(7).edges();
  for (Vertex v : {0, 1, 2}) edges.emplace_back(v, 7);
  const Graph g = Graph::from_edges(8, edges);
  CHECK(independence_number(g).size() == 3);
  CHECK(oracle::independence_number(g) == 3);
  const CliqueWitness w = independence_number(g);
  CHECK(is_independent(g, w.vertices));
}

TEST_CASE("k-colourability") {
  CHECK_FALSE(k_colorable(cycle_graph(7), 2).has_value());
  const auto c3 = k_colorable(cycle_graph(7), 3);
  REQUIRE(c3.has_value());
  CHECK(is_proper_coloring(cycle_graph(7), *c3));
  const auto p3 = k_colorable(petersen_graph(), 3);
  REQUIRE(p3.has_value());
  CHECK(is_proper_coloring(petersen_graph(), *p3));
  CHECK(k_colorable(empty_graph(0), 0).has_value());
  CHECK_FALSE(k_colorable(empty_graph(1), 0).has_value());
}

TEST_CASE("chromatic number of reference graphs") {
  CHECK(chromatic_number(cycle_graph(7)).chi == 3);
  CHECK(chromatic_number(complete_minus_matching(6)).chi == 3);
  CHECK(oracle::chromatic_number(complete_minus_matching(6)) == 3);
  CHECK(chromatic_number(complement(cycle_graph(7))).chi == 4);
  CHECK(oracle::chromatic_number(complement(cycle_graph(7))) == 4);
  CHECK(chromatic_number(empty_graph(0)).chi == 0);
  CHECK(chromatic_number(petersen_graph()).chi == 3);
}

TEST_CASE("maximum degree") {
  CHECK(max_degree(cycle_graph(7)) == 2);
  CHECK(max_degree(complete_graph(5)) == 4);
  CHECK(max_degree(star_graph(3)) == 3);
  CHECK(max_degree(empty_graph(0)) == 0);
}

TEST_CASE("colouring validator rejects improper or non-contiguous colourings") {
  const Graph p3 = path_graph(3);
  CHECK(is_proper_coloring(p3, Coloring{{0, 1, 0}, 2}));
  CHECK_FALSE(is_proper_coloring(p3, Coloring{{0, 0, 1}, 2}));
  CHECK_FALSE(is_proper_coloring(p3, Coloring{{0, 2, 0}, 3}));
  CHECK_FALSE(is_proper_coloring(p3, Coloring{{0, 1}, 2}));
}

TEST_CASE("exact searches agree with subset oracles on every class up to 7 vertices") {
  for (const Graph& g : testing_corpus::classes_up_to(7)) {
    const oracle::SubsetTables t(g);
    const int omega = t.omega(t.full());
    const int chi = t.chi(t.full());
    const CliqueWitness k = max_clique(g);
    const CliqueWitness a = independence_number(g);
    const ChromaticResult c = chromatic_number(g);
    REQUIRE(k.size() == omega);
    REQUIRE(is_clique(g, k.vertices));
    REQUIRE(a.size() == oracle::independence_number(g));
    REQUIRE(is_independent(g, a.vertices));
    REQUIRE(c.chi == chi);
    REQUIRE(is_proper_coloring(g, c.coloring));
    REQUIRE(c.chi >= k.size());
    if (chi > 0) REQUIRE_FALSE(k_colorable(g, chi - 1).has_value());
    REQUIRE(greedy_coloring(g).num_colors >= chi);
  }
}

TEST_CASE("independence number equals clique number of the complement through 9 vertices") {
  for (const Graph& g : testing_corpus::classes_up_to(9)) {
    REQUIRE(independence_number(g).size() == max_clique(complement(g)).size());
  }
}

TEST_CASE("exact searches agree with oracles on random graphs up to 12 vertices") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + rng.below(12);
    const Graph g = random_graph(n, 0.15 + 0.7 * rng.uniform(), rng.next());
    const oracle::SubsetTables t(g);
    REQUIRE(max_clique(g).size() == t.omega(t.full()));
    REQUIRE(chromatic_number(g).chi == t.chi(t.full()));
    const VertexSet half(g.vertices().bits() & 0x5555);
    REQUIRE(chromatic_number_within(g, half) == t.chi(half.bits()));
    REQUIRE(max_clique_within(g, half).size() == t.omega(half.bits()));
    REQUIRE(max_clique_within(g, half).vertices.subset_of(half));
  }
}

TEST_CASE("larger structured graphs stay exact") {
  CHECK(chromatic_number(complete_graph(20)).chi == 20);
  CHECK(chromatic_number(cycle_graph(41)).chi == 3);
  CHECK(max_clique(complete_minus_matching(30)).size() == 15);
  CHECK(chromatic_number(complete_minus_matching(30)).chi == 15);
  CHECK(independence_number(cycle_graph(21)).size() == 10);
}
