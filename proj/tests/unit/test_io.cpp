#include <doctest.h>

#include "holefree/generators.hpp"
#include "holefree/io.hpp"
#include "holefree/named_graphs.hpp"

using namespace holefree;

TEST_CASE("graph6 words of reference graphs") {
  // Words as produced by other graph6 writers.
  CHECK(parse_graph6("FhCKG") == cycle_graph(7));
  CHECK(parse_graph6("Cs") == star_graph(3));
  CHECK(parse_graph6("Dhc") == cycle_graph(5));
  CHECK(encode_graph6(cycle_graph(7)) == "FhCKG");
  CHECK(encode_graph6(empty_graph(0)) == "?");
  CHECK(parse_graph6("?").order() == 0);
  CHECK(parse_graph6("@").order() == 1);
}

TEST_CASE("graph6 accepts a header and surrounding whitespace") {
  CHECK(parse_graph6(">>graph6<<Dhc") == cycle_graph(5));
  CHECK(parse_graph6("  Dhc \n") == cycle_graph(5));
}

TEST_CASE("graph6 rejects malformed words") {
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
  CHECK_THROWS_AS(parse_graph6("Dh"), FormatError);       // too short
  CHECK_THROWS_AS(parse_graph6("Dhcc"), FormatError);     // too long
  CHECK_THROWS_AS(parse_graph6("D h"), FormatError);      // illegal character
  CHECK_THROWS_AS(parse_graph6("~?@~"), FormatError);     // long form unsupported
  CHECK_THROWS_AS(parse_graph6("Dhd"), FormatError);      // non-zero padding bits
}

TEST_CASE("graph6 round trips random graphs up to 62 vertices") {
  for (int n : {1, 2, 5, 13, 40, 62}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Graph g = random_graph(n, 0.4, seed);
      CHECK(parse_graph6(encode_graph6(g)) == g);
    }
  }
  CHECK_THROWS_AS(encode_graph6(cycle_graph(63)), FormatError);
}

TEST_CASE("edge lists round trip and are validated") {
  const Graph p = petersen_graph();
  CHECK(parse_edge_list(write_edge_list(p)) == p);
  CHECK(parse_edge_list("3 2\n0 1\n1 2\n") == path_graph(3));
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("x"), FormatError);
}
