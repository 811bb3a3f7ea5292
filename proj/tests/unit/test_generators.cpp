#include <doctest.h>

#include <set>
#include <sstream>

#include "holefree/generators.hpp"
#include "holefree/invariants.hpp"
#include "holefree/io.hpp"
#include "holefree/lemma.hpp"
#include "holefree/named_graphs.hpp"

using namespace holefree;

TEST_CASE("SplitMix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK_THROWS_AS(a.below(0), GeneratorError);
  for (int i = 0; i < 100; ++i) {
    const int k = a.below(7);
    CHECK(k >= 0);
    CHECK(k < 7);
  }
}

TEST_CASE("labelled enumeration") {
  auto count = [](int n) {
    std::uint64_t seen = 0;
    std::set<std::string> words;
    for_each_labeled_graph(n, [&](const Graph& g) {
      ++seen;
      words.insert(encode_graph6(g));
      return true;
    });
    CHECK(words.size() == seen);
    return seen;
  };
  CHECK(count(0) == 1);
  CHECK(count(1) == 1);
  CHECK(count(3) == 8);
  CHECK(count(4) == 64);
  CHECK(labeled_graph_count(4) == 64);
  CHECK(labeled_graph_count(11) == (std::uint64_t{1} << 55));
  CHECK_THROWS_AS(for_each_labeled_graph(10, [](const Graph&) { return true; }), GeneratorError);
  CHECK_THROWS_AS(labeled_graph_count(12), GeneratorError);

  int visited = 0;
  for_each_labeled_graph(5, [&](const Graph&) { return ++visited < 10; });
  CHECK(visited == 10);

  // Edge-mask order: the second graph on 3 vertices has only the first pair, {0,1}.
  std::vector<Graph> first;
  for_each_labeled_graph(3, [&](const Graph& g) {
    first.push_back(g);
    return first.size() < 3;
  });
  CHECK(first[0].edge_count() == 0);
  CHECK(first[1].edges() == std::vector<Edge>{{0, 1}});
  CHECK(first[2].edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("corpus reader") {
  std::istringstream in("# header\nFhCKG\n\n  Cs  \n>>graph6<<Dhc\n");
  const auto entries = read_corpus(in);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].id == "line:2");
  CHECK(entries[0].graph.edges() == cycle_graph(7).edges());
  CHECK(entries[1].id == "line:4");
  CHECK(entries[1].graph6 == "Cs");
  CHECK(entries[2].graph.edges() == cycle_graph(5).edges());

  std::istringstream bad("FhCKG\nnot a word\n");
  try {
    read_corpus(bad);
    FAIL("expected a FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(read_corpus_file("/nonexistent/corpus.g6"), FormatError);
}

TEST_CASE("random graphs") {
  CHECK(random_graph(10, 0.0, 3).edge_count() == 0);
  CHECK(random_graph(10, 1.0, 3).edge_count() == 45);
  CHECK(encode_graph6(random_graph(20, 0.4, 123)) == encode_graph6(random_graph(20, 0.4, 123)));
  CHECK(encode_graph6(random_graph(20, 0.4, 123)) != encode_graph6(random_graph(20, 0.4, 124)));
  CHECK_THROWS_AS(random_graph(5, -0.1, 1), GeneratorError);
  CHECK_THROWS_AS(random_graph(5, 1.5, 1), GeneratorError);
  CHECK_THROWS_AS(random_graph(65, 0.5, 1), GeneratorError);
}

TEST_CASE("attachment spec validation") {
  AttachmentSpec spec;
  spec.alpha = 3;
  spec.a_sizes.assign(7, 0);
  spec.b_sizes.assign(7, 0);
  CHECK_NOTHROW(validate_attachment_spec(spec));

  AttachmentSpec s = spec;
  s.alpha = 2;
  CHECK_THROWS_AS(validate_attachment_spec(s), GeneratorError);
  s = spec;
  s.a_sizes.pop_back();
  CHECK_THROWS_AS(validate_attachment_spec(s), GeneratorError);
  s = spec;
  s.a_sizes[2] = -1;
  CHECK_THROWS_AS(validate_attachment_spec(s), GeneratorError);
  s = spec;
  s.cross_edge_probability = 2.0;
  CHECK_THROWS_AS(validate_attachment_spec(s), GeneratorError);
  s = spec;
  s.a_sizes[0] = 60;
  CHECK_THROWS_AS(validate_attachment_spec(s), GeneratorError);
  s = spec;
  s.b_sizes[6] = 1;
  s.b_sizes[1] = 1;  // window 6, 0, 1 wraps around
  CHECK_NOTHROW(validate_attachment_spec(s));
  s.b_sizes[2] = 1;
  CHECK_THROWS_AS(validate_attachment_spec(s), GeneratorError);
}

TEST_CASE("lemma-class instances") {
  AttachmentSpec spec;
  spec.alpha = 3;
  spec.a_sizes.assign(7, 0);
  spec.b_sizes.assign(7, 0);

  SUBCASE("all sizes zero give C_7") {
    const LemmaInstance inst = lemma_class_instance(spec, 1);
    CHECK(inst.graph.edges() == cycle_graph(7).edges());
    CHECK(inst.attempts == 1);
    CHECK(validate_hole(inst.graph, inst.cycle));
  }
  SUBCASE("one A_0 vertex") {
    spec.a_sizes[0] = 1;
    const LemmaInstance inst = lemma_class_instance(spec, 1);
    CHECK(inst.graph.order() == 8);
    CHECK(inst.graph.neighbors(7) == VertexSet{0, 1, 2});
    CHECK(independence_number(inst.graph).size() == 3);
    CHECK(satisfies_lemma_hypotheses(inst.graph, 3));
  }
  SUBCASE("one B_1 vertex") {
    spec.b_sizes[1] = 1;
    const LemmaInstance inst = lemma_class_instance(spec, 1);
    CHECK(inst.graph.neighbors(7) == VertexSet{1, 2, 3, 4});
    CHECK(inst.B[1] == VertexSet{7});
    CHECK(satisfies_lemma_hypotheses(inst.graph, 3));
  }
  SUBCASE("seeded and reproducible") {
    SplitMix64 rng(8);
    const AttachmentSpec random_spec = random_attachment_spec(4, rng, 2);
    CHECK_NOTHROW(validate_attachment_spec(random_spec));
    const LemmaInstance a = lemma_class_instance(random_spec, 77);
    const LemmaInstance b = lemma_class_instance(random_spec, 77);
    CHECK(encode_graph6(a.graph) == encode_graph6(b.graph));
    CHECK(a.attempts == b.attempts);
  }
  SUBCASE("build_partition recovers the layout") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
      const int alpha = 3 + trial % 3;
      const LemmaInstance inst = lemma_class_instance(random_attachment_spec(alpha, rng), rng.next());
      CHECK(satisfies_lemma_hypotheses(inst.graph, alpha));
      const auto built = build_partition(inst.graph, inst.cycle, alpha);
      REQUIRE(built.ok());
      CHECK(built.partition->A == inst.A);
      CHECK(built.partition->B == inst.B);
      CHECK(built.partition->J.empty());
    }
  }
  SUBCASE("hypothesis filter can be switched off") {
    spec.unrestricted = true;
    spec.require_hypotheses = false;
    spec.a_sizes[0] = 2;
    spec.a_sizes[2] = 2;
    const LemmaInstance inst = lemma_class_instance(spec, 4);
    CHECK(inst.attempts == 1);
    CHECK(inst.graph.order() == 11);
  }
  SUBCASE("an unsatisfiable budget throws") {
    CHECK_THROWS_AS(lemma_class_instance(spec, 1, 0), GeneratorError);
  }
}
