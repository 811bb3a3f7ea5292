#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "holefree/cli/commands.hpp"
#include "holefree/cli/serialize.hpp"
#include "holefree/io.hpp"
#include "holefree/named_graphs.hpp"

using namespace holefree;
using namespace holefree::cli;

namespace {

RunOptions quiet() {
  RunOptions o;
  o.timing = false;
  return o;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = "holefree_test_" + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("analyze C_7") {
  const Report r = cmd_analyze(inline_inputs({"FhCKG"}), quiet());
  REQUIRE(r.records.size() == 1);
  const Json& rec = r.records[0];
  CHECK(rec["id"] == "inline:1");
  CHECK(rec["n"] == 7);
  CHECK(rec["invariants"]["alpha"] == 3);
  CHECK(rec["invariants"]["omega"] == 2);
  CHECK(rec["invariants"]["chi"] == 3);
  CHECK(rec["quasi_line"]["quasi_line"] == true);
  CHECK(rec["lemma"]["outcome"] == "cover");
  CHECK(rec["theorem"]["hypotheses"]["all"] == true);
  CHECK(rec["clique_drop"]["found"] == true);
  CHECK(rec["double_critical"]["double_critical"] == false);
  CHECK_FALSE(rec.contains("timing"));
  CHECK(r.summary["contradictions"] == 0);
  CHECK(r.exit_code() == 0);
  CHECK(render_text(r).find("inline:1 FhCKG") != std::string::npos);
}

TEST_CASE("analyze witnesses on failing graphs") {
  const Report r = cmd_analyze(inline_inputs({"Cs", "IheA@GUAo"}), quiet());
  CHECK(r.records[0]["claw_free"]["claw_free"] == false);
  CHECK(r.records[0]["claw_free"]["claw"]["center"] == 0);
  CHECK(r.records[1]["lemma"]["outcome"] == "hypothesis_failure");
  CHECK(r.records[1]["lemma"]["failure"]["hypothesis"] == "hole_free");
  CHECK(r.records[1]["hole_range"]["hole_free"] == false);
  CHECK(r.records[1]["hole_range"]["violation"]["length"] == 5);
}

TEST_CASE("odd-only hole range") {
  // C_6 plus an isolated vertex: alpha = 4, so the range is [4, 7] and the
  // only hole has even length.
  const auto in = std::vector<GraphInput>{{"c6+k1", disjoint_union(cycle_graph(6), empty_graph(1))}};
  RunOptions o = quiet();
  const Report all = cmd_analyze(in, o);
  CHECK(all.records[0]["hole_range"]["hi"] == 7);
  CHECK(all.records[0]["hole_range"]["filter"] == "all");
  CHECK(all.records[0]["hole_range"]["hole_free"] == false);
  o.odd_only = true;
  const Report odd = cmd_analyze(in, o);
  CHECK(odd.records[0]["hole_range"]["filter"] == "odd");
  CHECK(odd.records[0]["hole_range"]["hole_free"] == true);
}

TEST_CASE("empty input gives zero counts") {
  const std::string path = temp_file("empty.g6", "# nothing here\n\n");
  for (const Report& r : {cmd_analyze(corpus_inputs(path), quiet()), cmd_verify_theorem(corpus_inputs(path), quiet()),
                          cmd_verify_lemma(corpus_inputs(path), quiet())}) {
    CHECK(r.records.empty());
    for (const auto& [key, value] : r.summary.items()) CHECK_MESSAGE(value == 0, key);
    CHECK(r.exit_code() == 0);
  }
  std::remove(path.c_str());
}

TEST_CASE("verify-theorem and verify-lemma summaries") {
  const auto inputs = inline_inputs({"FhCKG", "IheA@GUAo", "Cs"});
  const Report th = cmd_verify_theorem(inputs, quiet());
  CHECK(th.summary["parsed"] == 3);
  CHECK(th.summary["hypothesis_passers"] == 1);
  CHECK(th.summary["certified"] == 1);
  CHECK(th.summary["flagged"] == 0);
  const Report lm = cmd_verify_lemma(inputs, quiet());
  CHECK(lm.summary["covers"] == 1);
  CHECK(lm.summary["hypothesis_failures"] == 2);
  CHECK(lm.summary["contradictions"] == 0);
}

TEST_CASE("reports revalidate and catch tampering") {
  RunOptions o = quiet();
  auto inputs = random_inputs(25, 9, 4);
  for (auto& g : lemma_inputs(5, {3}, 4)) inputs.push_back(g);
  const Report r = cmd_analyze(inputs, o);
  Json doc = Json::parse(render_json(r));
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["command"] == "analyze");
  const RevalidationResult ok = revalidate_report(doc);
  CHECK(ok.ok());
  CHECK(ok.records == 30);
  CHECK(ok.certificates > 30);

  SUBCASE("colouring") {
    Json& rec = doc["records"][0];
    auto& colors = rec["invariants"]["coloring"]["color"];
    REQUIRE(colors.size() >= 1);
    colors[0] = 99;
    CHECK_FALSE(revalidate_report(doc).ok());
  }
  SUBCASE("lemma cover") {
    for (Json& rec : doc["records"]) {
      if (rec["lemma"]["outcome"] != "cover") continue;
      rec["lemma"]["cover"][0]["cliques"] = Json::array({Json::array(), Json::array()});
      break;
    }
    CHECK_FALSE(revalidate_report(doc).ok());
  }
  SUBCASE("graph word") {
    doc["records"][1]["graph6"] = "Cs";
    CHECK_FALSE(revalidate_report(doc).ok());
  }
  SUBCASE("schema") {
    doc["schema_version"] = "0";
    CHECK_FALSE(revalidate_report(doc).ok());
  }
}

TEST_CASE("job count does not change the report") {
  const auto inputs = random_inputs(30, 10, 77);
  RunOptions one = quiet();
  RunOptions four = quiet();
  four.jobs = 4;
  CHECK(render_json(cmd_analyze(inputs, one)) == render_json(cmd_analyze(inputs, four)));
  CHECK(render_json(cmd_verify_theorem(inputs, one)) == render_json(cmd_verify_theorem(inputs, four)));
}

TEST_CASE("sources") {
  CHECK(exhaustive_inputs(4).size() == 1 + 2 + 4 + 11);
  CHECK(exhaustive_inputs(4).back().id == "n4:11");
  const auto a = random_inputs(10, 8, 5);
  const auto b = random_inputs(10, 8, 5);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(encode_graph6(a[k].graph) == encode_graph6(b[k].graph));
    CHECK(a[k].graph.order() >= 1);
    CHECK(a[k].graph.order() <= 8);
  }
  CHECK_THROWS_AS(random_inputs(1, 0, 1), UsageError);
  CHECK_THROWS_AS(lemma_inputs(1, {}, 1), UsageError);
  CHECK_THROWS_AS(corpus_inputs("/nonexistent/x.g6"), UsageError);
  CHECK_THROWS_AS(inline_inputs({"!!"}), FormatError);

  const std::string g6 = temp_file("one.g6", "FhCKG\n");
  CHECK(file_input(g6).graph.edges() == cycle_graph(7).edges());
  const std::string el = temp_file("one.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  CHECK(file_input(el).graph.edges() == cycle_graph(5).edges());
  std::remove(g6.c_str());
  std::remove(el.c_str());
}

TEST_CASE("exit code follows the summary") {
  Report r;
  r.summary = Json{{"parsed", 3}, {"flagged", 0}};
  CHECK(r.exit_code() == 0);
  r.summary["flagged"] = 1;
  CHECK(r.exit_code() == 1);
  r.summary = Json{{"contradictions", 2}};
  CHECK(r.exit_code() == 1);
}

TEST_CASE("certificate serialisation round trips") {
  const Graph g = cycle_graph(7);
  const SplitCertificate cert = make_split_certificate(g, 2, 2, VertexSet{0, 1, 2});
  const SplitCertificate back = split_from_json(to_json(cert));
  CHECK(back.S == cert.S);
  CHECK(back.T == cert.T);
  CHECK(back.s_coloring == cert.s_coloring);
  CHECK(back.t_coloring == cert.t_coloring);
  const HoleCertificate h{{0, 1, 2, 3, 4}, HoleKind::antihole};
  CHECK(hole_from_json(to_json(h)) == h);
  const CliquePair p{VertexSet{1, 2}, VertexSet{5}};
  CHECK(clique_pair_from_json(to_json(p)) == p);
  const ClawWitness w{0, {1, 2, 3}};
  const ClawWitness w2 = claw_from_json(to_json(w));
  CHECK(w2.center == 0);
  CHECK(w2.leaves == w.leaves);
  CHECK(vertex_set_from_json(to_json(VertexSet{3, 63})) == VertexSet{3, 63});
  CHECK_THROWS(vertex_set_from_json(Json::array({64})));
}
