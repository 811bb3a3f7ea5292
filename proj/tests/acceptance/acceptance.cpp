// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails. Exhaustive checks run over one representative per
// isomorphism class; every property checked is invariant under relabelling.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "holefree/cli/commands.hpp"
#include "holefree/enumerate.hpp"
#include "holefree/generators.hpp"
#include "holefree/holes.hpp"
#include "holefree/invariants.hpp"
#include "holefree/io.hpp"
#include "holefree/lemma.hpp"
#include "holefree/named_graphs.hpp"
#include "holefree/quasiline.hpp"
#include "holefree/splitting.hpp"
#include "oracles.hpp"

using namespace holefree;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

std::vector<std::vector<Graph>> g_classes;

const std::vector<Graph>& classes(int n) { return g_classes.at(n); }

template <typename Fn>
void for_classes_up_to(int max_n, Fn&& fn) {
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : classes(n)) fn(g);
  }
}

void criterion_1(Outcome& out) {
  int graphs = 0;
  int perfect = 0;
  for_classes_up_to(8, [&](const Graph& g) {
    ++graphs;
    const PerfectionResult r = is_perfect(g);
    const bool by_definition = is_perfect_by_definition(g);
    perfect += by_definition ? 1 : 0;
    if (r.perfect != by_definition) out.fail("mismatch on " + encode_graph6(g));
    if (!r.perfect && !(r.obstruction && validate_hole(g, *r.obstruction))) {
      out.fail("bad obstruction on " + encode_graph6(g));
    }
  });
  out.detail << graphs << " classes on 1..8 vertices, " << perfect << " perfect";
}

void criterion_2(Outcome& out) {
  SplitMix64 rng(20260101);
  int instances = 0;
  int unrestricted = 0;
  int contradictions = 0;
  int disagreements = 0;
  auto check = [&](const Graph& g) {
    const LemmaOutcome o = lemma_pipeline(g);
    if (o.kind == LemmaOutcome::Kind::contradiction) {
      ++contradictions;
      out.fail("contradiction (" + o.contradiction->stage + ") on " + encode_graph6(g));
      return;
    }
    if (o.kind != LemmaOutcome::Kind::cover) {
      out.fail("hypothesis failure on a filtered instance " + encode_graph6(g));
      return;
    }
    if (!validate_two_clique_cover(g, *o.cover)) out.fail("cover fails validation on " + encode_graph6(g));
    if (!o.agrees_with_recognizer || !is_quasi_line(g).ok()) {
      ++disagreements;
      out.fail("recognizer disagrees on " + encode_graph6(g));
    }
    ++instances;
  };
  for (int k = 0; k < 2000; ++k) {
    const int alpha = 3 + k % 2;
    check(lemma_class_instance(random_attachment_spec(alpha, rng, 3), rng.next()).graph);
  }
  // Unrestricted sampling reaches attachment patterns the restricted
  // sampler never produces; many specs exhaust the budget and are skipped.
  for (int k = 0; k < 2000 && unrestricted < 200; ++k) {
    AttachmentSpec spec = random_attachment_spec(3 + k % 2, rng, 1);
    spec.unrestricted = true;
    try {
      check(lemma_class_instance(spec, rng.next(), 2000).graph);
      ++unrestricted;
    } catch (const GeneratorError&) {
    }
  }
  if (instances < 500) out.fail("only " + std::to_string(instances) + " instances");
  out.detail << instances << " instances (" << unrestricted << " unrestricted), " << contradictions
             << " contradictions, " << disagreements << " recognizer disagreements";
}

void criterion_3(Outcome& out) {
  int graphs = 0;
  int passers = 0;
  int certificates = 0;
  int flagged = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    const TheoremVerdict v = verify_main_theorem(g);
    if (!v.hypotheses.all()) return;
    ++passers;
    const int chi = v.hypotheses.chi;
    if (static_cast<int>(v.outcomes.size()) != chi - 2) out.fail("missing decompositions on " + encode_graph6(g));
    for (const SplitOutcome& o : v.outcomes) {
      if (!o.certificate) {
        ++flagged;
        out.fail("no (" + std::to_string(o.s) + "," + std::to_string(o.t) + ") split of " + encode_graph6(g));
      } else if (!validate_split_certificate(g, *o.certificate) || o.certificate->s != o.s ||
                 o.certificate->t != o.t || o.s + o.t - 1 != chi) {
        out.fail("invalid certificate on " + encode_graph6(g));
      } else {
        ++certificates;
      }
    }
  };
  for_classes_up_to(9, check);
  for (const cli::GraphInput& in : cli::random_inputs(1000, 12, 2026)) check(in.graph);
  out.detail << graphs << " graphs, " << passers << " hypothesis passers, " << certificates << " certificates, "
             << flagged << " flagged";
}

void criterion_4(Outcome& out) {
  int graphs = 0;
  int splittable = 0;
  for_classes_up_to(8, [&](const Graph& g) {
    ++graphs;
    const oracle::SubsetTables tables(g);
    for (int s = 2; s <= 3; ++s) {
      for (int t = 2; t <= 3; ++t) {
        const auto cert = is_splittable(g, s, t);
        const auto expected = oracle::split(g, tables, s, t);
        if (cert.has_value() != expected.has_value()) {
          out.fail("existence differs at (" + std::to_string(s) + "," + std::to_string(t) + ") on " + encode_graph6(g));
        }
        if (cert) {
          ++splittable;
          const std::uint64_t S = cert->S.bits();
          const bool oracle_accepts = tables.chi(S) >= s && tables.chi(tables.full() & ~S) >= t;
          if (!validate_split_certificate(g, *cert) || !oracle_accepts) out.fail("invalid certificate on " + encode_graph6(g));
        }
      }
    }
  });
  out.detail << graphs << " classes x 4 targets, " << splittable << " splittable cases";
}

void criterion_5(Outcome& out) {
  for (int k = 2; k <= 5; ++k) {
    const Graph c = cycle_graph(2 * k + 1);
    if (chromatic_number(c).chi != 3) out.fail("chi(C_" + std::to_string(2 * k + 1) + ") != 3");
    if (independence_number(c).size() != k) out.fail("alpha(C_" + std::to_string(2 * k + 1) + ") != k");
  }
  for (int len : {5, 7}) {
    const Graph c = cycle_graph(len);
    const PerfectionResult r = is_perfect(c);
    if (r.perfect || !r.obstruction || !validate_hole(c, *r.obstruction) || r.obstruction->length() != len) {
      out.fail("C_" + std::to_string(len) + " lacks an odd-hole certificate");
    }
  }
  const Graph claw = star_graph(3);
  const ClawCheck cc = is_claw_free(claw);
  const QuasiLineResult ql = is_quasi_line(claw);
  if (cc.ok() || !validate_claw(claw, *cc.witness)) out.fail("K_{1,3} claw witness missing");
  if (ql.ok() || ql.failing_vertex != 0 || ql.obstruction.size() != 3) out.fail("K_{1,3} quasi-line obstruction missing");

  int line_graphs = 0;
  for_classes_up_to(6, [&](const Graph& g) {
    if (g.edge_count() == 0) return;
    const Graph lg = line_graph(g);
    ++line_graphs;
    const QuasiLineResult r = is_quasi_line(lg);
    if (!r.ok() || !validate_two_clique_cover(lg, *r.cover) || !oracle::quasi_line(lg)) {
      out.fail("line graph of " + encode_graph6(g) + " rejected");
    }
  });
  out.detail << "odd cycles C_5..C_11, odd-hole certificates, claw witness, " << line_graphs
             << " line graphs of classes on <= 6 vertices";
}

void criterion_6(Outcome& out) {
  for (int t = 2; t <= 7; ++t) {
    if (!is_double_critical(complete_graph(t)).double_critical) out.fail("K_" + std::to_string(t) + " rejected");
  }
  for (const auto& [name, g] : {std::pair{"C_5", cycle_graph(5)}, {"C_7", cycle_graph(7)}, {"Petersen", petersen_graph()}}) {
    const DoubleCriticalResult r = is_double_critical(g);
    if (r.double_critical || !r.violating_edge) out.fail(std::string(name) + " accepted");
  }
  int connected = 0;
  int found = 0;
  for_classes_up_to(7, [&](const Graph& g) {
    if (!is_connected(g)) return;
    ++connected;
    const bool dc = is_double_critical(g).double_critical;
    const bool complete = 2 * g.edge_count() == static_cast<std::size_t>(g.order()) * (g.order() - 1);
    found += dc ? 1 : 0;
    if (dc && !complete) out.fail("non-complete double-critical graph " + encode_graph6(g));
    if (dc != oracle::double_critical(g)) out.fail("oracle disagrees on " + encode_graph6(g));
  });
  out.detail << connected << " connected classes on <= 7 vertices, " << found << " double-critical (all complete)";
}

void criterion_7(Outcome& out) {
  int eligible = 0;
  int by_size[6] = {0, 0, 0, 0, 0, 0};
  for_classes_up_to(9, [&](const Graph& g) {
    if (!is_claw_free(g).ok()) return;
    const int chi = chromatic_number(g).chi;
    if (chi <= max_clique(g).size()) return;
    ++eligible;
    const auto k = small_clique_drop(g);
    if (!k) {
      out.fail("no clique found on " + encode_graph6(g));
      return;
    }
    const bool valid = k->size() >= 1 && k->size() <= 5 && is_clique(g, k->vertices) &&
                       oracle::chromatic_number(induced_subgraph(g, g.vertices() - k->vertices).graph) > chi - k->size();
    if (!valid) out.fail("invalid clique on " + encode_graph6(g));
    if (valid) ++by_size[k->size()];
  });
  out.detail << eligible << " claw-free classes with chi > omega on <= 9 vertices; clique sizes 1..5: " << by_size[1]
             << "/" << by_size[2] << "/" << by_size[3] << "/" << by_size[4] << "/" << by_size[5];
}

void criterion_8(Outcome& out) {
  auto run = [](int jobs) {
    std::vector<cli::GraphInput> inputs = cli::random_inputs(60, 11, 8);
    for (auto& g : cli::lemma_inputs(20, {3, 4}, 8)) inputs.push_back(std::move(g));
    for (auto& g : cli::exhaustive_inputs(5)) inputs.push_back(std::move(g));
    cli::RunOptions opts;
    opts.timing = false;
    opts.jobs = jobs;
    std::string text;
    for (const cli::Report& r : {cli::cmd_analyze(inputs, opts), cli::cmd_verify_theorem(inputs, opts),
                                 cli::cmd_verify_lemma(inputs, opts)}) {
      text += cli::render_json(r);
    }
    return text;
  };
  const std::string first = run(1);
  const std::string second = run(1);
  const std::string threaded = run(3);
  if (first != second) out.fail("two single-threaded runs differ");
  if (first != threaded) out.fail("threaded run differs");
  out.detail << "analyze, verify-theorem and verify-lemma on 119 graphs; " << first.size() << " bytes, identical";
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  g_classes = nonisomorphic_graphs_up_to(9);

  const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria{
      {"perfection by odd holes/antiholes matches the definition on <= 8 vertices", criterion_1},
      {"lemma pipeline covers generated instances with alpha 3 and 4", criterion_2},
      {"every hypothesis passer is split for every (s,t)", criterion_3},
      {"pruned splittability matches bipartition enumeration on <= 8 vertices", criterion_4},
      {"known values", criterion_5},
      {"double-critical graphs", criterion_6},
      {"small clique drop on claw-free graphs with chi > omega", criterion_7},
      {"byte-identical reports for identical inputs", criterion_8},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s [%s] (%.1fs)\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                out.detail.str().c_str(), secs);
    for (const std::string& f : out.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    failed += out.pass ? 0 : 1;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed (%.1fs)\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
  return failed == 0 ? 0 : 1;
}
