#include "holefree/cli/commands.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "holefree/enumerate.hpp"
#include "holefree/generators.hpp"
#include "holefree/holes.hpp"
#include "holefree/invariants.hpp"
#include "holefree/io.hpp"
#include "holefree/lemma.hpp"
#include "holefree/quasiline.hpp"
#include "holefree/splitting.hpp"

namespace holefree::cli {

namespace {

using RecordFn = std::function<Json(const GraphInput&)>;

// Records land in input order whatever order the workers finish in.
std::vector<Json> run_parallel(const std::vector<GraphInput>& inputs, const RecordFn& fn, int jobs) {
  std::vector<Json> out(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) out[i] = fn(inputs[i]);
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(inputs.size())));
  if (workers == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

Json header(const GraphInput& in) {
  return Json{{"id", in.id},
              {"graph6", encode_graph6(in.graph)},
              {"n", in.graph.order()},
              {"m", in.graph.edge_count()}};
}

template <typename Fn>
Json timed(const RunOptions& opts, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  Json record = body();
  if (opts.timing) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    record["timing"] = Json{{"seconds", secs}};
  }
  return record;
}

Json optional_hole(const std::optional<HoleCertificate>& h) { return h ? to_json(*h) : Json(nullptr); }

Json hypotheses_json(const MainHypotheses& h) {
  return Json{{"alpha_at_least_3", h.alpha_ok},
              {"omega_below_chi", h.omega_below_chi},
              {"chi_at_least_3", h.chi_ok},
              {"hole_free", h.holes.ok()},
              {"hole", optional_hole(h.holes.violation)},
              {"all", h.all()}};
}

Json theorem_json(const TheoremVerdict& v) {
  Json out{{"hypotheses", hypotheses_json(v.hypotheses)}};
  Json outcomes = Json::array();
  for (const SplitOutcome& o : v.outcomes) {
    Json item{{"s", o.s}, {"t", o.t}, {"counterexample", o.counterexample}};
    item["certificate"] = o.certificate ? to_json(*o.certificate) : Json(nullptr);
    outcomes.push_back(std::move(item));
  }
  out["outcomes"] = std::move(outcomes);
  out["flagged"] = v.flagged();
  return out;
}

Json claims_json(const std::vector<ClaimStatus>& claims) {
  Json out = Json::array();
  for (const ClaimStatus& c : claims) {
    out.push_back(Json{{"claim", c.claim}, {"holds", c.holds}, {"witness", c.witness}, {"detail", c.detail}});
  }
  return out;
}

Json partition_json(const NormalizedPartition& np) {
  Json a = Json::array();
  Json b = Json::array();
  for (VertexSet s : np.partition.A) a.push_back(to_json(s));
  for (VertexSet s : np.partition.B) b.push_back(to_json(s));
  return Json{{"rotation", np.rotation},
              {"reflected", np.reflected},
              {"cycle", to_json(np.partition.cycle)},
              {"A", std::move(a)},
              {"B", std::move(b)}};
}

Json lemma_json(const LemmaOutcome& o) {
  Json out{{"outcome", to_string(o.kind)}, {"alpha", o.alpha}};
  if (o.failure) {
    out["failure"] = Json{{"hypothesis", to_string(o.failure->hypothesis)},
                          {"detail", o.failure->detail},
                          {"hole", optional_hole(o.failure->hole)},
                          {"vertex", o.failure->vertex}};
  }
  if (o.normalized) out["partition"] = partition_json(*o.normalized);
  if (o.contradiction) {
    const LemmaContradiction& c = *o.contradiction;
    Json item{{"stage", c.stage}, {"detail", c.detail}, {"vertex", c.vertex}, {"claims", claims_json(c.claims)}};
    if (c.cover) {
      item["cover"] = Json{{"rule", c.cover->rule}, {"cliques", to_json(c.cover->cliques)}, {"problem", c.cover->problem}};
    }
    out["contradiction"] = std::move(item);
  }
  if (o.cover) {
    Json cover = Json::array();
    for (std::size_t v = 0; v < o.cover->per_vertex.size(); ++v) {
      cover.push_back(Json{{"vertex", v}, {"rule", o.rules.at(v)}, {"cliques", to_json(o.cover->per_vertex[v])}});
    }
    out["cover"] = std::move(cover);
    out["agrees_with_recognizer"] = o.agrees_with_recognizer;
  }
  return out;
}

Json analyze_record(const GraphInput& in, const RunOptions& opts) {
  const Graph& g = in.graph;
  Json rec = header(in);

  const CliqueWitness indep = independence_number(g);
  const CliqueWitness clique = max_clique(g);
  const ChromaticResult chi = chromatic_number(g);
  rec["invariants"] = Json{{"max_degree", max_degree(g)},
                           {"alpha", indep.size()},
                           {"omega", clique.size()},
                           {"chi", chi.chi},
                           {"alpha_witness", to_json(indep.vertices)},
                           {"omega_witness", to_json(clique.vertices)},
                           {"coloring", to_json(chi.coloring)}};

  const PerfectionResult perfect = is_perfect(g);
  rec["perfect"] = Json{{"perfect", perfect.perfect}, {"obstruction", optional_hole(perfect.obstruction)}};

  const ClawCheck claw = is_claw_free(g);
  rec["claw_free"] = Json{{"claw_free", claw.ok()}, {"claw", claw.witness ? to_json(*claw.witness) : Json(nullptr)}};

  const QuasiLineResult ql = is_quasi_line(g);
  Json qj{{"quasi_line", ql.ok()}};
  if (ql.cover) {
    Json cover = Json::array();
    for (const CliquePair& p : ql.cover->per_vertex) cover.push_back(to_json(p));
    qj["cover"] = std::move(cover);
  } else {
    qj["failing_vertex"] = ql.failing_vertex;
    qj["obstruction"] = ql.obstruction;
  }
  rec["quasi_line"] = std::move(qj);

  const int hi = 2 * indep.size() - 1;
  if (hi >= 4) {
    const LengthFilter filter = opts.odd_only ? LengthFilter::odd_only : LengthFilter::all;
    const HoleRangeResult range = hole_free_in_range(g, 4, hi, filter);
    rec["hole_range"] = Json{{"lo", 4},
                             {"hi", hi},
                             {"filter", opts.odd_only ? "odd" : "all"},
                             {"hole_free", range.ok()},
                             {"violation", optional_hole(range.violation)}};
  }

  rec["lemma"] = lemma_json(lemma_pipeline(g));

  if (g.order() <= opts.limits.max_split_order) {
    rec["theorem"] = theorem_json(verify_main_theorem(g, opts.limits));
  } else {
    rec["theorem"] = Json{{"skipped", "order exceeds splittability guard"}};
  }

  if (claw.ok() && chi.chi > clique.size() && g.order() <= opts.limits.max_clique_drop_order) {
    const auto drop = small_clique_drop(g, opts.limits);
    rec["clique_drop"] = Json{{"found", drop.has_value()}, {"clique", drop ? to_json(drop->vertices) : Json(nullptr)}};
  }

  if (g.order() > 0 && is_connected(g)) {
    const DoubleCriticalResult dc = is_double_critical(g);
    Json edge = dc.violating_edge ? Json::array({dc.violating_edge->first, dc.violating_edge->second}) : Json(nullptr);
    rec["double_critical"] = Json{{"double_critical", dc.double_critical}, {"violating_edge", std::move(edge)}};
  }
  return rec;
}

Json theorem_record(const GraphInput& in, const RunOptions& opts) {
  Json rec = header(in);
  if (in.graph.order() > opts.limits.max_split_order) {
    rec["theorem"] = Json{{"skipped", "order exceeds splittability guard"}};
    return rec;
  }
  const TheoremVerdict v = verify_main_theorem(in.graph, opts.limits);
  rec["invariants"] = Json{{"alpha", v.hypotheses.alpha}, {"omega", v.hypotheses.omega}, {"chi", v.hypotheses.chi}};
  rec["theorem"] = theorem_json(v);
  return rec;
}

Json lemma_record(const GraphInput& in) {
  Json rec = header(in);
  const LemmaOutcome o = lemma_pipeline(in.graph);
  rec["lemma"] = lemma_json(o);
  return rec;
}

int count_if(const std::vector<Json>& records, const std::function<bool(const Json&)>& pred) {
  int c = 0;
  for (const Json& r : records) c += pred(r) ? 1 : 0;
  return c;
}

bool lemma_is(const Json& r, const char* kind) { return r.contains("lemma") && r["lemma"]["outcome"] == kind; }

bool lemma_disagrees(const Json& r) {
  return lemma_is(r, "cover") && !r["lemma"].value("agrees_with_recognizer", false);
}

bool theorem_flagged(const Json& r) { return r.contains("theorem") && r["theorem"].value("flagged", false); }

bool theorem_passer(const Json& r) {
  return r.contains("theorem") && r["theorem"].contains("hypotheses") && r["theorem"]["hypotheses"]["all"].get<bool>();
}

bool theorem_skipped(const Json& r) { return r.contains("theorem") && r["theorem"].contains("skipped"); }

Report assemble(std::string command, std::vector<Json> records) {
  Report rep;
  rep.command = std::move(command);
  for (Json& r : records) rep.records.push_back(std::move(r));
  return rep;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int Report::exit_code() const {
  for (const char* key : {"contradictions", "recognizer_disagreements", "flagged", "clique_drop_not_found"}) {
    if (summary.contains(key) && summary[key].get<int>() > 0) return 1;
  }
  return 0;
}

std::vector<GraphInput> corpus_inputs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open corpus " + path);
  std::vector<GraphInput> out;
  for (CorpusEntry& e : read_corpus(in)) out.push_back({std::move(e.id), std::move(e.graph)});
  return out;
}

std::vector<GraphInput> inline_inputs(const std::vector<std::string>& words) {
  std::vector<GraphInput> out;
  for (std::size_t k = 0; k < words.size(); ++k) {
    out.push_back({"inline:" + std::to_string(k + 1), parse_graph6(words[k])});
  }
  return out;
}

std::vector<GraphInput> exhaustive_inputs(int max_n) {
  if (max_n < 1 || max_n > kMaxCanonicalOrder) {
    throw UsageError("exhaustive corpora need 1 <= max-n <= " + std::to_string(kMaxCanonicalOrder));
  }
  std::vector<GraphInput> out;
  const auto classes = nonisomorphic_graphs_up_to(max_n);
  for (int n = 1; n <= max_n; ++n) {
    for (std::size_t k = 0; k < classes[n].size(); ++k) {
      out.push_back({"n" + std::to_string(n) + ":" + std::to_string(k + 1), classes[n][k]});
    }
  }
  return out;
}

std::vector<GraphInput> random_inputs(int count, int max_n, std::uint64_t seed) {
  if (max_n < 1) throw UsageError("--max-n must be at least 1");
  SplitMix64 rng(seed);
  std::vector<GraphInput> out;
  for (int k = 0; k < count; ++k) {
    const int n = 1 + rng.below(max_n);
    const double p = 0.2 + 0.6 * rng.uniform();
    out.push_back({"random:" + std::to_string(k + 1), random_graph(n, p, rng.next())});
  }
  return out;
}

std::vector<GraphInput> lemma_inputs(int count, const std::vector<int>& alphas, std::uint64_t seed, bool unrestricted) {
  if (alphas.empty()) throw UsageError("at least one alpha is required");
  SplitMix64 rng(seed);
  std::vector<GraphInput> out;
  for (int k = 0; k < count; ++k) {
    AttachmentSpec spec = random_attachment_spec(alphas[k % alphas.size()], rng);
    spec.unrestricted = unrestricted;
    out.push_back({"lemma:" + std::to_string(k + 1), lemma_class_instance(spec, rng.next()).graph});
  }
  return out;
}

GraphInput file_input(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream first(text.substr(0, text.find('\n')));
  int a = 0;
  int b = 0;
  const bool edge_list = static_cast<bool>(first >> a >> b);
  return {path, edge_list ? parse_edge_list(text) : parse_graph6(text)};
}

Report cmd_analyze(const std::vector<GraphInput>& inputs, const RunOptions& opts) {
  Report rep = assemble("analyze", run_parallel(
                                       inputs, [&](const GraphInput& in) { return timed(opts, [&] { return analyze_record(in, opts); }); },
                                       opts.jobs));
  std::vector<Json> recs(rep.records.begin(), rep.records.end());
  rep.summary = Json{{"parsed", recs.size()},
                     {"perfect", count_if(recs, [](const Json& r) { return r["perfect"]["perfect"].get<bool>(); })},
                     {"claw_free", count_if(recs, [](const Json& r) { return r["claw_free"]["claw_free"].get<bool>(); })},
                     {"quasi_line", count_if(recs, [](const Json& r) { return r["quasi_line"]["quasi_line"].get<bool>(); })},
                     {"lemma_covers", count_if(recs, [](const Json& r) { return lemma_is(r, "cover"); })},
                     {"contradictions", count_if(recs, [](const Json& r) { return lemma_is(r, "contradiction"); })},
                     {"recognizer_disagreements", count_if(recs, lemma_disagrees)},
                     {"flagged", count_if(recs, theorem_flagged)},
                     {"clique_drop_not_found", count_if(recs, [](const Json& r) {
                        return r.contains("clique_drop") && !r["clique_drop"]["found"].get<bool>();
                      })}};
  return rep;
}

Report cmd_verify_theorem(const std::vector<GraphInput>& inputs, const RunOptions& opts) {
  Report rep = assemble("verify-theorem",
                        run_parallel(
                            inputs, [&](const GraphInput& in) { return timed(opts, [&] { return theorem_record(in, opts); }); },
                            opts.jobs));
  std::vector<Json> recs(rep.records.begin(), rep.records.end());
  const int flagged = count_if(recs, theorem_flagged);
  const int passers = count_if(recs, theorem_passer);
  rep.summary = Json{{"parsed", recs.size()},
                     {"hypothesis_passers", passers},
                     {"certified", passers - flagged},
                     {"flagged", flagged},
                     {"skipped", count_if(recs, theorem_skipped)}};
  return rep;
}

Report cmd_verify_lemma(const std::vector<GraphInput>& inputs, const RunOptions& opts) {
  Report rep = assemble("verify-lemma", run_parallel(
                                            inputs, [&](const GraphInput& in) { return timed(opts, [&] { return lemma_record(in); }); },
                                            opts.jobs));
  std::vector<Json> recs(rep.records.begin(), rep.records.end());
  rep.summary = Json{{"parsed", recs.size()},
                     {"covers", count_if(recs, [](const Json& r) { return lemma_is(r, "cover"); })},
                     {"hypothesis_failures", count_if(recs, [](const Json& r) { return lemma_is(r, "hypothesis_failure"); })},
                     {"contradictions", count_if(recs, [](const Json& r) { return lemma_is(r, "contradiction"); })},
                     {"recognizer_disagreements", count_if(recs, lemma_disagrees)}};
  return rep;
}

Json report_json(const Report& report) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", report.command},
              {"run", report.run},
              {"records", report.records},
              {"summary", report.summary}};
}

std::string render_json(const Report& report) { return report_json(report).dump(2) + "\n"; }

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string theorem_text(const Json& th) {
  if (th.contains("skipped")) return "theorem=skipped";
  if (!th["hypotheses"]["all"].get<bool>()) return "theorem=hypotheses-fail";
  int certified = 0;
  for (const Json& o : th["outcomes"]) certified += o["certificate"].is_null() ? 0 : 1;
  return "theorem=" + std::to_string(certified) + "/" + std::to_string(th["outcomes"].size()) + "-certified" +
         (th["flagged"].get<bool>() ? " FLAGGED" : "");
}

std::string lemma_text(const Json& lm) {
  std::string s = "lemma=" + lm["outcome"].get<std::string>();
  if (lm.contains("failure")) s += "(" + lm["failure"]["hypothesis"].get<std::string>() + ")";
  if (lm.contains("contradiction")) s += "(" + lm["contradiction"]["stage"].get<std::string>() + ")";
  if (lm.contains("agrees_with_recognizer") && !lm["agrees_with_recognizer"].get<bool>()) s += " DISAGREES";
  return s;
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  for (const Json& r : report.records) {
    out << r["id"].get<std::string>() << " " << r["graph6"].get<std::string>() << " n=" << r["n"].get<int>();
    if (r.contains("invariants")) {
      const Json& inv = r["invariants"];
      out << " alpha=" << inv["alpha"].get<int>() << " omega=" << inv["omega"].get<int>() << " chi=" << inv["chi"].get<int>();
    }
    if (r.contains("perfect")) out << " perfect=" << yes_no(r["perfect"]["perfect"].get<bool>());
    if (r.contains("claw_free")) out << " claw-free=" << yes_no(r["claw_free"]["claw_free"].get<bool>());
    if (r.contains("quasi_line")) out << " quasi-line=" << yes_no(r["quasi_line"]["quasi_line"].get<bool>());
    if (r.contains("lemma")) out << " " << lemma_text(r["lemma"]);
    if (r.contains("theorem")) out << " " << theorem_text(r["theorem"]);
    if (r.contains("clique_drop")) {
      out << " clique-drop=" << (r["clique_drop"]["found"].get<bool>() ? r["clique_drop"]["clique"].dump() : "NOT-FOUND");
    }
    if (r.contains("timing")) out << " time=" << r["timing"]["seconds"].get<double>() << "s";
    out << "\n";
  }
  out << "summary " << report.command;
  for (const auto& [key, value] : report.summary.items()) out << " " << key << "=" << value.dump();
  out << "\n";
  return out.str();
}

namespace {

class Revalidator {
 public:
  explicit Revalidator(RevalidationResult& result) : result_(result) {}

  void record(const Json& rec) {
    ++result_.records;
    id_ = rec.value("id", std::string("?"));
    const Graph g = parse_graph6(rec.at("graph6").get<std::string>());
    if (rec.at("n").get<int>() != g.order()) problem("order does not match graph6");

    if (rec.contains("invariants") && rec["invariants"].contains("coloring")) invariants(g, rec["invariants"]);
    if (rec.contains("perfect") && !rec["perfect"]["obstruction"].is_null()) {
      const HoleCertificate h = hole_from_json(rec["perfect"]["obstruction"]);
      check(validate_hole(g, h) && h.length() >= 5 && h.length() % 2 == 1, "perfection obstruction");
    }
    if (rec.contains("claw_free") && !rec["claw_free"]["claw"].is_null()) {
      check(validate_claw(g, claw_from_json(rec["claw_free"]["claw"])), "claw witness");
    }
    if (rec.contains("quasi_line")) quasi_line(g, rec["quasi_line"]);
    if (rec.contains("hole_range") && !rec["hole_range"]["violation"].is_null()) {
      const Json& hr = rec["hole_range"];
      const HoleCertificate h = hole_from_json(hr["violation"]);
      check(validate_hole(g, h) && h.length() >= hr["lo"].get<int>() && h.length() <= hr["hi"].get<int>(),
            "hole-range violation");
    }
    if (rec.contains("lemma")) lemma(g, rec["lemma"]);
    if (rec.contains("theorem")) theorem(g, rec["theorem"]);
    if (rec.contains("clique_drop") && !rec["clique_drop"]["clique"].is_null()) {
      const VertexSet k = vertex_set_from_json(rec["clique_drop"]["clique"]);
      const int chi = chromatic_number(g).chi;
      check(is_clique(g, k) && chromatic_number_within(g, g.vertices() - k) > chi - k.size(), "clique-drop witness");
    }
    if (rec.contains("double_critical") && !rec["double_critical"]["violating_edge"].is_null()) {
      const Json& e = rec["double_critical"]["violating_edge"];
      const Vertex u = e.at(0).get<int>();
      const Vertex v = e.at(1).get<int>();
      const int chi = chromatic_number(g).chi;
      check(g.adjacent(u, v) && chromatic_number_within(g, g.vertices() - VertexSet{u, v}) != chi - 2,
            "double-critical violating edge");
    }
  }

 private:
  void problem(const std::string& what) { result_.problems.push_back(id_ + ": " + what); }

  void check(bool ok, const std::string& what) {
    ++result_.certificates;
    if (!ok) problem(what + " failed re-validation");
  }

  void invariants(const Graph& g, const Json& inv) {
    const VertexSet indep = vertex_set_from_json(inv["alpha_witness"]);
    const VertexSet clique = vertex_set_from_json(inv["omega_witness"]);
    check(is_independent(g, indep) && indep.size() == inv["alpha"].get<int>() &&
              independence_number(g).size() == indep.size(),
          "independence witness");
    check(is_clique(g, clique) && clique.size() == inv["omega"].get<int>() && max_clique(g).size() == clique.size(),
          "clique witness");
    const Coloring c = coloring_from_json(inv["coloring"]);
    const int chi = inv["chi"].get<int>();
    check(is_proper_coloring(g, c) && c.num_colors == chi && (chi == 0 || !k_colorable(g, chi - 1)), "optimal colouring");
  }

  void quasi_line(const Graph& g, const Json& q) {
    if (q.contains("cover")) {
      TwoCliqueCover cover;
      for (const Json& p : q["cover"]) cover.per_vertex.push_back(clique_pair_from_json(p));
      check(validate_two_clique_cover(g, cover), "two-clique cover");
      return;
    }
    const Vertex v = q["failing_vertex"].get<int>();
    const auto cyc = q["obstruction"].get<std::vector<Vertex>>();
    bool ok = v >= 0 && v < g.order() && cyc.size() % 2 == 1 && cyc.size() >= 3;
    for (std::size_t i = 0; ok && i < cyc.size(); ++i) {
      const Vertex a = cyc[i];
      const Vertex b = cyc[(i + 1) % cyc.size()];
      ok = g.neighbors(v).contains(a) && !g.adjacent(a, b) && a != b;
    }
    check(ok, "quasi-line obstruction");
  }

  void lemma(const Graph& g, const Json& lm) {
    const int alpha = lm["alpha"].get<int>();
    if (lm.contains("failure") && !lm["failure"]["hole"].is_null()) {
      const HoleCertificate h = hole_from_json(lm["failure"]["hole"]);
      check(validate_hole(g, h) && h.length() >= 4 && h.length() <= 2 * alpha - 1, "lemma hypothesis hole");
    }
    if (lm.contains("partition")) {
      const HoleCertificate c = hole_from_json(lm["partition"]["cycle"]);
      check(validate_hole(g, c) && c.length() == 2 * alpha + 1, "lemma anchor cycle");
    }
    if (lm.contains("cover")) {
      bool ok = lm["cover"].size() == static_cast<std::size_t>(g.order());
      for (const Json& item : lm["cover"]) {
        ok = ok && validate_neighborhood_cover(g, item["vertex"].get<int>(), clique_pair_from_json(item["cliques"]));
      }
      check(ok, "lemma cover");
    }
  }

  void theorem(const Graph& g, const Json& th) {
    if (!th.contains("hypotheses")) return;
    if (!th["hypotheses"]["hole"].is_null()) {
      check(validate_hole(g, hole_from_json(th["hypotheses"]["hole"])), "theorem hypothesis hole");
    }
    const int chi = chromatic_number(g).chi;
    for (const Json& o : th["outcomes"]) {
      if (o["certificate"].is_null()) continue;
      const SplitCertificate c = split_from_json(o["certificate"]);
      check(validate_split_certificate(g, c) && c.s == o["s"].get<int>() && c.t == o["t"].get<int>() &&
                c.s + c.t - 1 == chi,
            "split certificate (" + std::to_string(c.s) + "," + std::to_string(c.t) + ")");
    }
  }

  RevalidationResult& result_;
  std::string id_;
};

}  // namespace

RevalidationResult revalidate_report(const Json& document) {
  RevalidationResult result;
  if (!document.is_object() || document.value("schema_version", std::string()) != kSchemaVersion) {
    result.problems.push_back("missing or unsupported schema_version");
    return result;
  }
  Revalidator checker(result);
  for (const Json& rec : document.at("records")) {
    try {
      checker.record(rec);
    } catch (const std::exception& e) {
      result.problems.push_back(rec.value("id", std::string("?")) + ": malformed record (" + e.what() + ")");
    }
  }
  return result;
}

}  // namespace holefree::cli
