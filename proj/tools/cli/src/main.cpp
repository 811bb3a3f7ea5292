#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>

#include "holefree/cli/commands.hpp"
#include "holefree/io.hpp"

namespace {

using namespace holefree;
using namespace holefree::cli;

constexpr int kExitUsage = 2;

struct SourceFlags {
  std::string corpus;
  std::vector<std::string> inline_words;
  std::string input;
  bool exhaustive = false;
  int random_count = 0;
  int lemma_count = 0;
  std::vector<int> alphas{3, 4};
  bool unrestricted = false;
  int max_n = 8;
  std::uint64_t seed = 1;
};

struct OutputFlags {
  std::string format = "text";
  std::string out = "-";
};

void add_sources(CLI::App* cmd, SourceFlags& src) {
  cmd->add_option("--corpus", src.corpus, "graph6 corpus file, one graph per line");
  cmd->add_option("--inline", src.inline_words, "graph6 word given on the command line (repeatable)");
  cmd->add_option("--input", src.input, "file holding one graph as graph6 or an edge list");
  cmd->add_flag("--exhaustive", src.exhaustive, "every isomorphism class on 1..max-n vertices");
  cmd->add_option("--random", src.random_count, "number of seeded random graphs on 1..max-n vertices");
  cmd->add_option("--generate", src.lemma_count, "number of generated lemma-class instances");
  cmd->add_option("--alpha", src.alphas, "target independence numbers for --generate")->check(CLI::Range(3, 8));
  cmd->add_flag("--unrestricted", src.unrestricted, "sample every attachment pair for --generate");
  cmd->add_option("--max-n", src.max_n, "largest order for --random, and for --exhaustive up to 11")
      ->check(CLI::Range(1, kMaxVertices));
  cmd->add_option("--seed", src.seed, "seed for --random and --generate");
}

void add_output(CLI::App* cmd, OutputFlags& out) {
  cmd->add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", out.out, "output path, '-' for stdout");
}

std::vector<GraphInput> collect(const SourceFlags& src) {
  std::vector<GraphInput> all;
  auto append = [&all](std::vector<GraphInput> more) {
    for (auto& g : more) all.push_back(std::move(g));
  };
  if (!src.corpus.empty()) append(corpus_inputs(src.corpus));
  if (!src.inline_words.empty()) append(inline_inputs(src.inline_words));
  if (!src.input.empty()) all.push_back(file_input(src.input));
  if (src.exhaustive) append(exhaustive_inputs(src.max_n));
  if (src.random_count > 0) append(random_inputs(src.random_count, src.max_n, src.seed));
  if (src.lemma_count > 0) append(lemma_inputs(src.lemma_count, src.alphas, src.seed, src.unrestricted));
  return all;
}

Json run_description(const SourceFlags& src) {
  Json run{{"seed", src.seed}, {"max_n", src.max_n}};
  if (!src.corpus.empty()) run["corpus"] = src.corpus;
  if (src.exhaustive) run["exhaustive"] = true;
  if (src.random_count > 0) run["random"] = src.random_count;
  if (src.lemma_count > 0) {
    run["generate"] = src.lemma_count;
    run["alphas"] = src.alphas;
    run["unrestricted"] = src.unrestricted;
  }
  return run;
}

void emit(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for hole-restricted graphs: invariants, quasi-line covers, splittability"};
  app.require_subcommand(1);

  SourceFlags src;
  OutputFlags output;
  RunOptions opts;
  bool no_timing = false;

  auto* analyze = app.add_subcommand("analyze", "every check on each input graph");
  auto* theorem = app.add_subcommand("verify-theorem", "splittability certificates for hypothesis passers");
  auto* lemma = app.add_subcommand("verify-lemma", "partition-and-cover construction on each graph");
  for (auto* cmd : {analyze, theorem, lemma}) {
    add_sources(cmd, src);
    add_output(cmd, output);
    cmd->add_option("--jobs", opts.jobs, "parallel graph-level workers")->check(CLI::Range(1, 256));
    cmd->add_flag("--no-timing", no_timing, "omit timing fields so reports are reproducible");
    cmd->add_option("--max-split-order", opts.limits.max_split_order, "splittability size guard");
    cmd->add_option("--max-clique-drop-order", opts.limits.max_clique_drop_order, "small-clique-drop size guard");
  }
  analyze->add_flag("--odd-only", opts.odd_only, "hole-range section searches odd lengths only");

  std::string kind = "exhaustive";
  int count = 100;
  auto* generate = app.add_subcommand("generate", "write a graph6 corpus");
  generate->add_option("kind", kind, "exhaustive, random or lemma")->check(CLI::IsMember({"exhaustive", "random", "lemma"}));
  generate->add_option("--count", count, "graphs for random and lemma corpora");
  generate->add_option("--max-n", src.max_n, "largest order (at most 11 for exhaustive)")->check(CLI::Range(1, kMaxVertices));
  generate->add_option("--seed", src.seed, "seed");
  generate->add_option("--alpha", src.alphas, "target independence numbers for lemma corpora")->check(CLI::Range(3, 8));
  generate->add_flag("--unrestricted", src.unrestricted, "sample every attachment pair");
  generate->add_option("--out", output.out, "output path, '-' for stdout");

  std::string report_path;
  auto* check = app.add_subcommand("check-report", "reload a JSON report and re-validate every certificate");
  check->add_option("report", report_path, "JSON report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  opts.timing = !no_timing;

  try {
    if (*generate) {
      std::vector<GraphInput> graphs;
      if (kind == "exhaustive") graphs = exhaustive_inputs(src.max_n);
      if (kind == "random") graphs = random_inputs(count, src.max_n, src.seed);
      if (kind == "lemma") graphs = lemma_inputs(count, src.alphas, src.seed, src.unrestricted);
      std::string text = "# " + kind + " corpus, seed " + std::to_string(src.seed) + "\n";
      for (const GraphInput& g : graphs) text += encode_graph6(g.graph) + "\n";
      emit(text, output.out);
      return 0;
    }
    if (*check) {
      std::ifstream in(report_path);
      if (!in) throw UsageError("cannot open " + report_path);
      const Json doc = Json::parse(in);
      const RevalidationResult r = revalidate_report(doc);
      for (const std::string& p : r.problems) std::cout << "FAIL " << p << "\n";
      std::cout << "records=" << r.records << " certificates=" << r.certificates << " problems=" << r.problems.size()
                << "\n";
      return r.ok() ? 0 : 1;
    }

    const std::vector<GraphInput> inputs = collect(src);
    Report report = *analyze ? cmd_analyze(inputs, opts) : *theorem ? cmd_verify_theorem(inputs, opts) : cmd_verify_lemma(inputs, opts);
    report.run = run_description(src);
    emit(output.format == "json" ? render_json(report) : render_text(report), output.out);
    return report.exit_code();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "report error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
