#pragma once

// Batch commands behind the holefree executable. Each command maps a list of
// input graphs to one JSON record per graph (in input order, whatever the
// worker count) plus a summary, and the report renders as JSON or text.

#include <cstdint>
#include <string>
#include <vector>

#include "holefree/cli/serialize.hpp"
#include "holefree/graph.hpp"
#include "holefree/splitting.hpp"

namespace holefree::cli {

inline constexpr const char* kSchemaVersion = "1";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string id;
  Graph graph;
};

struct RunOptions {
  int jobs = 1;
  bool timing = true;
  /// Hole-range section of analyze records searches odd lengths only.
  bool odd_only = false;
  SplitLimits limits;
};

struct Report {
  std::string command;
  Json records = Json::array();
  Json summary = Json::object();
  /// Extra top-level fields describing the run (seed, source).
  Json run = Json::object();

  /// 1 when any record holds a lemma contradiction, a recognizer
  /// disagreement, or a theorem counterexample; 0 otherwise.
  int exit_code() const;
};

/// Sources. Ids are "line:N" for corpus files, "inline:K", "n<order>:K" for
/// exhaustive classes, "random:K" and "lemma:K" for generated graphs.
std::vector<GraphInput> corpus_inputs(const std::string& path);
std::vector<GraphInput> inline_inputs(const std::vector<std::string>& words);
std::vector<GraphInput> exhaustive_inputs(int max_n);
/// Orders uniform in [1, max_n], edge probability uniform in [0.2, 0.8].
std::vector<GraphInput> random_inputs(int count, int max_n, std::uint64_t seed);
/// Lemma-class instances; alpha cycles through `alphas`.
std::vector<GraphInput> lemma_inputs(int count, const std::vector<int>& alphas, std::uint64_t seed,
                                     bool unrestricted = false);
/// Reads one graph from a file: graph6 unless the first line holds two
/// integers, in which case it is an edge list.
GraphInput file_input(const std::string& path);

/// Full sweep of every check on each graph.
Report cmd_analyze(const std::vector<GraphInput>& inputs, const RunOptions& opts);
/// Hypothesis gate, then a certificate for every (s,t) split of chi.
Report cmd_verify_theorem(const std::vector<GraphInput>& inputs, const RunOptions& opts);
/// Lemma pipeline and its agreement with the generic recognizer.
Report cmd_verify_lemma(const std::vector<GraphInput>& inputs, const RunOptions& opts);

/// {"schema_version": "1", "command", "run", "records", "summary"}.
Json report_json(const Report& report);
std::string render_json(const Report& report);
/// One line per record followed by a summary line.
std::string render_text(const Report& report);

struct RevalidationResult {
  int records = 0;
  int certificates = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Rebuilds each record's graph from its graph6 word and re-checks every
/// embedded certificate from scratch.
RevalidationResult revalidate_report(const Json& document);

}  // namespace holefree::cli
