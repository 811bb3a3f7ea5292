#pragma once

// Test corpora: labelled enumeration, graph6 corpus files, seeded random
// graphs, and structured instances built from an odd cycle with clique
// attachments on three or four consecutive cycle vertices.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holefree/graph.hpp"
#include "holefree/holes.hpp"

namespace holefree {

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the output is mixed with
/// the multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (shifts 30, 27,
/// 31). Fully specified so corpora are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform();
  /// Uniform integer in [0, bound); bound must be positive.
  int below(int bound);
  bool chance(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

inline constexpr int kMaxLabeledEnumerationOrder = 9;

/// 2^(n choose 2).
std::uint64_t labeled_graph_count(int n);

/// Visits every labelled graph on n vertices in increasing edge-mask order
/// (bit k is the k-th pair in graph6 column order). Stops when `visit`
/// returns false. Throws GeneratorError when n exceeds 9.
void for_each_labeled_graph(int n, const std::function<bool(const Graph&)>& visit);

struct CorpusEntry {
  /// "line:<number>" within the source.
  std::string id;
  std::string graph6;
  Graph graph;
};

/// One graph6 word per line; blank lines and lines starting with '#' are
/// skipped. Throws FormatError naming the line on a malformed word.
class CorpusReader {
 public:
  explicit CorpusReader(std::istream& in) : in_(in) {}

  std::optional<CorpusEntry> next();

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<CorpusEntry> read_corpus(std::istream& in);
std::vector<CorpusEntry> read_corpus_file(const std::string& path);

/// Each pair independently an edge with probability p, pairs visited in
/// graph6 column order. Throws GeneratorError unless 0 <= p <= 1.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Attachment layout on the cycle C_{2*alpha+1}. a_sizes[i] vertices see
/// exactly v_i..v_{i+2}; b_sizes[i] vertices see exactly v_i..v_{i+3}. Each
/// attachment set is a clique.
struct AttachmentSpec {
  int alpha = 3;
  std::vector<int> a_sizes;
  std::vector<int> b_sizes;
  /// Probability of each optional edge.
  double cross_edge_probability = 0.5;
  /// Sample every non-mandatory attachment pair instead of only the
  /// patterns the structure permits.
  bool unrestricted = false;
  /// Reject and resample instances that fail the four hypotheses
  /// (alpha exact, hole-free range, degree bound, the long induced cycle).
  bool require_hypotheses = true;
};

/// Throws GeneratorError naming the broken rule (sizes, window of B).
void validate_attachment_spec(const AttachmentSpec& spec);

struct LemmaInstance {
  Graph graph;
  /// Cycle vertices are 0..2*alpha, in order.
  HoleCertificate cycle;
  std::vector<VertexSet> A;
  std::vector<VertexSet> B;
  int attempts = 0;
};

inline constexpr int kDefaultResampleBudget = 10000;

/// Throws GeneratorError when the budget runs out.
LemmaInstance lemma_class_instance(const AttachmentSpec& spec, std::uint64_t seed,
                                   int budget = kDefaultResampleBudget);

/// Random sizes: each A_i gets 0..max_size vertices, and B gets 0..max_size
/// vertices on each index of a random window of three.
AttachmentSpec random_attachment_spec(int alpha, SplitMix64& rng, int max_size = 2);

/// The four hypotheses for the lemma-class filter, with alpha given.
bool satisfies_lemma_hypotheses(const Graph& g, int alpha);

}  // namespace holefree
