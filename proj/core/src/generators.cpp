#include "holefree/generators.hpp"

#include <fstream>
#include <istream>

#include "holefree/invariants.hpp"
#include "holefree/io.hpp"

namespace holefree {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int SplitMix64::below(int bound) {
  if (bound <= 0) throw GeneratorError("SplitMix64::below: bound must be positive");
  return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > 11) throw GeneratorError("labeled_graph_count: order out of range");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

void for_each_labeled_graph(int n, const std::function<bool(const Graph&)>& visit) {
  if (n < 0 || n > kMaxLabeledEnumerationOrder) {
    throw GeneratorError("for_each_labeled_graph: order " + std::to_string(n) + " exceeds guard 9");
  }
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const std::uint64_t total = labeled_graph_count(n);
  std::vector<std::uint64_t> rows(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      auto [u, v] = pairs[std::countr_zero(m)];
      rows[u] |= std::uint64_t{1} << v;
      rows[v] |= std::uint64_t{1} << u;
    }
    if (!visit(Graph::from_rows(n, rows))) return;
  }
}

std::optional<CorpusEntry> CorpusReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string word = line.substr(start, end - start + 1);
    try {
      Graph g = parse_graph6(word);
      return CorpusEntry{"line:" + std::to_string(line_), std::move(word), std::move(g)};
    } catch (const std::exception& e) {
      throw FormatError("corpus line " + std::to_string(line_) + ": " + e.what());
    }
  }
  return std::nullopt;
}

std::vector<CorpusEntry> read_corpus(std::istream& in) {
  CorpusReader reader(in);
  std::vector<CorpusEntry> out;
  while (auto entry = reader.next()) out.push_back(std::move(*entry));
  return out;
}

std::vector<CorpusEntry> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open corpus file " + path);
  return read_corpus(in);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GeneratorError("random_graph: probability must lie in [0, 1]");
  if (n < 0 || n > kMaxVertices) throw GeneratorError("random_graph: order out of range");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (rng.chance(p)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

void validate_attachment_spec(const AttachmentSpec& spec) {
  if (spec.alpha < 3) throw GeneratorError("attachment spec: alpha must be at least 3");
  const int len = 2 * spec.alpha + 1;
  if (static_cast<int>(spec.a_sizes.size()) != len || static_cast<int>(spec.b_sizes.size()) != len) {
    throw GeneratorError("attachment spec: need 2*alpha+1 entries for both A and B sizes");
  }
  if (!(spec.cross_edge_probability >= 0.0 && spec.cross_edge_probability <= 1.0)) {
    throw GeneratorError("attachment spec: cross-edge probability outside [0, 1]");
  }
  int total = len;
  for (int i = 0; i < len; ++i) {
    if (spec.a_sizes[i] < 0 || spec.b_sizes[i] < 0) throw GeneratorError("attachment spec: negative size");
    total += spec.a_sizes[i] + spec.b_sizes[i];
  }
  if (total > kMaxVertices) throw GeneratorError("attachment spec: more than 64 vertices");
  bool windowed = true;
  bool any_b = false;
  for (int i = 0; i < len; ++i) any_b = any_b || spec.b_sizes[i] > 0;
  if (any_b) {
    windowed = false;
    for (int start = 0; start < len && !windowed; ++start) {
      bool fits = true;
      for (int j = 0; j < len; ++j) {
        const int off = ((j - start) % len + len) % len;
        if (off > 2 && spec.b_sizes[j] > 0) fits = false;
      }
      windowed = fits;
    }
  }
  if (!windowed) throw GeneratorError("attachment spec: non-empty B indices do not fit a window of three");
}

bool satisfies_lemma_hypotheses(const Graph& g, int alpha) {
  if (alpha < 3 || independence_number(g).size() != alpha) return false;
  if (!hole_free_in_range(g, 4, 2 * alpha - 1).ok()) return false;
  if (max_degree(g) > g.order() - 2) return false;
  return find_induced_cycle(g, 2 * alpha + 1).has_value();
}

namespace {

enum class Side { none, left, right };

LemmaInstance sample_instance(const AttachmentSpec& spec, SplitMix64& rng) {
  const int len = 2 * spec.alpha + 1;
  const double q = spec.cross_edge_probability;
  auto wrap = [len](int i) { return ((i % len) + len) % len; };

  LemmaInstance inst;
  inst.A.assign(len, VertexSet{});
  inst.B.assign(len, VertexSet{});
  int next = len;
  for (int i = 0; i < len; ++i) {
    for (int k = 0; k < spec.a_sizes[i]; ++k) inst.A[i].insert(next++);
  }
  for (int i = 0; i < len; ++i) {
    for (int k = 0; k < spec.b_sizes[i]; ++k) inst.B[i].insert(next++);
  }
  const int n = next;
  std::vector<std::uint64_t> rows(n, 0);
  auto link = [&](Vertex u, Vertex v) {
    if (u == v) return;
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  };
  auto link_all = [&](VertexSet a, VertexSet b) {
    for (Vertex u : a) {
      for (Vertex v : b) link(u, v);
    }
  };

  for (int i = 0; i < len; ++i) {
    link(i, (i + 1) % len);
    for (Vertex a : inst.A[i]) {
      for (int d = 0; d < 3; ++d) link(a, wrap(i + d));
    }
    for (Vertex b : inst.B[i]) {
      for (int d = 0; d < 4; ++d) link(b, wrap(i + d));
    }
    link_all(inst.A[i], inst.A[i]);
    link_all(inst.B[i], inst.B[i]);
    link_all(inst.A[i], inst.A[wrap(i + 1)]);
    link_all(inst.B[i], inst.A[i] | inst.A[wrap(i + 1)] | inst.B[wrap(i + 1)]);
  }
  const std::vector<std::uint64_t> mandatory = rows;

  if (spec.unrestricted) {
    for (Vertex u = len; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!((mandatory[u] >> v) & 1U) && rng.chance(q)) link(u, v);
      }
    }
  } else {
    // Each A vertex reaches at most one of A_{i-2}, A_{i+2}.
    std::vector<Side> side(n, Side::none);
    for (int i = 0; i < len; ++i) {
      for (Vertex a : inst.A[i]) side[a] = static_cast<Side>(rng.below(3));
    }
    for (int i = 0; i < len; ++i) {
      for (Vertex x : inst.A[i]) {
        for (Vertex y : inst.A[wrap(i + 2)]) {
          if (side[x] == Side::right && side[y] == Side::left && rng.chance(q)) link(x, y);
        }
      }
    }
    // Each B vertex is complete to one of A_{i-1}, A_{i+2} and sparse to the other.
    for (int i = 0; i < len; ++i) {
      for (Vertex b : inst.B[i]) {
        const bool left_complete = rng.chance(0.5);
        const VertexSet full = left_complete ? inst.A[wrap(i - 1)] : inst.A[wrap(i + 2)];
        const VertexSet partial = left_complete ? inst.A[wrap(i + 2)] : inst.A[wrap(i - 1)];
        for (Vertex a : full) link(b, a);
        for (Vertex a : partial) {
          if (rng.chance(q)) link(b, a);
        }
      }
    }
  }

  inst.graph = Graph::from_rows(n, rows);
  inst.cycle.kind = HoleKind::hole;
  for (int i = 0; i < len; ++i) inst.cycle.vertices.push_back(i);
  return inst;
}

}  // namespace

LemmaInstance lemma_class_instance(const AttachmentSpec& spec, std::uint64_t seed, int budget) {
  validate_attachment_spec(spec);
  SplitMix64 rng(seed);
  for (int attempt = 1; attempt <= budget; ++attempt) {
    LemmaInstance inst = sample_instance(spec, rng);
    inst.attempts = attempt;
    if (!spec.require_hypotheses || satisfies_lemma_hypotheses(inst.graph, spec.alpha)) return inst;
  }
  throw GeneratorError("lemma_class_instance: no instance passed the hypotheses within " + std::to_string(budget) +
                       " attempts");
}

AttachmentSpec random_attachment_spec(int alpha, SplitMix64& rng, int max_size) {
  AttachmentSpec spec;
  spec.alpha = alpha;
  const int len = 2 * alpha + 1;
  spec.a_sizes.assign(len, 0);
  spec.b_sizes.assign(len, 0);
  for (int i = 0; i < len; ++i) spec.a_sizes[i] = rng.below(max_size + 1);
  const int start = rng.below(len);
  for (int d = 0; d < 3; ++d) spec.b_sizes[(start + d) % len] = rng.below(max_size + 1);
  return spec;
}

}  // namespace holefree
