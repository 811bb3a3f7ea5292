#include "holefree/io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace holefree {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw FormatError("graph6: empty word");

  for (char c : text) {
    if (c < 63 || c > 126) {
      throw FormatError("graph6: illegal character code " + std::to_string(static_cast<int>(c)));
    }
  }
  if (text.front() == 126) throw FormatError("graph6: long-form size prefix (n > 62) is not supported");

  const int n = text.front() - 63;
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bit_count + 5) / 6;
  if (text.size() != expected) {
    throw FormatError("graph6: length " + std::to_string(text.size()) + " does not match order " +
                      std::to_string(n) + " (expected " + std::to_string(expected) + ")");
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const int last = text.back() - 63;
    const int pad = static_cast<int>(6 - bit_count % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw FormatError("graph6: non-zero padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw FormatError("graph6: order " + std::to_string(n) + " exceeds short-form limit 62");
  }
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw FormatError("edge list: missing \"n m\" header");
  if (n < 0 || n > kMaxVertices) throw FormatError("edge list: order " + std::to_string(n) + " unsupported");
  if (m < 0) throw FormatError("edge list: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw FormatError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw FormatError("edge list: edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace holefree
