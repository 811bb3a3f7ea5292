#include "holefree/graph.hpp"

#include <algorithm>
#include <sstream>

namespace holefree {

namespace {

void check_member(Vertex v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw GraphError(std::string(what) + ": vertex " + std::to_string(v) + " outside 0.." +
                     std::to_string(n - 1));
  }
}

void check_within(const Graph& g, VertexSet s, const char* what) {
  if (!s.subset_of(g.vertices())) {
    throw GraphError(std::string(what) + ": vertex " + std::to_string((s - g.vertices()).lowest()) +
                     " outside graph of order " + std::to_string(g.order()));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (Vertex v : members) {
    if (v < 0 || v >= kMaxVertices) throw GraphError("VertexSet: member out of range");
    insert(v);
  }
}

VertexSet VertexSet::from(std::span<const Vertex> members) {
  VertexSet s;
  for (Vertex v : members) {
    if (v < 0 || v >= kMaxVertices) throw GraphError("VertexSet: member out of range");
    s.insert(v);
  }
  return s;
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : *this) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

bool VertexSet::lex_less(VertexSet other) const {
  std::uint64_t a = bits_;
  std::uint64_t b = other.bits_;
  while (a != 0 && b != 0) {
    int x = std::countr_zero(a);
    int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

void Graph::check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("graph order " + std::to_string(n) + " outside supported range 0..64");
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (auto [u, v] : edges) {
    check_member(u, n, "from_edges");
    check_member(v, n, "from_edges");
    if (u == v) throw GraphError("from_edges: self-loop at vertex " + std::to_string(u));
    g.rows_[u] |= std::uint64_t{1} << v;
    g.rows_[v] |= std::uint64_t{1} << u;
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n)) throw GraphError("from_rows: row count differs from order");
  Graph g;
  g.n_ = n;
  const std::uint64_t range = VertexSet::prefix(n).bits();
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~range) != 0) throw GraphError("from_rows: row references vertex outside range");
    if ((rows[v] >> v) & 1U) throw GraphError("from_rows: self-loop at vertex " + std::to_string(v));
    g.rows_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u) {
    for (Vertex v : VertexSet(rows[u])) {
      if (!((rows[v] >> u) & 1U)) throw GraphError("from_rows: adjacency is not symmetric");
    }
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (Vertex v : VertexSet(rows_[u] & ~VertexSet::prefix(u + 1).bits())) out.emplace_back(u, v);
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> rows(n);
  const std::uint64_t all = VertexSet::prefix(n).bits();
  for (int v = 0; v < n; ++v) rows[v] = all & ~g.neighbors(v).bits() & ~(std::uint64_t{1} << v);
  return Graph::from_rows(n, rows);
}

VertexSet InducedSubgraph::lift(VertexSet local) const {
  VertexSet out;
  for (Vertex v : local) out.insert(to_parent.at(v));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet members) {
  check_within(g, members, "induced_subgraph");
  InducedSubgraph sub;
  sub.to_parent = members.to_vector();
  const int k = static_cast<int>(sub.to_parent.size());
  std::vector<std::uint64_t> rows(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(sub.to_parent[i], sub.to_parent[j])) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  sub.graph = Graph::from_rows(k, rows);
  return sub;
}

bool is_complete_between(const Graph& g, VertexSet a, VertexSet b) {
  check_within(g, a | b, "is_complete_between");
  if (a.intersects(b)) throw GraphError("is_complete_between: sets overlap");
  for (Vertex v : a) {
    if (!b.subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_anticomplete_between(const Graph& g, VertexSet a, VertexSet b) {
  check_within(g, a | b, "is_anticomplete_between");
  if (a.intersects(b)) throw GraphError("is_anticomplete_between: sets overlap");
  for (Vertex v : a) {
    if (g.neighbors(v).intersects(b)) return false;
  }
  return true;
}

bool is_clique(const Graph& g, VertexSet s) {
  check_within(g, s, "is_clique");
  for (Vertex v : s) {
    if (!(s.without(v)).subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  check_within(g, s, "is_independent");
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

std::size_t edges_within(const Graph& g, VertexSet s) {
  check_within(g, s, "edges_within");
  std::size_t twice = 0;
  for (Vertex v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= frontier;
  }
  return seen == g.vertices();
}

}  // namespace holefree
