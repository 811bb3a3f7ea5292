#include "holefree/named_graphs.hpp"

#include <vector>

namespace holefree {

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle_graph: need at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph::from_edges(a + b, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph wheel_graph(int rim) {
  std::vector<Edge> edges = cycle_graph(rim).edges();
  for (int i = 0; i < rim; ++i) edges.emplace_back(i, rim);
  return Graph::from_edges(rim + 1, edges);
}

Graph cube_graph() {
  std::vector<Edge> edges;
  for (int u = 0; u < 8; ++u) {
    for (int bit = 0; bit < 3; ++bit) {
      const int v = u ^ (1 << bit);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(8, edges);
}

Graph complete_minus_matching(int n) {
  if (n % 2 != 0) throw GraphError("complete_minus_matching: order must be even");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!(u % 2 == 0 && v == u + 1)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order();
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(a + u, a + v);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, a + v);
  }
  return Graph::from_edges(a + h.order(), edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int a = g.order();
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(a + u, a + v);
  return Graph::from_edges(a + h.order(), edges);
}

Graph line_graph(const Graph& g) {
  const std::vector<Edge> es = g.edges();
  const int m = static_cast<int>(es.size());
  if (m > kMaxVertices) throw GraphError("line_graph: more than 64 edges");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const bool share = es[i].first == es[j].first || es[i].first == es[j].second ||
                         es[i].second == es[j].first || es[i].second == es[j].second;
      if (share) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(m, edges);
}

}  // namespace holefree
