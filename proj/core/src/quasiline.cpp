#include "holefree/quasiline.hpp"

#include <algorithm>
#include <deque>

namespace holefree {

namespace {

struct Bipartition {
  std::optional<CliquePair> sides;
  std::vector<Vertex> odd_cycle;
};

// Two-colours the complement of G[N(v)] by breadth-first search.
Bipartition split_neighborhood(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  const VertexSet nbhd = g.neighbors(v);
  std::array<int, kMaxVertices> side{};
  std::array<int, kMaxVertices> depth{};
  std::array<Vertex, kMaxVertices> parent{};
  side.fill(-1);

  auto anti = [&](Vertex u) { return nbhd - g.closed_neighbors(u); };

  for (Vertex root : nbhd) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    depth[root] = 0;
    parent[root] = -1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : anti(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          depth[y] = depth[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          // Tree paths to the common ancestor plus the edge xy close an odd cycle.
          std::vector<Vertex> left{x};
          std::vector<Vertex> right{y};
          Vertex a = x;
          Vertex b = y;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          return {std::nullopt, std::move(left)};
        }
      }
    }
  }
  CliquePair pair;
  for (Vertex u : nbhd) (side[u] == 0 ? pair.first : pair.second).insert(u);
  return {pair, {}};
}

}  // namespace

bool validate_claw(const Graph& g, const ClawWitness& w) {
  const int n = g.order();
  if (w.center < 0 || w.center >= n) return false;
  for (Vertex leaf : w.leaves) {
    if (leaf < 0 || leaf >= n || leaf == w.center || !g.adjacent(w.center, leaf)) return false;
  }
  const auto [a, b, c] = w.leaves;
  if (a == b || b == c || a == c) return false;
  return !g.adjacent(a, b) && !g.adjacent(b, c) && !g.adjacent(a, c);
}

ClawCheck is_claw_free(const Graph& g) {
  for (Vertex center = 0; center < g.order(); ++center) {
    const VertexSet nbhd = g.neighbors(center);
    for (Vertex a : nbhd) {
      const VertexSet after_a = nbhd - g.closed_neighbors(a) - VertexSet::prefix(a + 1);
      for (Vertex b : after_a) {
        const VertexSet after_b = after_a - g.closed_neighbors(b) - VertexSet::prefix(b + 1);
        if (!after_b.empty()) return {ClawWitness{center, {a, b, after_b.lowest()}}};
      }
    }
  }
  return {};
}

bool validate_neighborhood_cover(const Graph& g, Vertex v, const CliquePair& cover) {
  if (v < 0 || v >= g.order()) return false;
  const VertexSet nbhd = g.neighbors(v);
  if (!cover.first.subset_of(nbhd) || !cover.second.subset_of(nbhd)) return false;
  if ((cover.first | cover.second) != nbhd) return false;
  return is_clique(g, cover.first) && is_clique(g, cover.second);
}

std::optional<CliquePair> neighborhood_cover(const Graph& g, Vertex v) { return split_neighborhood(g, v).sides; }

std::vector<Vertex> neighborhood_obstruction(const Graph& g, Vertex v) { return split_neighborhood(g, v).odd_cycle; }

bool validate_two_clique_cover(const Graph& g, const TwoCliqueCover& cover) {
  if (static_cast<int>(cover.per_vertex.size()) != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!validate_neighborhood_cover(g, v, cover.per_vertex[v])) return false;
  }
  return true;
}

QuasiLineResult is_quasi_line(const Graph& g) {
  TwoCliqueCover cover;
  cover.per_vertex.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto split = split_neighborhood(g, v);
    if (!split.sides) return {std::nullopt, v, std::move(split.odd_cycle)};
    cover.per_vertex.push_back(*split.sides);
  }
  return {std::move(cover), -1, {}};
}

}  // namespace holefree
