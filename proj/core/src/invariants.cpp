#include "holefree/invariants.hpp"

#include <algorithm>
#include <array>

namespace holefree {

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  const int n = g.order();
  if (static_cast<int>(c.color.size()) != n) return false;
  if (c.num_colors < 0 || c.num_colors > kMaxVertices) return false;
  std::uint64_t used = 0;
  for (int v = 0; v < n; ++v) {
    if (c.color[v] < 0 || c.color[v] >= c.num_colors) return false;
    used |= std::uint64_t{1} << c.color[v];
  }
  if (used != VertexSet::prefix(c.num_colors).bits()) return false;
  for (auto [u, v] : g.edges()) {
    if (c.color[u] == c.color[v]) return false;
  }
  return true;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, VertexSet within) : g_(g) {
    std::vector<Vertex> order = within.to_vector();
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return (g.neighbors(a) & within).size() > (g.neighbors(b) & within).size();
    });
    if (!order.empty()) expand(VertexSet{}, order);
  }

  VertexSet best() const { return best_; }

 private:
  void expand(VertexSet current, const std::vector<Vertex>& candidates) {
    // Greedy colour classes give |current| + colour as an upper bound.
    std::vector<VertexSet> classes;
    std::vector<std::pair<int, Vertex>> ranked;
    ranked.reserve(candidates.size());
    for (Vertex v : candidates) {
      std::size_t k = 0;
      while (k < classes.size() && classes[k].intersects(g_.neighbors(v))) ++k;
      if (k == classes.size()) classes.emplace_back();
      classes[k].insert(v);
      ranked.emplace_back(static_cast<int>(k) + 1, v);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    for (std::size_t i = ranked.size(); i-- > 0;) {
      auto [bound, v] = ranked[i];
      if (current.size() + bound <= best_.size()) return;
      VertexSet grown = current.with(v);
      std::vector<Vertex> next;
      for (std::size_t j = 0; j < i; ++j) {
        if (g_.adjacent(ranked[j].second, v)) next.push_back(ranked[j].second);
      }
      if (next.empty()) {
        if (grown.size() > best_.size()) best_ = grown;
      } else {
        expand(grown, next);
      }
    }
  }

  const Graph& g_;
  VertexSet best_;
};

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k)
      : g_(g), n_(g.order()), k_(k), color_(n_, -1), counts_(static_cast<std::size_t>(n_) * kMaxVertices, 0),
        blocked_(n_, 0) {}

  std::optional<Coloring> run() {
    if (n_ == 0) return Coloring{};
    if (k_ <= 0) return std::nullopt;
    if (!assign(0, 0)) return std::nullopt;
    Coloring c;
    c.color = color_;
    c.num_colors = 1 + *std::max_element(color_.begin(), color_.end());
    return c;
  }

 private:
  Vertex select() const {
    Vertex best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      const int sat = std::popcount(blocked_[v]);
      const int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void set(Vertex v, int c) {
    color_[v] = c;
    for (Vertex u : g_.neighbors(v)) {
      if (counts_[u * kMaxVertices + c]++ == 0) blocked_[u] |= std::uint64_t{1} << c;
    }
  }

  void unset(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    for (Vertex u : g_.neighbors(v)) {
      if (--counts_[u * kMaxVertices + c] == 0) blocked_[u] &= ~(std::uint64_t{1} << c);
    }
  }

  bool assign(int colored, int used) {
    if (colored == n_) return true;
    const Vertex v = select();
    // A new colour is only ever the next index, which removes colour permutations.
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if ((blocked_[v] >> c) & 1U) continue;
      set(v, c);
      if (assign(colored + 1, std::max(used, c + 1))) return true;
      unset(v);
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  std::vector<int> color_;
  std::vector<std::uint16_t> counts_;
  std::vector<std::uint64_t> blocked_;
};

}  // namespace

CliqueWitness max_clique_within(const Graph& g, VertexSet within) {
  if (!within.subset_of(g.vertices())) throw GraphError("max_clique_within: set outside graph");
  return CliqueWitness{CliqueSearch(g, within).best()};
}

CliqueWitness max_clique(const Graph& g) { return max_clique_within(g, g.vertices()); }

CliqueWitness independence_number(const Graph& g) { return max_clique(complement(g)); }

std::optional<Coloring> k_colorable(const Graph& g, int k) { return ColoringSearch(g, k).run(); }

Coloring greedy_coloring(const Graph& g) {
  const int n = g.order();
  Coloring c;
  c.color.assign(n, -1);
  std::vector<std::uint64_t> blocked(n, 0);
  for (int step = 0; step < n; ++step) {
    Vertex v = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex u = 0; u < n; ++u) {
      if (c.color[u] >= 0) continue;
      const int sat = std::popcount(blocked[u]);
      if (sat > best_sat || (sat == best_sat && g.degree(u) > best_deg)) {
        v = u;
        best_sat = sat;
        best_deg = g.degree(u);
      }
    }
    const int col = std::countr_one(blocked[v]);
    c.color[v] = col;
    c.num_colors = std::max(c.num_colors, col + 1);
    for (Vertex u : g.neighbors(v)) blocked[u] |= std::uint64_t{1} << col;
  }
  return c;
}

int greedy_color_count(const Graph& g, VertexSet within) {
  std::array<VertexSet, kMaxVertices> classes{};
  int used = 0;
  for (Vertex v : within) {
    int k = 0;
    while (k < used && classes[k].intersects(g.neighbors(v))) ++k;
    if (k == used) ++used;
    classes[k].insert(v);
  }
  return used;
}

ChromaticResult chromatic_number(const Graph& g) {
  if (g.order() == 0) return {};
  Coloring upper = greedy_coloring(g);
  const int lower = max_clique(g).size();
  for (int k = lower; k < upper.num_colors; ++k) {
    if (auto c = k_colorable(g, k)) return {c->num_colors, std::move(*c)};
  }
  return {upper.num_colors, std::move(upper)};
}

int chromatic_number_within(const Graph& g, VertexSet within) {
  if (within.empty()) return 0;
  return chromatic_number(induced_subgraph(g, within).graph).chi;
}

}  // namespace holefree
