#include "holefree/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <unordered_set>

namespace holefree {

namespace {

using Labels = std::array<int, kMaxCanonicalOrder>;

// Ordered partition: order[] lists vertices cell by cell, starts[k] marks the
// first position of a cell.
struct Partition {
  Labels order{};
  std::array<bool, kMaxCanonicalOrder + 1> starts{};
};

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) rows_[v] = g.rows()[v];
  }

  CanonicalForm run() {
    Partition root;
    for (int v = 0; v < n_; ++v) root.order[v] = v;
    root.starts.fill(false);
    root.starts[0] = true;
    root.starts[n_] = true;
    refine(root);
    Labels prefix{};
    search(root, prefix, 0);
    CanonicalForm out;
    out.code = best_code_;
    out.labelling.assign(best_.begin(), best_.begin() + n_);
    return out;
  }

 private:
  int cell_end(const Partition& p, int start) const {
    int e = start + 1;
    while (e < n_ && !p.starts[e]) ++e;
    return e;
  }

  // Splits cells by neighbour counts into earlier cells until the partition
  // is equitable. New cells are ordered by increasing count.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int ws = 0; ws < n_ && !changed; ws = cell_end(p, ws)) {
        const int we = cell_end(p, ws);
        std::uint64_t w = 0;
        for (int k = ws; k < we; ++k) w |= std::uint64_t{1} << p.order[k];
        for (int xs = 0; xs < n_ && !changed; xs = cell_end(p, xs)) {
          const int xe = cell_end(p, xs);
          if (xe - xs < 2) continue;
          std::array<int, kMaxCanonicalOrder> count{};
          bool uniform = true;
          for (int k = xs; k < xe; ++k) {
            count[p.order[k]] = std::popcount(rows_[p.order[k]] & w);
            if (count[p.order[k]] != count[p.order[xs]]) uniform = false;
          }
          if (uniform) continue;
          std::stable_sort(p.order.begin() + xs, p.order.begin() + xe,
                           [&](int a, int b) { return count[a] < count[b]; });
          for (int k = xs + 1; k < xe; ++k) {
            if (count[p.order[k]] != count[p.order[k - 1]]) p.starts[k] = true;
          }
          changed = true;
        }
      }
    }
  }

  std::uint64_t leaf_code(const Partition& p) const {
    std::uint64_t code = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        if ((rows_[p.order[i]] >> p.order[j]) & 1U) code |= std::uint64_t{1} << pair_index(i, j);
      }
    }
    return code;
  }

  void record_automorphism(const Labels& from, const Labels& to) {
    Labels gamma{};
    for (int k = 0; k < n_; ++k) gamma[from[k]] = to[k];
    autos_.push_back(gamma);
  }

  int find(Labels& parent, int v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  // Returns the depth the search should resume at; a value below `depth`
  // abandons this node.
  int search(const Partition& p, Labels& prefix, int depth) {
    int target = -1;
    for (int s = 0; s < n_; s = cell_end(p, s)) {
      if (cell_end(p, s) - s > 1) {
        target = s;
        break;
      }
    }
    if (target < 0) {
      const std::uint64_t code = leaf_code(p);
      if (!have_first_) {
        have_first_ = true;
        first_ = p.order;
        first_path_ = prefix;
        first_code_ = code;
        best_ = p.order;
        best_code_ = code;
        return depth;
      }
      if (code == first_code_) {
        record_automorphism(first_, p.order);
        int common = 0;
        while (common < depth && prefix[common] == first_path_[common]) ++common;
        return common;
      }
      if (code == best_code_) {
        record_automorphism(best_, p.order);
      } else if (code > best_code_) {
        best_code_ = code;
        best_ = p.order;
      }
      return depth;
    }

    const int end = cell_end(p, target);
    Labels cell{};
    const int size = end - target;
    for (int k = 0; k < size; ++k) cell[k] = p.order[target + k];
    std::sort(cell.begin(), cell.begin() + size);
    std::uint64_t tried = 0;
    for (int c = 0; c < size; ++c) {
      const int v = cell[c];
      if (tried != 0 && in_tried_orbit(v, tried, prefix, depth)) continue;
      tried |= std::uint64_t{1} << v;
      Partition child = p;
      auto pos = std::find(child.order.begin() + target, child.order.begin() + end, v);
      std::rotate(child.order.begin() + target, pos, pos + 1);
      child.starts[target + 1] = true;
      refine(child);
      prefix[depth] = v;
      const int resume = search(child, prefix, depth + 1);
      if (resume < depth) return resume;
    }
    return depth;
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current prefix pointwise.
  bool in_tried_orbit(int v, std::uint64_t tried, const Labels& prefix, int depth) {
    Labels parent{};
    for (int u = 0; u < n_; ++u) parent[u] = u;
    for (const Labels& gamma : autos_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = gamma[prefix[d]] == prefix[d];
      if (!fixes) continue;
      for (int u = 0; u < n_; ++u) {
        const int a = find(parent, u);
        const int b = find(parent, gamma[u]);
        if (a != b) parent[a] = b;
      }
    }
    const int root = find(parent, v);
    for (std::uint64_t t = tried; t != 0; t &= t - 1) {
      if (find(parent, std::countr_zero(t)) == root) return true;
    }
    return false;
  }

  int n_;
  std::array<std::uint64_t, kMaxCanonicalOrder> rows_{};
  bool have_first_ = false;
  Labels first_{};
  Labels first_path_{};
  std::uint64_t first_code_ = 0;
  Labels best_{};
  std::uint64_t best_code_ = 0;
  std::vector<Labels> autos_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw GraphError("canonical_form: order " + std::to_string(g.order()) + " exceeds " +
                     std::to_string(kMaxCanonicalOrder));
  }
  if (g.order() == 0) return {};
  return Canonizer(g).run();
}

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> pair_index(i, j)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph canonical_graph(const Graph& g) { return graph_from_code(g.order(), canonical_form(g).code); }

namespace {

std::vector<std::uint64_t> extend_codes(int n, const std::vector<std::uint64_t>& smaller) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> rows(n);
  for (std::uint64_t code : smaller) {
    const Graph base = graph_from_code(n - 1, code);
    for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
      for (int v = 0; v < n - 1; ++v) rows[v] = base.rows()[v] | (((nbrs >> v) & 1U) << (n - 1));
      rows[n - 1] = nbrs;
      const std::uint64_t canon = canonical_form(Graph::from_rows(n, rows)).code;
      if (seen.insert(canon).second) out.push_back(canon);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<Graph>> nonisomorphic_graphs_up_to(int max_n) {
  if (max_n < 0 || max_n > kMaxCanonicalOrder) throw GraphError("nonisomorphic_graphs: order out of range");
  std::vector<std::vector<Graph>> out(max_n + 1);
  out[0].push_back(Graph{});
  std::vector<std::uint64_t> codes{0};
  for (int n = 1; n <= max_n; ++n) {
    codes = n == 1 ? std::vector<std::uint64_t>{0} : extend_codes(n, codes);
    out[n].reserve(codes.size());
    for (std::uint64_t c : codes) out[n].push_back(graph_from_code(n, c));
  }
  return out;
}

std::vector<Graph> nonisomorphic_graphs(int n) { return std::move(nonisomorphic_graphs_up_to(n)[n]); }

}  // namespace holefree
