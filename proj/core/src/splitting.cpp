#include "holefree/splitting.hpp"

#include <functional>
#include <unordered_map>

#include "holefree/quasiline.hpp"

namespace holefree {

namespace {

class ChromaticCache {
 public:
  explicit ChromaticCache(const Graph& g) : g_(g) {}

  int operator()(VertexSet s) {
    auto [it, inserted] = cache_.try_emplace(s.bits(), 0);
    if (inserted) it->second = chromatic_number_within(g_, s);
    return it->second;
  }

  // chi(G[s]) >= target, using the greedy bound to skip exact work when it
  // already shows the answer is no.
  bool at_least(VertexSet s, int target) {
    if (target <= 0) return true;
    if (s.size() < target) return false;
    if (greedy_color_count(g_, s) < target) return false;
    if (max_clique_within(g_, s).size() >= target) return true;
    return (*this)(s) >= target;
  }

 private:
  const Graph& g_;
  std::unordered_map<std::uint64_t, int> cache_;
};

class SplitSearch {
 public:
  SplitSearch(const Graph& g, int s, int t) : g_(g), s_(s), t_(t), n_(g.order()), chi_(g) {}

  std::optional<VertexSet> run() {
    if (n_ == 0) return std::nullopt;
    // With equal targets the sides are interchangeable, so vertex 0 may be fixed in S.
    if (s_ == t_) return descend(1, VertexSet::single(0), VertexSet{});
    return descend(0, VertexSet{}, VertexSet{});
  }

 private:
  std::optional<VertexSet> descend(int next, VertexSet S, VertexSet T) {
    const VertexSet rest(g_.vertices().bits() & ~VertexSet::prefix(next).bits());
    // chi is monotone under adding vertices, so S + rest and T + rest bound
    // what either side can still reach.
    if (!chi_.at_least(S | rest, s_) || !chi_.at_least(T | rest, t_)) return std::nullopt;
    if (chi_.at_least(S, s_)) return S;
    if (chi_.at_least(T, t_)) return S | rest;
    if (next == n_) return std::nullopt;
    if (auto found = descend(next + 1, S.with(next), T)) return found;
    return descend(next + 1, S, T.with(next));
  }

  const Graph& g_;
  int s_;
  int t_;
  int n_;
  ChromaticCache chi_;
};

Coloring optimal_coloring_of(const Graph& g, VertexSet side) {
  if (side.empty()) return {};
  return chromatic_number(induced_subgraph(g, side).graph).coloring;
}

Vertex lowest_universal(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return v;
  }
  return -1;
}

void check_targets(int s, int t) {
  if (s < 2 || t < 2) throw GraphError("splittability targets must satisfy s, t >= 2");
}

}  // namespace

SplitCertificate make_split_certificate(const Graph& g, int s, int t, VertexSet S) {
  if (!S.subset_of(g.vertices())) throw GraphError("make_split_certificate: S outside graph");
  SplitCertificate cert;
  cert.s = s;
  cert.t = t;
  cert.S = S;
  cert.T = g.vertices() - S;
  cert.s_coloring = optimal_coloring_of(g, cert.S);
  cert.t_coloring = optimal_coloring_of(g, cert.T);
  return cert;
}

bool validate_split_certificate(const Graph& g, const SplitCertificate& cert) {
  if (cert.S.intersects(cert.T) || (cert.S | cert.T) != g.vertices()) return false;
  auto side_ok = [&](VertexSet side, const Coloring& coloring, int target) {
    const Graph h = induced_subgraph(g, side).graph;
    if (!is_proper_coloring(h, coloring)) return false;
    if (coloring.num_colors < target) return false;
    // Exact lower bound: no colouring with target-1 colours exists.
    return !k_colorable(h, target - 1).has_value();
  };
  return side_ok(cert.S, cert.s_coloring, cert.s) && side_ok(cert.T, cert.t_coloring, cert.t);
}

std::optional<SplitCertificate> is_splittable(const Graph& g, int s, int t, const SplitLimits& limits) {
  check_targets(s, t);
  if (g.order() > limits.max_split_order) {
    throw GraphError("is_splittable: order " + std::to_string(g.order()) + " exceeds guard " +
                     std::to_string(limits.max_split_order));
  }
  auto S = SplitSearch(g, s, t).run();
  if (!S) return std::nullopt;
  return make_split_certificate(g, s, t, *S);
}

MainHypotheses check_main_hypotheses(const Graph& g) {
  MainHypotheses h;
  h.alpha = independence_number(g).size();
  h.omega = max_clique(g).size();
  h.chi = chromatic_number(g).chi;
  h.alpha_ok = h.alpha >= 3;
  h.omega_below_chi = h.omega < h.chi;
  h.chi_ok = h.chi >= 3;
  if (2 * h.alpha - 1 >= 4) h.holes = hole_free_in_range(g, 4, 2 * h.alpha - 1);
  return h;
}

bool TheoremVerdict::flagged() const {
  for (const auto& o : outcomes) {
    if (o.counterexample) return true;
  }
  return false;
}

TheoremVerdict verify_main_theorem(const Graph& g, const SplitLimits& limits) {
  TheoremVerdict verdict;
  verdict.hypotheses = check_main_hypotheses(g);
  if (!verdict.hypotheses.all()) return verdict;
  const int chi = verdict.hypotheses.chi;
  std::vector<std::optional<SplitCertificate>> by_s(chi + 1);
  for (int s = 2; s <= chi - 1; ++s) {
    const int t = chi + 1 - s;
    if (s <= t) by_s[s] = is_splittable(g, s, t, limits);
  }
  for (int s = 2; s <= chi - 1; ++s) {
    const int t = chi + 1 - s;
    SplitOutcome o{s, t, std::nullopt, false};
    if (s <= t) {
      o.certificate = by_s[s];
    } else if (by_s[t]) {
      SplitCertificate swapped = *by_s[t];
      std::swap(swapped.S, swapped.T);
      std::swap(swapped.s_coloring, swapped.t_coloring);
      std::swap(swapped.s, swapped.t);
      o.certificate = std::move(swapped);
    }
    o.counterexample = !o.certificate.has_value();
    verdict.outcomes.push_back(std::move(o));
  }
  return verdict;
}

Reduction strip_universal_vertices(const Graph& g, int s, int t) {
  check_targets(s, t);
  Reduction r;
  r.reduced = g;
  r.s = s;
  r.t = t;
  r.to_original.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) r.to_original[v] = v;
  while (r.t > 2) {
    const Vertex u = lowest_universal(r.reduced);
    if (u < 0) break;
    r.removed.push_back(r.to_original[u]);
    InducedSubgraph rest = delete_vertices(r.reduced, VertexSet::single(u));
    std::vector<Vertex> mapped(rest.to_parent.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = r.to_original[rest.to_parent[i]];
    r.reduced = std::move(rest.graph);
    r.to_original = std::move(mapped);
    --r.t;
  }
  return r;
}

SplitCertificate lift_certificate(const Graph& g, const Reduction& reduction, const SplitCertificate& reduced_cert) {
  VertexSet S;
  for (Vertex v : reduced_cert.S) S.insert(reduction.to_original.at(v));
  const int t = reduced_cert.t + static_cast<int>(reduction.removed.size());
  return make_split_certificate(g, reduced_cert.s, t, S);
}

DoubleCriticalResult is_double_critical(const Graph& g) {
  if (g.order() == 0) throw GraphError("is_double_critical: empty graph");
  if (!is_connected(g)) throw GraphError("is_double_critical: graph is disconnected");
  const int chi = chromatic_number(g).chi;
  for (const Edge& e : g.edges()) {
    const VertexSet rest = g.vertices() - VertexSet{e.first, e.second};
    if (chromatic_number_within(g, rest) != chi - 2) return {false, e};
  }
  return {true, std::nullopt};
}

std::optional<CliqueWitness> small_clique_drop(const Graph& g, const SplitLimits& limits) {
  if (g.order() > limits.max_clique_drop_order) {
    throw GraphError("small_clique_drop: order " + std::to_string(g.order()) + " exceeds guard " +
                     std::to_string(limits.max_clique_drop_order));
  }
  if (!is_claw_free(g).ok()) throw GraphError("small_clique_drop: graph contains a claw");
  const int chi = chromatic_number(g).chi;
  if (chi <= max_clique(g).size()) throw GraphError("small_clique_drop: requires chi > omega");

  std::optional<CliqueWitness> found;
  // Cliques of exactly `size` vertices, extended in increasing vertex order.
  std::function<bool(VertexSet, VertexSet, int)> grow = [&](VertexSet clique, VertexSet cand, int size) {
    if (clique.size() == size) {
      if (chromatic_number_within(g, g.vertices() - clique) > chi - size) {
        found = CliqueWitness{clique};
        return true;
      }
      return false;
    }
    for (Vertex v : cand) {
      const VertexSet later(cand.bits() & ~VertexSet::prefix(v + 1).bits());
      if (grow(clique.with(v), later & g.neighbors(v), size)) return true;
    }
    return false;
  };
  for (int size = 1; size <= 5; ++size) {
    if (grow(VertexSet{}, g.vertices(), size)) return found;
  }
  return std::nullopt;
}

}  // namespace holefree
