#include "holefree/holes.hpp"

#include <algorithm>
#include <string>

#include "holefree/invariants.hpp"

namespace holefree {

namespace {

// Path extension from the cycle's lowest vertex. Every interior vertex must
// avoid the closed neighbourhoods of all non-consecutive path vertices, so
// partial paths carrying a chord are never extended.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, int k, const std::function<bool(const std::vector<Vertex>&)>& visit)
      : g_(g), k_(k), visit_(visit), path_(k) {}

  // Returns false when the visitor asked to stop.
  bool run_anchor(Vertex anchor) {
    above_ = VertexSet(g_.vertices().bits() & ~VertexSet::prefix(anchor + 1).bits());
    path_[0] = anchor;
    for (Vertex v : g_.neighbors(anchor) & above_) {
      path_[1] = v;
      if (!extend(2, VertexSet{})) return false;
    }
    return true;
  }

 private:
  bool extend(int p, VertexSet inner) {
    const Vertex anchor = path_[0];
    const Vertex last = path_[p - 1];
    if (p == k_ - 1) {
      VertexSet cand = g_.neighbors(last) & g_.neighbors(anchor) & above_;
      cand -= inner;
      cand -= VertexSet::prefix(path_[1] + 1);
      for (Vertex u : cand) {
        path_[p] = u;
        if (!visit_(path_)) return false;
      }
      return true;
    }
    VertexSet cand = g_.neighbors(last) & above_;
    cand -= g_.closed_neighbors(anchor);
    cand -= inner;
    const VertexSet next_inner = inner | g_.closed_neighbors(last);
    for (Vertex u : cand) {
      path_[p] = u;
      if (!extend(p + 1, next_inner)) return false;
    }
    return true;
  }

  const Graph& g_;
  int k_;
  const std::function<bool(const std::vector<Vertex>&)>& visit_;
  std::vector<Vertex> path_;
  VertexSet above_;
};

void check_length(int k) {
  if (k < 3) throw GraphError("induced cycle length must be at least 3, got " + std::to_string(k));
}

}  // namespace

bool validate_hole(const Graph& g, const HoleCertificate& cert) {
  const int k = cert.length();
  if (k < 3 || k > g.order()) return false;
  VertexSet seen;
  for (Vertex v : cert.vertices) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  const bool want_edge = cert.kind == HoleKind::hole;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      const bool edge = g.adjacent(cert.vertices[i], cert.vertices[j]);
      if ((edge == want_edge) != consecutive) return false;
    }
  }
  return true;
}

void for_each_induced_cycle(const Graph& g, int k, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  check_length(k);
  if (k > g.order()) return;
  CycleSearch search(g, k, visit);
  for (Vertex a = 0; a + k <= g.order(); ++a) {
    if (!search.run_anchor(a)) return;
  }
}

std::optional<HoleCertificate> find_induced_cycle(const Graph& g, int k) {
  std::optional<HoleCertificate> found;
  for_each_induced_cycle(g, k, [&](const std::vector<Vertex>& cycle) {
    found = HoleCertificate{cycle, HoleKind::hole};
    return false;
  });
  return found;
}

std::optional<HoleCertificate> least_induced_cycle(const Graph& g, int k) {
  check_length(k);
  if (k > g.order()) return std::nullopt;
  std::optional<HoleCertificate> best;
  VertexSet best_set;
  const std::function<bool(const std::vector<Vertex>&)> visit = [&](const std::vector<Vertex>& cycle) {
    const VertexSet members = VertexSet::from(cycle);
    if (!best || members.lex_less(best_set)) {
      best = HoleCertificate{cycle, HoleKind::hole};
      best_set = members;
    }
    return true;
  };
  CycleSearch search(g, k, visit);
  // The anchor is the minimum of the cycle, so the first anchor with any
  // cycle holds the least one.
  for (Vertex a = 0; a + k <= g.order() && !best; ++a) search.run_anchor(a);
  return best;
}

HoleRangeResult hole_free_in_range(const Graph& g, int lo, int hi, LengthFilter filter) {
  if (lo < 4 || lo > hi) {
    throw GraphError("hole range [" + std::to_string(lo) + "," + std::to_string(hi) + "] invalid; need 4 <= lo <= hi");
  }
  for (int k = lo; k <= std::min(hi, g.order()); ++k) {
    if (filter == LengthFilter::odd_only && k % 2 == 0) continue;
    if (auto cert = find_induced_cycle(g, k)) return {std::move(cert)};
  }
  return {};
}

std::optional<HoleCertificate> has_odd_hole(const Graph& g) {
  for (int k = 5; k <= g.order(); k += 2) {
    if (auto cert = find_induced_cycle(g, k)) return cert;
  }
  return std::nullopt;
}

std::optional<HoleCertificate> has_odd_antihole(const Graph& g) {
  auto cert = has_odd_hole(complement(g));
  if (cert) cert->kind = HoleKind::antihole;
  return cert;
}

PerfectionResult is_perfect(const Graph& g) {
  if (auto hole = has_odd_hole(g)) return {false, std::move(hole)};
  if (auto antihole = has_odd_antihole(g)) return {false, std::move(antihole)};
  return {true, std::nullopt};
}

bool is_perfect_by_definition(const Graph& g) {
  const int n = g.order();
  if (n > kMaxDefinitionalPerfectOrder) {
    throw GraphError("is_perfect_by_definition: order " + std::to_string(n) + " exceeds oracle limit 12");
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const Graph h = induced_subgraph(g, VertexSet(mask)).graph;
    if (!k_colorable(h, max_clique(h).size())) return false;
  }
  return true;
}

CorollaryReport corollary_class_check(const Graph& g) {
  CorollaryReport report;
  report.alpha = independence_number(g).size();
  if (auto c4 = find_induced_cycle(g, 4)) {
    report.excluded_by = std::move(c4);
  } else if (2 * report.alpha + 1 >= 5) {
    report.excluded_by = hole_free_in_range(g, 5, 2 * report.alpha + 1, LengthFilter::odd_only).violation;
  }
  report.in_class = !report.excluded_by.has_value();
  auto perfection = is_perfect(g);
  report.perfect = perfection.perfect;
  report.obstruction = std::move(perfection.obstruction);
  report.consistent = !report.in_class || report.perfect;
  return report;
}

}  // namespace holefree
