#include "holefree/lemma.hpp"

#include <algorithm>
#include <sstream>

#include "holefree/invariants.hpp"

namespace holefree {

namespace {

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

// Circular distance between cycle positions.
int cyc_dist(const CyclePartition& p, int i, int j) {
  const int d = p.wrap(i - j);
  return std::min(d, p.length() - d);
}

// Offset of j relative to i, in 0..L-1.
int offset(const CyclePartition& p, int i, int j) { return p.wrap(j - i); }

int index_in(const std::vector<VertexSet>& sets, Vertex x) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].contains(x)) return static_cast<int>(i);
  }
  return -1;
}

// First non-adjacent pair across (a, b), if any.
std::optional<std::pair<Vertex, Vertex>> missing_edge(const Graph& g, VertexSet a, VertexSet b) {
  for (Vertex x : a) {
    const VertexSet miss = b - g.neighbors(x) - VertexSet::single(x);
    if (!miss.empty()) return std::pair{x, miss.lowest()};
  }
  return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> present_edge(const Graph& g, VertexSet a, VertexSet b) {
  for (Vertex x : a) {
    const VertexSet hit = b & g.neighbors(x);
    if (!hit.empty()) return std::pair{x, hit.lowest()};
  }
  return std::nullopt;
}

ClaimStatus fail(int claim, std::vector<Vertex> witness, std::string detail) {
  return ClaimStatus{claim, false, std::move(witness), std::move(detail)};
}

void record(ClaimStatus& slot, ClaimStatus status) {
  if (slot.holds) slot = std::move(status);
}

bool is_normalized(const CyclePartition& p) {
  for (int j = 0; j < p.length(); ++j) {
    if (j >= 1 && j <= 3) continue;
    if (!p.B[j].empty()) return false;
  }
  return true;
}

// Claim 8 on one A_i: some vertex has neighbours on both sides.
std::optional<ClaimStatus> both_sides(const Graph& g, const CyclePartition& p, int i) {
  for (Vertex x : p.a(i)) {
    const VertexSet left = g.neighbors(x) & p.a(i - 2);
    const VertexSet right = g.neighbors(x) & p.a(i + 2);
    if (!left.empty() && !right.empty()) {
      return fail(8, {x, left.lowest(), right.lowest()},
                  "vertex " + std::to_string(x) + " of A_" + std::to_string(p.wrap(i)) +
                      " has neighbours in both A_" + std::to_string(p.wrap(i - 2)) + " and A_" +
                      std::to_string(p.wrap(i + 2)));
    }
  }
  return std::nullopt;
}

// Claim 9 on one B_i: some vertex misses a vertex of A_{i-1} and one of A_{i+2}.
std::optional<ClaimStatus> neither_side(const Graph& g, const CyclePartition& p, int i) {
  for (Vertex b : p.b(i)) {
    const VertexSet left = p.a(i - 1) - g.neighbors(b);
    const VertexSet right = p.a(i + 2) - g.neighbors(b);
    if (!left.empty() && !right.empty()) {
      return fail(9, {b, left.lowest(), right.lowest()},
                  "vertex " + std::to_string(b) + " of B_" + std::to_string(p.wrap(i)) + " is complete to neither A_" +
                      std::to_string(p.wrap(i - 1)) + " nor A_" + std::to_string(p.wrap(i + 2)));
    }
  }
  return std::nullopt;
}

// Claim 11 on a normalized partition.
std::optional<ClaimStatus> b_meets_outer_a(const Graph& g, const CyclePartition& q, int j) {
  for (Vertex b : q.b(j)) {
    for (Vertex a : g.neighbors(b) & q.a(j - 1)) {
      const VertexSet far = g.neighbors(a) & q.a(j - 3);
      if (!far.empty()) {
        return fail(11, {b, a, far.lowest()},
                    "vertex " + std::to_string(b) + " of B_" + std::to_string(j) + " is adjacent to " +
                        std::to_string(a) + " in A^1_" + std::to_string(q.wrap(j - 1)));
      }
    }
    for (Vertex a : g.neighbors(b) & q.a(j + 2)) {
      const VertexSet far = g.neighbors(a) & q.a(j + 4);
      if (!far.empty()) {
        return fail(11, {b, a, far.lowest()},
                    "vertex " + std::to_string(b) + " of B_" + std::to_string(j) + " is adjacent to " +
                        std::to_string(a) + " in A^3_" + std::to_string(q.wrap(j + 2)));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Classification classify_vertex(const Graph& g, const HoleCertificate& cycle, Vertex w) {
  if (w < 0 || w >= g.order()) throw GraphError("classify_vertex: vertex " + std::to_string(w) + " out of range");
  const int len = cycle.length();
  Classification out;
  for (int i = 0; i < len; ++i) {
    if (cycle.vertices[i] == w) throw GraphError("classify_vertex: vertex " + std::to_string(w) + " lies on the cycle");
    if (g.adjacent(w, cycle.vertices[i])) out.trace.push_back(i);
  }
  const int size = static_cast<int>(out.trace.size());
  if (size == len) {
    out.kind = TraceClass::J;
    return out;
  }
  if (size != 3 && size != 4) return out;
  std::vector<bool> on(len, false);
  for (int i : out.trace) on[i] = true;
  int starts = 0;
  int start = -1;
  for (int i = 0; i < len; ++i) {
    if (on[i] && !on[(i + len - 1) % len]) {
      ++starts;
      start = i;
    }
  }
  if (starts != 1) return out;
  out.kind = size == 3 ? TraceClass::A : TraceClass::B;
  out.index = start;
  return out;
}

PartitionResult build_partition(const Graph& g, const HoleCertificate& cycle, int alpha) {
  if (!validate_hole(g, cycle)) throw GraphError("build_partition: certificate is not an induced cycle");
  if (cycle.length() != 2 * alpha + 1) {
    throw GraphError("build_partition: cycle length " + std::to_string(cycle.length()) + " != 2*alpha+1 = " +
                     std::to_string(2 * alpha + 1));
  }
  CyclePartition p;
  p.cycle = cycle;
  p.alpha = alpha;
  p.A.assign(cycle.length(), VertexSet{});
  p.B.assign(cycle.length(), VertexSet{});
  for (Vertex w : g.vertices() - cycle.members()) {
    Classification c = classify_vertex(g, cycle, w);
    switch (c.kind) {
      case TraceClass::J: p.J.insert(w); break;
      case TraceClass::A: p.A[c.index].insert(w); break;
      case TraceClass::B: p.B[c.index].insert(w); break;
      case TraceClass::violation: return {std::nullopt, w, std::move(c.trace)};
    }
  }
  return {std::move(p), -1, {}};
}

bool ClaimReport::all_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimStatus& c) { return c.holds; });
}

std::vector<int> ClaimReport::failing() const {
  std::vector<int> out;
  for (const auto& c : claims) {
    if (!c.holds) out.push_back(c.claim);
  }
  return out;
}

ClaimReport verify_structural_claims(const Graph& g, const CyclePartition& p) {
  ClaimReport report;
  for (int c = 0; c < kClaimCount; ++c) report.claims[c].claim = c + 1;
  auto slot = [&](int claim) -> ClaimStatus& { return report.claims[claim - 1]; };
  const int len = p.length();
  auto name = [&](const char* set, int i) { return std::string(set) + "_" + std::to_string(p.wrap(i)); };

  // 1: re-derive every classification independently of p.
  for (Vertex w : g.vertices() - p.cycle_set()) {
    const Classification c = classify_vertex(g, p.cycle, w);
    const bool matches = (c.kind == TraceClass::J && p.J.contains(w)) ||
                         (c.kind == TraceClass::A && p.A[c.index].contains(w)) ||
                         (c.kind == TraceClass::B && p.B[c.index].contains(w));
    if (!matches) {
      record(slot(1), fail(1, {w}, "vertex " + std::to_string(w) + " has trace {" + join(c.trace) + "} on the cycle"));
    }
  }

  // 2
  if (!p.J.empty()) {
    record(slot(2), fail(2, {p.J.lowest()}, "vertex " + std::to_string(p.J.lowest()) + " is complete to the cycle"));
  }

  for (int i = 0; i < len; ++i) {
    // 3
    for (auto [set, label] : {std::pair{p.a(i), "A"}, std::pair{p.b(i), "B"}}) {
      if (auto e = missing_edge(g, set, set)) {
        record(slot(3), fail(3, {e->first, e->second}, name(label, i) + " is not a clique"));
      }
    }
    if (auto e = missing_edge(g, p.a(i), p.a(i + 1))) {
      record(slot(3), fail(3, {e->first, e->second}, name("A", i) + " is not complete to " + name("A", i + 1)));
    }

    for (int j = 0; j < len; ++j) {
      // 4
      if (cyc_dist(p, i, j) > 2) {
        if (auto e = present_edge(g, p.a(i), p.a(j))) {
          record(slot(4), fail(4, {e->first, e->second}, name("A", i) + " meets " + name("A", j)));
        }
      }
      // 5, anticomplete part
      if (cyc_dist(p, i, j) > 1) {
        if (auto e = present_edge(g, p.b(i), p.b(j))) {
          record(slot(5), fail(5, {e->first, e->second}, name("B", i) + " meets " + name("B", j)));
        }
      }
      // 6
      if (cyc_dist(p, i, j) > 2 && !p.b(i).empty() && !p.b(j).empty()) {
        record(slot(6), fail(6, {p.b(i).lowest(), p.b(j).lowest()},
                             name("B", i) + " and " + name("B", j) + " are both non-empty"));
      }
      // 7
      const int off = offset(p, i, j);
      if (off != len - 1 && off != 0 && off != 1 && off != 2) {
        if (auto e = present_edge(g, p.b(i), p.a(j))) {
          record(slot(7), fail(7, {e->first, e->second}, name("B", i) + " meets " + name("A", j)));
        }
      }
    }

    // 5, complete part
    for (auto [other, label] : {std::pair{p.b(i - 1), name("B", i - 1)}, std::pair{p.a(i), name("A", i)},
                                std::pair{p.a(i + 1), name("A", i + 1)}, std::pair{p.b(i + 1), name("B", i + 1)}}) {
      if (auto e = missing_edge(g, p.b(i), other)) {
        record(slot(5), fail(5, {e->first, e->second}, name("B", i) + " is not complete to " + label));
      }
    }

    // 8, 9
    if (auto s = both_sides(g, p, i)) record(slot(8), std::move(*s));
    if (auto s = neither_side(g, p, i)) record(slot(9), std::move(*s));
  }

  // 10, 11
  if (auto normalized = normalize_rotation(p)) {
    const CyclePartition& q = normalized->partition;
    for (int j = 1; j <= 3; ++j) {
      if (auto s = b_meets_outer_a(g, q, j)) record(slot(11), std::move(*s));
    }
  } else {
    std::vector<Vertex> reps;
    std::vector<int> indices;
    for (int j = 0; j < len; ++j) {
      if (!p.B[j].empty()) {
        reps.push_back(p.B[j].lowest());
        indices.push_back(j);
      }
    }
    record(slot(10), fail(10, reps, "non-empty B indices {" + join(indices) + "} fit no window of three"));
  }
  return report;
}

bool witness_confirms(const Graph& g, const CyclePartition& p, const ClaimStatus& status) {
  if (status.holds) return false;
  const auto& w = status.witness;
  auto in_range = [&](Vertex x) { return x >= 0 && x < g.order(); };
  if (!std::all_of(w.begin(), w.end(), in_range)) return false;
  auto ai = [&](Vertex x) { return index_in(p.A, x); };
  auto bi = [&](Vertex x) { return index_in(p.B, x); };
  const int len = p.length();

  switch (status.claim) {
    case 1: {
      if (w.size() != 1 || p.cycle_set().contains(w[0])) return false;
      const Classification c = classify_vertex(g, p.cycle, w[0]);
      return c.kind == TraceClass::violation || (c.kind == TraceClass::A && !p.A[c.index].contains(w[0])) ||
             (c.kind == TraceClass::B && !p.B[c.index].contains(w[0])) ||
             (c.kind == TraceClass::J && !p.J.contains(w[0]));
    }
    case 2:
      return w.size() == 1 && p.J.contains(w[0]) && p.cycle_set().subset_of(g.neighbors(w[0]));
    case 3: {
      if (w.size() != 2 || w[0] == w[1] || g.adjacent(w[0], w[1])) return false;
      const int a0 = ai(w[0]), a1 = ai(w[1]), b0 = bi(w[0]), b1 = bi(w[1]);
      if (a0 >= 0 && a1 >= 0) return cyc_dist(p, a0, a1) <= 1;
      return b0 >= 0 && b0 == b1;
    }
    case 4: {
      if (w.size() != 2 || !g.adjacent(w[0], w[1])) return false;
      const int a0 = ai(w[0]), a1 = ai(w[1]);
      return a0 >= 0 && a1 >= 0 && cyc_dist(p, a0, a1) > 2;
    }
    case 5: {
      if (w.size() != 2) return false;
      const int b0 = bi(w[0]);
      if (b0 < 0) return false;
      const bool adjacent = g.adjacent(w[0], w[1]);
      const int b1 = bi(w[1]);
      const int a1 = ai(w[1]);
      if (b1 >= 0) {
        const int d = cyc_dist(p, b0, b1);
        return (d == 1 && !adjacent) || (d > 1 && adjacent);
      }
      if (a1 >= 0) {
        const int off = offset(p, b0, a1);
        return (off == 0 || off == 1) && !adjacent;
      }
      return false;
    }
    case 6: {
      if (w.size() != 2) return false;
      const int b0 = bi(w[0]), b1 = bi(w[1]);
      return b0 >= 0 && b1 >= 0 && cyc_dist(p, b0, b1) > 2;
    }
    case 7: {
      if (w.size() != 2 || !g.adjacent(w[0], w[1])) return false;
      const int b0 = bi(w[0]), a1 = ai(w[1]);
      if (b0 < 0 || a1 < 0) return false;
      const int off = offset(p, b0, a1);
      return off != len - 1 && off != 0 && off != 1 && off != 2;
    }
    case 8: {
      if (w.size() != 3) return false;
      const int i = ai(w[0]);
      return i >= 0 && p.a(i - 2).contains(w[1]) && p.a(i + 2).contains(w[2]) && g.adjacent(w[0], w[1]) &&
             g.adjacent(w[0], w[2]);
    }
    case 9: {
      if (w.size() != 3) return false;
      const int i = bi(w[0]);
      return i >= 0 && p.a(i - 1).contains(w[1]) && p.a(i + 2).contains(w[2]) && !g.adjacent(w[0], w[1]) &&
             !g.adjacent(w[0], w[2]);
    }
    case 10:
      return !normalize_rotation(p).has_value();
    case 11: {
      if (w.size() != 3) return false;
      auto normalized = normalize_rotation(p);
      if (!normalized) return false;
      const CyclePartition& q = normalized->partition;
      const int j = index_in(q.B, w[0]);
      if (j < 1 || j > 3 || !g.adjacent(w[0], w[1]) || !g.adjacent(w[1], w[2])) return false;
      return (q.a(j - 1).contains(w[1]) && q.a(j - 3).contains(w[2])) ||
             (q.a(j + 2).contains(w[1]) && q.a(j + 4).contains(w[2]));
    }
    default:
      return false;
  }
}

CyclePartition reindex(const CyclePartition& p, int rotation, bool reflected) {
  const int len = p.length();
  CyclePartition q;
  q.alpha = p.alpha;
  q.J = p.J;
  q.cycle.kind = p.cycle.kind;
  q.cycle.vertices.resize(len);
  q.A.resize(len);
  q.B.resize(len);
  for (int k = 0; k < len; ++k) {
    if (!reflected) {
      q.cycle.vertices[k] = p.v(k + rotation);
      q.A[k] = p.a(k + rotation);
      q.B[k] = p.b(k + rotation);
    } else {
      // v'_k = v_{r-k}; a vertex on v_i..v_{i+2} now sits on v'_{r-i-2}..v'_{r-i}.
      q.cycle.vertices[k] = p.v(rotation - k);
      q.A[k] = p.a(rotation - k - 2);
      q.B[k] = p.b(rotation - k - 3);
    }
  }
  return q;
}

std::optional<NormalizedPartition> normalize_rotation(const CyclePartition& p) {
  for (bool reflected : {false, true}) {
    for (int r = 0; r < p.length(); ++r) {
      CyclePartition q = reindex(p, r, reflected);
      if (is_normalized(q)) return NormalizedPartition{std::move(q), r, reflected};
    }
  }
  return std::nullopt;
}

VertexSet RefinedPartition::a_part(int i, int k) const {
  const int idx = base.wrap(i);
  switch (k) {
    case 1: return A1[idx];
    case 2: return A2[idx];
    case 3: return A3[idx];
    default: throw GraphError("a_part: part index must be 1, 2 or 3");
  }
}

RefineResult refine(const Graph& g, const CyclePartition& normalized) {
  if (!is_normalized(normalized)) throw GraphError("refine: partition has non-empty B_j outside j = 1..3");
  RefineResult result;
  RefinedPartition& r = result.refined;
  r.base = normalized;
  const CyclePartition& p = r.base;
  const int len = p.length();
  r.A1.assign(len, VertexSet{});
  r.A2.assign(len, VertexSet{});
  r.A3.assign(len, VertexSet{});
  for (int i = 0; i < len; ++i) {
    for (Vertex a : p.a(i)) {
      if (g.neighbors(a).intersects(p.a(i - 2))) r.A1[i].insert(a);
      if (g.neighbors(a).intersects(p.a(i + 2))) r.A3[i].insert(a);
    }
    r.A2[i] = p.a(i) - r.A1[i] - r.A3[i];
    if (auto s = both_sides(g, p, i)) result.violations.push_back(std::move(*s));
  }
  for (int j = 1; j <= 3; ++j) {
    for (Vertex b : p.b(j)) {
      if (p.a(j - 1).subset_of(g.neighbors(b))) r.B1[j].insert(b);
      if (p.a(j + 2).subset_of(g.neighbors(b))) r.B2[j].insert(b);
    }
    if (auto s = neither_side(g, p, j)) result.violations.push_back(std::move(*s));
    if (auto s = b_meets_outer_a(g, p, j)) result.violations.push_back(std::move(*s));
  }
  return result;
}

namespace {

// The clique pairs of the construction, one function per case.
class CoverBuilder {
 public:
  CoverBuilder(const Graph& g, const RefinedPartition& r, Vertex x)
      : g_(g), r_(r), p_(r.base), x_(x), nx_(g.neighbors(x)) {}

  LemmaCover build() {
    LemmaCover out;
    out.vertex = x_;
    const int len = p_.length();
    for (int i = 0; i < len; ++i) {
      if (p_.cycle.vertices[i] == x_) return finish(on_cycle(i));
    }
    if (p_.J.contains(x_)) {
      out.problem = "vertex lies in J, which the construction assumes empty";
      out.rule = "J";
      return out;
    }
    if (const int i = index_in(p_.A, x_); i >= 0) {
      const int k = r_.A1[i].contains(x_) ? 1 : r_.A3[i].contains(x_) ? 3 : 2;
      return finish(i <= 5 ? in_a_near(i, k) : in_a_generic(i, k));
    }
    if (const int j = index_in(p_.B, x_); j >= 1 && j <= 3) {
      const int k = r_.B1[j].contains(x_) ? 1 : 2;
      return finish(in_b(j, k));
    }
    out.problem = "vertex has no class in the normalized partition";
    out.rule = "unclassified";
    return out;
  }

 private:
  struct Pair {
    std::string rule;
    VertexSet first;
    VertexSet second;
  };

  VertexSet A(int i) const { return p_.a(i); }
  VertexSet B(int j) const { return p_.b(j); }
  VertexSet B1(int j) const { return r_.B1.at(j); }
  VertexSet B2(int j) const { return r_.B2.at(j); }
  VertexSet V(int i) const { return VertexSet::single(p_.v(i)); }
  VertexSet N(VertexSet s) const { return s & nx_; }
  VertexSet minus_x(VertexSet s) const { return s.without(x_); }

  static std::string label(const char* which, const char* var, int idx, int k) {
    std::string s = std::string(which) + ": " + var + "=" + std::to_string(idx);
    if (k > 0) s += ", k=" + std::to_string(k);
    return s;
  }

  Pair in_a_generic(int i, int k) const {
    const std::string rule = label("case 1", "i", i, k);
    switch (k) {
      case 1: return {rule, N(A(i - 2)) | A(i - 1) | V(i), minus_x(A(i)) | A(i + 1) | V(i + 1) | V(i + 2)};
      case 2: return {rule, A(i - 1) | minus_x(A(i)) | V(i), A(i + 1) | V(i + 1) | V(i + 2)};
      default: return {rule, A(i - 1) | minus_x(A(i)) | V(i) | V(i + 1), A(i + 1) | N(A(i + 2)) | V(i + 2)};
    }
  }

  Pair in_a_near(int i, int k) const {
    const std::string rule = label("case 2", "i", i, k);
    const VertexSet ax = minus_x(A(i));
    switch (i * 4 + k) {
      case 0 * 4 + 1: return {rule, N(A(-2)) | A(-1) | V(0), ax | A(1) | V(1) | V(2)};
      case 0 * 4 + 2: return {rule, A(-1) | ax | V(0), A(1) | N(B(1)) | V(1) | V(2)};
      // v_1 sits in the first clique here: A_2 misses v_1, so v_1 cannot
      // share a clique with the neighbours of x in A_2.
      case 0 * 4 + 3: return {rule, A(-1) | ax | V(0) | V(1), A(1) | N(B(1)) | N(A(2)) | V(2)};

      case 1 * 4 + 1: return {rule, N(A(-1)) | A(0) | V(1), ax | B(1) | A(2) | V(2) | V(3)};
      case 1 * 4 + 2: return {rule, A(0) | ax | V(1), B(1) | A(2) | N(B(2)) | V(2) | V(3)};
      case 1 * 4 + 3: return {rule, A(0) | ax | B1(1) | V(1) | V(2), B2(1) | A(2) | N(B(2)) | N(A(3)) | V(3)};

      case 2 * 4 + 1: return {rule, N(A(0)) | A(1) | B1(1) | V(2), ax | B2(1) | B(2) | A(3) | V(3) | V(4)};
      case 2 * 4 + 2: return {rule, A(1) | B(1) | ax | V(2), B(2) | A(3) | N(B(3)) | V(3) | V(4)};
      case 2 * 4 + 3: return {rule, A(1) | B(1) | ax | B1(2) | V(2) | V(3), B2(2) | A(3) | N(B(3)) | N(A(4)) | V(4)};

      case 3 * 4 + 1: return {rule, N(A(1)) | N(B(1)) | A(2) | B1(2) | V(3), B2(2) | ax | B(3) | A(4) | V(4) | V(5)};
      case 3 * 4 + 2: return {rule, N(B(1)) | A(2) | B(2) | V(3), ax | B(3) | A(4) | V(4) | V(5)};
      case 3 * 4 + 3: return {rule, A(2) | B(2) | ax | B1(3) | V(3) | V(4), B2(3) | A(4) | N(A(5)) | V(5)};

      case 4 * 4 + 1: return {rule, N(A(2)) | N(B(2)) | A(3) | B1(3) | V(4), B2(3) | ax | A(5) | V(5) | V(6)};
      case 4 * 4 + 2: return {rule, N(B(2)) | A(3) | B(3) | V(4), ax | A(5) | V(5) | V(6)};
      case 4 * 4 + 3: return {rule, A(3) | B(3) | ax | V(4) | V(5), A(5) | N(A(6)) | V(6)};

      case 5 * 4 + 1: return {rule, N(A(3)) | N(B(3)) | A(4) | V(5), ax | A(6) | V(6) | V(7)};
      case 5 * 4 + 2: return {rule, N(B(3)) | A(4) | V(5), ax | A(6) | V(6) | V(7)};
      default: return {rule, A(4) | ax | V(5) | V(6), A(6) | N(A(7)) | V(7)};
    }
  }

  Pair in_b(int j, int k) const {
    const std::string rule = label("case 3", "j", j, k);
    switch (j * 4 + k) {
      case 1 * 4 + 1:
        return {rule, A(0) | A(1) | minus_x(B1(1)) | V(1) | V(2), B2(1) | A(2) | B(2) | N(A(3)) | V(3) | V(4)};
      case 1 * 4 + 2:
        return {rule, N(A(0)) | A(1) | B1(1) | V(1) | V(2), minus_x(B2(1)) | A(2) | B(2) | A(3) | V(3) | V(4)};
      case 2 * 4 + 1:
        return {rule, A(1) | B(1) | A(2) | minus_x(B1(2)) | V(2) | V(3), B2(2) | A(3) | B(3) | N(A(4)) | V(4) | V(5)};
      case 2 * 4 + 2:
        return {rule, N(A(1)) | B(1) | A(2) | B1(2) | V(2) | V(3), minus_x(B2(2)) | A(3) | B(3) | A(4) | V(4) | V(5)};
      case 3 * 4 + 1:
        return {rule, A(2) | B(2) | A(3) | minus_x(B1(3)) | V(3) | V(4), B2(3) | A(4) | N(A(5)) | V(5) | V(6)};
      default:
        return {rule, N(A(2)) | B(2) | A(3) | B1(3) | V(3) | V(4), minus_x(B2(3)) | A(4) | A(5) | V(5) | V(6)};
    }
  }

  Pair on_cycle(int i) const {
    const std::string rule = label("case 4", "i", i, 0);
    switch (i) {
      case 1: return {rule, A(-1) | A(0) | V(0), A(1) | B(1) | V(2)};
      case 2: return {rule, A(0) | A(1) | V(1), B(1) | A(2) | B(2) | V(3)};
      case 3: return {rule, A(1) | B(1) | A(2) | V(2), B(2) | A(3) | B(3) | V(4)};
      case 4: return {rule, B(1) | A(2) | B(2) | V(3), A(3) | B(3) | A(4) | V(5)};
      case 5: return {rule, B(2) | A(3) | B(3) | V(4), A(4) | A(5) | V(6)};
      case 6: return {rule, B(3) | A(4) | V(5), A(5) | A(6) | V(7)};
      default: return {rule, A(i - 2) | A(i - 1) | V(i - 1), A(i) | V(i + 1)};
    }
  }

  LemmaCover finish(Pair pair) const {
    LemmaCover out;
    out.vertex = x_;
    out.rule = std::move(pair.rule);
    // The construction may name x itself through an unsubtracted B^1/B^2
    // when x lies in both; the cover is of the open neighbourhood.
    out.cliques = CliquePair{pair.first.without(x_), pair.second.without(x_)};
    std::ostringstream problem;
    for (const VertexSet& k : {out.cliques.first, out.cliques.second}) {
      if (!k.subset_of(nx_)) problem << "set " << k.to_string() << " contains non-neighbours " << (k - nx_).to_string() << "; ";
      if (auto e = missing_edge(g_, k, k)) problem << "set " << k.to_string() << " is not a clique (" << e->first << "," << e->second << "); ";
    }
    const VertexSet uncovered = nx_ - out.cliques.first - out.cliques.second;
    if (!uncovered.empty()) problem << "neighbours " << uncovered.to_string() << " uncovered; ";
    out.problem = problem.str();
    out.valid = out.problem.empty() && validate_neighborhood_cover(g_, x_, out.cliques);
    return out;
  }

  const Graph& g_;
  const RefinedPartition& r_;
  const CyclePartition& p_;
  Vertex x_;
  VertexSet nx_;
};

}  // namespace

LemmaCover lemma_cover(const Graph& g, const RefinedPartition& r, Vertex x) {
  if (x < 0 || x >= g.order()) throw GraphError("lemma_cover: vertex " + std::to_string(x) + " out of range");
  return CoverBuilder(g, r, x).build();
}

std::string to_string(LemmaHypothesis h) {
  switch (h) {
    case LemmaHypothesis::alpha_at_least_3: return "alpha_at_least_3";
    case LemmaHypothesis::hole_free: return "hole_free";
    case LemmaHypothesis::max_degree: return "max_degree";
    case LemmaHypothesis::long_cycle: return "long_cycle";
  }
  return "unknown";
}

std::string to_string(LemmaOutcome::Kind kind) {
  switch (kind) {
    case LemmaOutcome::Kind::cover: return "cover";
    case LemmaOutcome::Kind::hypothesis_failure: return "hypothesis_failure";
    case LemmaOutcome::Kind::contradiction: return "contradiction";
  }
  return "unknown";
}

LemmaOutcome lemma_pipeline(const Graph& g) {
  LemmaOutcome out;
  const int n = g.order();
  const int alpha = independence_number(g).size();
  out.alpha = alpha;

  auto hypothesis_failure = [&](LemmaHypothesis h, std::string detail) {
    out.kind = LemmaOutcome::Kind::hypothesis_failure;
    out.failure = HypothesisFailure{h, std::move(detail), std::nullopt, -1};
    return out;
  };
  auto contradiction = [&](std::string stage, std::string detail) {
    out.kind = LemmaOutcome::Kind::contradiction;
    out.contradiction = LemmaContradiction{std::move(stage), std::move(detail), -1, std::nullopt, {}};
  };

  if (alpha < 3) return hypothesis_failure(LemmaHypothesis::alpha_at_least_3, "alpha = " + std::to_string(alpha));

  if (auto holes = hole_free_in_range(g, 4, 2 * alpha - 1); !holes.ok()) {
    const int len = holes.violation->length();
    hypothesis_failure(LemmaHypothesis::hole_free,
                       "induced C_" + std::to_string(len) + " with forbidden range [4," + std::to_string(2 * alpha - 1) + "]");
    out.failure->hole = std::move(holes.violation);
    return out;
  }

  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > n - 2) {
      hypothesis_failure(LemmaHypothesis::max_degree, "vertex " + std::to_string(v) + " has degree n-1");
      out.failure->vertex = v;
      return out;
    }
  }

  auto cycle = least_induced_cycle(g, 2 * alpha + 1);
  if (!cycle) {
    return hypothesis_failure(LemmaHypothesis::long_cycle, "no induced C_" + std::to_string(2 * alpha + 1));
  }

  PartitionResult built = build_partition(g, *cycle, alpha);
  if (!built.ok()) {
    contradiction("classification", "vertex " + std::to_string(built.violating_vertex) + " has trace {" +
                                        join(built.trace) + "}");
    out.contradiction->vertex = built.violating_vertex;
    return out;
  }

  ClaimReport claims = verify_structural_claims(g, *built.partition);
  if (!claims.all_hold()) {
    contradiction("claims", "claims {" + join(claims.failing()) + "} fail");
    for (const auto& c : claims.claims) {
      if (!c.holds) out.contradiction->claims.push_back(c);
    }
    return out;
  }

  auto normalized = normalize_rotation(*built.partition);
  if (!normalized) {
    contradiction("normalization", "no rotation confines B to three consecutive indices");
    return out;
  }
  out.normalized = normalized;

  RefineResult refined = refine(g, normalized->partition);
  if (!refined.ok()) {
    contradiction("refinement", "refined partition violates its invariants");
    out.contradiction->claims = refined.violations;
    return out;
  }

  TwoCliqueCover cover;
  cover.per_vertex.resize(n);
  out.rules.resize(n);
  for (Vertex x = 0; x < n; ++x) {
    LemmaCover lc = lemma_cover(g, refined.refined, x);
    if (!lc.valid) {
      contradiction("cover", lc.rule + ": " + lc.problem);
      out.contradiction->vertex = x;
      out.contradiction->cover = std::move(lc);
      return out;
    }
    cover.per_vertex[x] = lc.cliques;
    out.rules[x] = std::move(lc.rule);
  }
  if (!validate_two_clique_cover(g, cover)) {
    contradiction("cover", "assembled cover fails independent validation");
    return out;
  }

  out.agrees_with_recognizer = is_quasi_line(g).ok();
  if (!out.agrees_with_recognizer) {
    contradiction("recognizer", "generic recognizer rejects a graph the construction covered");
    return out;
  }
  out.kind = LemmaOutcome::Kind::cover;
  out.cover = std::move(cover);
  return out;
}

}  // namespace holefree
