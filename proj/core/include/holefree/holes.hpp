#pragma once

// Induced cycles (holes) and antiholes of given lengths, forbidden-hole range
// checks, and two perfection tests: one via odd holes/antiholes, one straight
// from the definition (chi == omega on every induced subgraph).

#include <functional>
#include <optional>
#include <vector>

#include "holefree/graph.hpp"

namespace holefree {

enum class HoleKind { hole, antihole };

/// Vertices in cyclic order. Certificates produced here are anchored at their
/// lowest vertex with vertices[1] < vertices.back().
struct HoleCertificate {
  std::vector<Vertex> vertices;
  HoleKind kind = HoleKind::hole;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet members() const { return VertexSet::from(vertices); }
  bool operator==(const HoleCertificate&) const = default;
};

/// Checks distinctness, cyclic adjacency and the absence of chords (in g for
/// holes, in the complement for antiholes). Accepts length 3 for plain
/// induced cycles; callers wanting hole semantics check length() >= 4.
bool validate_hole(const Graph& g, const HoleCertificate& cert);

/// Some induced cycle of length k, or nothing. Throws on k < 3.
std::optional<HoleCertificate> find_induced_cycle(const Graph& g, int k);

/// The induced k-cycle whose sorted vertex list is lexicographically least.
std::optional<HoleCertificate> least_induced_cycle(const Graph& g, int k);

/// Calls `visit` once per induced k-cycle (each in anchored orientation);
/// stops early when `visit` returns false.
void for_each_induced_cycle(const Graph& g, int k, const std::function<bool(const std::vector<Vertex>&)>& visit);

enum class LengthFilter { all, odd_only };

struct HoleRangeResult {
  std::optional<HoleCertificate> violation;

  bool ok() const { return !violation.has_value(); }
};

/// Searches lengths lo..hi (shortest first) for a hole. Throws unless
/// 4 <= lo <= hi. An empty search range (hi beyond n) is simply clean.
HoleRangeResult hole_free_in_range(const Graph& g, int lo, int hi, LengthFilter filter = LengthFilter::all);

/// Odd holes of length 5, 7, ... up to n.
std::optional<HoleCertificate> has_odd_hole(const Graph& g);
/// Odd antiholes of length 5, 7, ...; the certificate is a hole of the complement.
std::optional<HoleCertificate> has_odd_antihole(const Graph& g);

struct PerfectionResult {
  bool perfect = true;
  std::optional<HoleCertificate> obstruction;
};

PerfectionResult is_perfect(const Graph& g);

inline constexpr int kMaxDefinitionalPerfectOrder = 12;

/// Exponential oracle; throws GraphError when n > 12.
bool is_perfect_by_definition(const Graph& g);

struct CorollaryReport {
  int alpha = 0;
  bool in_class = false;
  /// Forbidden hole found, when not in the class.
  std::optional<HoleCertificate> excluded_by;
  bool perfect = false;
  std::optional<HoleCertificate> obstruction;
  /// False only if a class member turned out imperfect.
  bool consistent = true;
};

/// Class: no C4 and no odd hole of length 5..2*alpha+1.
CorollaryReport corollary_class_check(const Graph& g);

}  // namespace holefree
