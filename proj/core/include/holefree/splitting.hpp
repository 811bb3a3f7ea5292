#pragma once

// (s,t)-splittability with exact certificates, the hole-restricted theorem's
// hypothesis gate and verdict, the universal-vertex reduction, double
// criticality, and the small-clique-drop search for claw-free graphs.

#include <optional>
#include <string>
#include <vector>

#include "holefree/graph.hpp"
#include "holefree/holes.hpp"
#include "holefree/invariants.hpp"

namespace holefree {

struct SplitLimits {
  int max_split_order = 16;
  int max_clique_drop_order = 12;
};

/// A partition (S, T) of V(G) with optimal colourings of G[S] and G[T].
/// Colourings are indexed by position in the ascending member lists of S / T.
struct SplitCertificate {
  int s = 0;
  int t = 0;
  VertexSet S;
  VertexSet T;
  Coloring s_coloring;
  Coloring t_coloring;
};

/// Recomputes everything exactly: partition, proper colourings, and
/// chi(G[S]) >= s, chi(G[T]) >= t by exhaustive colourability checks.
bool validate_split_certificate(const Graph& g, const SplitCertificate& cert);

/// Exact search over bipartitions with sound pruning: a branch is cut only
/// when the best completion of one side is proven to fall short of its
/// target. Throws GraphError when s or t is below 2 or n exceeds the guard.
std::optional<SplitCertificate> is_splittable(const Graph& g, int s, int t, const SplitLimits& limits = {});

/// Builds a certificate (with colourings) for a known partition.
SplitCertificate make_split_certificate(const Graph& g, int s, int t, VertexSet S);

struct MainHypotheses {
  int alpha = 0;
  int omega = 0;
  int chi = 0;
  bool alpha_ok = false;
  bool omega_below_chi = false;
  bool chi_ok = false;
  HoleRangeResult holes;

  bool all() const { return alpha_ok && omega_below_chi && chi_ok && holes.ok(); }
};

/// alpha >= 3, omega < chi, chi >= 3, and no hole of length 4..2*alpha-1.
MainHypotheses check_main_hypotheses(const Graph& g);

struct SplitOutcome {
  int s = 0;
  int t = 0;
  std::optional<SplitCertificate> certificate;
  /// Exhaustive search found no split although the hypotheses hold.
  bool counterexample = false;
};

struct TheoremVerdict {
  MainHypotheses hypotheses;
  /// One entry per (s,t) with s,t >= 2 and s+t-1 = chi, ordered by s.
  std::vector<SplitOutcome> outcomes;

  bool flagged() const;
};

TheoremVerdict verify_main_theorem(const Graph& g, const SplitLimits& limits = {});

struct Reduction {
  Graph reduced;
  int s = 0;
  int t = 0;
  /// Removed universal vertices in original labels, in removal order.
  std::vector<Vertex> removed;
  /// Reduced vertex -> original vertex.
  std::vector<Vertex> to_original;
};

/// Removes the lowest-index universal vertex while t > 2, lowering t each time.
Reduction strip_universal_vertices(const Graph& g, int s, int t);

/// Maps a certificate of the reduced instance back, adding removed vertices to T.
SplitCertificate lift_certificate(const Graph& g, const Reduction& reduction, const SplitCertificate& reduced_cert);

struct DoubleCriticalResult {
  bool double_critical = true;
  std::optional<Edge> violating_edge;
};

/// Throws GraphError on a disconnected or empty graph.
DoubleCriticalResult is_double_critical(const Graph& g);

/// Smallest clique K (sizes 1..5, lexicographic within a size) with
/// chi(G - K) > chi(G) - |K|. Throws GraphError if g has a claw, if
/// chi <= omega, or if n exceeds the guard.
std::optional<CliqueWitness> small_clique_drop(const Graph& g, const SplitLimits& limits = {});

}  // namespace holefree
