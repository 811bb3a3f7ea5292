#pragma once

// Checks the odd-cycle partition argument instance by instance.
//
// Given an induced cycle C = v_0 ... v_{L-1} with L = 2*alpha + 1, every
// vertex off C is classified by its trace on C: complete to C (J), exactly
// v_i, v_{i+1}, v_{i+2} (A_i), or exactly v_i .. v_{i+3} (B_i). Indices are
// taken mod L throughout. After rotating C so that only B_1, B_2, B_3 can be
// non-empty, each A_i is split by its neighbours in A_{i-2} / A_{i+2}, each
// B_j by completeness to A_{j-1} / A_{j+2}, and every vertex receives an
// explicit pair of cliques covering its neighbourhood. Every constructed set
// is re-validated against the graph; nothing is trusted from construction.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "holefree/graph.hpp"
#include "holefree/holes.hpp"
#include "holefree/quasiline.hpp"

namespace holefree {

struct CyclePartition {
  HoleCertificate cycle;
  int alpha = 0;
  VertexSet J;
  std::vector<VertexSet> A;
  std::vector<VertexSet> B;

  int length() const { return cycle.length(); }
  int wrap(int i) const {
    const int l = length();
    return ((i % l) + l) % l;
  }
  Vertex v(int i) const { return cycle.vertices[wrap(i)]; }
  VertexSet a(int i) const { return A[wrap(i)]; }
  VertexSet b(int i) const { return B[wrap(i)]; }
  VertexSet cycle_set() const { return cycle.members(); }

  bool operator==(const CyclePartition&) const = default;
};

enum class TraceClass { J, A, B, violation };

struct Classification {
  TraceClass kind = TraceClass::violation;
  int index = -1;
  /// Cycle positions adjacent to the vertex.
  std::vector<int> trace;
};

/// Throws GraphError if w lies on the cycle or is out of range.
Classification classify_vertex(const Graph& g, const HoleCertificate& cycle, Vertex w);

struct PartitionResult {
  std::optional<CyclePartition> partition;
  /// First vertex (by index) whose trace fits no class.
  Vertex violating_vertex = -1;
  std::vector<int> trace;

  bool ok() const { return partition.has_value(); }
};

/// Classifies every off-cycle vertex. `alpha` is recorded as given; it must
/// satisfy cycle length == 2*alpha + 1.
PartitionResult build_partition(const Graph& g, const HoleCertificate& cycle, int alpha);

/// Structural claims checked on a partition, numbered 1-11:
///  1 every off-cycle trace is all of C, 3 or 4 consecutive vertices
///  2 J is empty
///  3 A_i, B_i cliques; A_i complete to A_{i-1} and A_{i+1}
///  4 A_i anticomplete to A_j for j outside i-2..i+2
///  5 B_i complete to B_{i-1}, A_i, A_{i+1}, B_{i+1}; anticomplete to B_j outside i-1..i+1
///  6 B_i non-empty forces B_j empty outside i-2..i+2
///  7 B_i anticomplete to A_j outside i-1..i+2
///  8 each vertex of A_i is anticomplete to A_{i+2} or to A_{i-2}
///  9 each vertex of B_i is complete to A_{i-1} or to A_{i+2}
/// 10 some rotation leaves only B_i, B_{i+1}, B_{i+2} possibly non-empty
/// 11 after that rotation, B_j anticomplete to A^1_{j-1} and A^3_{j+2}
struct ClaimStatus {
  int claim = 0;
  bool holds = true;
  /// Vertices exhibiting the failure (meaning depends on the claim).
  std::vector<Vertex> witness;
  std::string detail;
};

inline constexpr int kClaimCount = 11;

struct ClaimReport {
  std::array<ClaimStatus, kClaimCount> claims;

  const ClaimStatus& claim(int number) const { return claims.at(number - 1); }
  bool all_hold() const;
  std::vector<int> failing() const;
};

ClaimReport verify_structural_claims(const Graph& g, const CyclePartition& p);

/// Re-checks a failed claim's witness against the graph and partition.
bool witness_confirms(const Graph& g, const CyclePartition& p, const ClaimStatus& status);

struct NormalizedPartition {
  CyclePartition partition;
  int rotation = 0;
  bool reflected = false;
};

/// Re-indexes the cycle (rotation, then rotation composed with reflection)
/// so that B_j is empty for every j outside {1, 2, 3}. The new v_k is the old
/// v_{k+r}, or v_{r-k} when reflected.
std::optional<NormalizedPartition> normalize_rotation(const CyclePartition& p);

/// A partition re-indexed by an explicit symmetry; exposed for testing.
CyclePartition reindex(const CyclePartition& p, int rotation, bool reflected);

struct RefinedPartition {
  CyclePartition base;
  /// A1[i]: has a neighbour in A_{i-2}; A3[i]: in A_{i+2}; A2[i]: the rest.
  std::vector<VertexSet> A1, A2, A3;
  /// Only indices 1..3 are meaningful. B1[j]: complete to A_{j-1};
  /// B2[j]: complete to A_{j+2}. They may overlap.
  std::array<VertexSet, 4> B1{}, B2{};

  VertexSet a_part(int i, int k) const;
};

struct RefineResult {
  RefinedPartition refined;
  /// Claims 8, 9 and 11 found violated.
  std::vector<ClaimStatus> violations;

  bool ok() const { return violations.empty(); }
};

/// Requires a normalized partition (B_j empty outside 1..3); throws GraphError
/// otherwise.
RefineResult refine(const Graph& g, const CyclePartition& normalized);

struct LemmaCover {
  Vertex vertex = -1;
  /// Which case of the construction produced the pair, e.g. "case 2: i=1, k=3".
  std::string rule;
  CliquePair cliques;
  bool valid = false;
  /// Why validation failed, when it did.
  std::string problem;
};

/// The prescribed clique pair for x, validated against N(x).
LemmaCover lemma_cover(const Graph& g, const RefinedPartition& r, Vertex x);

enum class LemmaHypothesis { alpha_at_least_3, hole_free, max_degree, long_cycle };

std::string to_string(LemmaHypothesis h);

struct HypothesisFailure {
  LemmaHypothesis hypothesis = LemmaHypothesis::alpha_at_least_3;
  std::string detail;
  std::optional<HoleCertificate> hole;
  /// Universal vertex when the degree bound fails.
  Vertex vertex = -1;
};

struct LemmaContradiction {
  std::string stage;
  std::string detail;
  Vertex vertex = -1;
  std::optional<LemmaCover> cover;
  std::vector<ClaimStatus> claims;
};

struct LemmaOutcome {
  enum class Kind { cover, hypothesis_failure, contradiction };

  Kind kind = Kind::hypothesis_failure;
  int alpha = 0;
  std::optional<TwoCliqueCover> cover;
  std::vector<std::string> rules;
  std::optional<NormalizedPartition> normalized;
  std::optional<HypothesisFailure> failure;
  std::optional<LemmaContradiction> contradiction;
  /// The generic recognizer's verdict matched (only meaningful for covers).
  bool agrees_with_recognizer = false;
};

std::string to_string(LemmaOutcome::Kind kind);

/// Hypotheses are checked in order (alpha >= 3, no hole of length
/// 4..2*alpha-1, max degree <= n-2, an induced (2*alpha+1)-cycle) and only the
/// first failure is reported. The least such cycle anchors the partition.
LemmaOutcome lemma_pipeline(const Graph& g);

}  // namespace holefree
