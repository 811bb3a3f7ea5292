#pragma once

// Brute-force reference implementations. Everything here works straight
// from definitions over all vertex subsets and shares no search code with
// the library, so agreement is meaningful.

#include <cstdint>
#include <optional>
#include <vector>

#include "holefree/graph.hpp"

namespace oracle {

using holefree::Graph;
using holefree::Vertex;
using holefree::VertexSet;

/// Per-subset tables for one graph: omega and chi of every induced subgraph,
/// indexed by subset bitmask. Feasible up to roughly n = 12.
class SubsetTables {
 public:
  explicit SubsetTables(const Graph& g);

  int omega(std::uint64_t subset) const { return omega_[subset]; }
  int chi(std::uint64_t subset) const { return chi_[subset]; }
  bool independent(std::uint64_t subset) const { return independent_[subset]; }
  std::uint64_t full() const { return full_; }

 private:
  std::uint64_t full_;
  std::vector<std::uint8_t> omega_;
  std::vector<std::uint8_t> chi_;
  std::vector<bool> independent_;
};

int clique_number(const Graph& g);
int independence_number(const Graph& g);
int chromatic_number(const Graph& g);

/// Some induced cycle of exactly k vertices (k >= 3), found by checking
/// every k-subset for being connected and 2-regular.
bool has_induced_cycle(const Graph& g, int k);
int count_induced_cycles(const Graph& g, int k);

/// chi == omega on every induced subgraph.
bool perfect(const Graph& g);

bool claw_free(const Graph& g);

/// N(v) splits into two cliques, found by trying every 2-partition.
bool neighborhood_two_cliques(const Graph& g, Vertex v);
bool quasi_line(const Graph& g);

/// Every bipartition (S, T) of V, no pruning.
std::optional<std::uint64_t> split(const Graph& g, int s, int t);
std::optional<std::uint64_t> split(const Graph& g, const SubsetTables& tables, int s, int t);

/// Connected, and chi drops by exactly 2 after deleting both ends of any edge.
bool double_critical(const Graph& g);

/// Canonical code as the largest upper-triangle code over all n!
/// relabellings, pairs in graph6 column order. Only for small n.
std::uint64_t canonical_code(const Graph& g);

}  // namespace oracle
