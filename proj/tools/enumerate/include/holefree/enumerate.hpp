#pragma once

// Isomorphism-free enumeration of small graphs. Each isomorphism class is
// represented by its canonical form: the relabelling, among those reachable
// by equitable refinement and individualisation, whose upper-triangle
// adjacency code is largest.

#include <cstdint>
#include <vector>

#include "holefree/graph.hpp"

namespace holefree {

inline constexpr int kMaxCanonicalOrder = 11;

struct CanonicalForm {
  /// Bit index(i, j) for i < j, pairs in graph6 column order.
  std::uint64_t code = 0;
  /// labelling[k] is the original vertex placed at canonical position k.
  std::vector<Vertex> labelling;
};

/// Throws GraphError when n exceeds kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

/// Rebuilds the graph with the given canonical code.
Graph graph_from_code(int n, std::uint64_t code);

/// One graph per isomorphism class on exactly n vertices, in increasing code
/// order. Built by adding a vertex to every class on n-1 vertices in every
/// possible way and keeping distinct canonical codes.
std::vector<Graph> nonisomorphic_graphs(int n);

/// nonisomorphic_graphs for every order 0..max_n, computed incrementally.
std::vector<std::vector<Graph>> nonisomorphic_graphs_up_to(int max_n);

}  // namespace holefree
