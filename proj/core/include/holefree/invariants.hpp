#pragma once

// Exact clique number, independence number and chromatic number.
//
// Clique search is a bitset branch-and-bound with greedy colour-class bounds;
// colouring is DSATUR-ordered backtracking where a vertex may only open the
// next unused colour. Empty graphs have omega = alpha = chi = 0.

#include <optional>
#include <vector>

#include "holefree/graph.hpp"

namespace holefree {

/// color[v] in 0..num_colors-1 for every vertex.
struct Coloring {
  std::vector<int> color;
  int num_colors = 0;

  bool operator==(const Coloring&) const = default;
};

/// Proper, total, and colour indices exactly 0..num_colors-1 all in use.
bool is_proper_coloring(const Graph& g, const Coloring& c);

struct CliqueWitness {
  VertexSet vertices;

  int size() const { return vertices.size(); }
};

CliqueWitness max_clique(const Graph& g);
/// Maximum clique of G[within], reported in g's labels.
CliqueWitness max_clique_within(const Graph& g, VertexSet within);
/// A maximum independent set (witness lives in g, not its complement).
CliqueWitness independence_number(const Graph& g);

std::optional<Coloring> k_colorable(const Graph& g, int k);

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

ChromaticResult chromatic_number(const Graph& g);
int chromatic_number_within(const Graph& g, VertexSet within);

/// DSATUR greedy colouring; an upper bound for chi.
Coloring greedy_coloring(const Graph& g);
/// Number of colours a sequential greedy pass over `within` uses.
int greedy_color_count(const Graph& g, VertexSet within);

int max_degree(const Graph& g);

}  // namespace holefree
