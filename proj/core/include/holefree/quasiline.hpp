#pragma once

// Claw-free and quasi-line recognition with certificates.

#include <array>
#include <optional>
#include <vector>

#include "holefree/graph.hpp"

namespace holefree {

struct ClawWitness {
  Vertex center = -1;
  std::array<Vertex, 3> leaves{};
};

bool validate_claw(const Graph& g, const ClawWitness& w);

struct ClawCheck {
  std::optional<ClawWitness> witness;

  bool ok() const { return !witness.has_value(); }
};

/// Centres in increasing order, leaf triples in lexicographic order.
ClawCheck is_claw_free(const Graph& g);

/// Two cliques whose union is an open neighbourhood. They may overlap.
struct CliquePair {
  VertexSet first;
  VertexSet second;

  bool operator==(const CliquePair&) const = default;
};

bool validate_neighborhood_cover(const Graph& g, Vertex v, const CliquePair& cover);

/// Two-colours the complement of G[N(v)] breadth-first from the lowest
/// uncoloured vertex (which goes to `first`). Vertices adjacent to all other
/// neighbours land in `first`. Nothing when that complement has an odd cycle.
std::optional<CliquePair> neighborhood_cover(const Graph& g, Vertex v);

/// An odd cycle of the complement of G[N(v)], in cyclic order; empty when the
/// neighbourhood is coverable.
std::vector<Vertex> neighborhood_obstruction(const Graph& g, Vertex v);

struct TwoCliqueCover {
  std::vector<CliquePair> per_vertex;
};

bool validate_two_clique_cover(const Graph& g, const TwoCliqueCover& cover);

struct QuasiLineResult {
  std::optional<TwoCliqueCover> cover;
  Vertex failing_vertex = -1;
  std::vector<Vertex> obstruction;

  bool ok() const { return cover.has_value(); }
};

QuasiLineResult is_quasi_line(const Graph& g);

}  // namespace holefree
