#pragma once

// Simple undirected graphs on at most 64 vertices, stored as one adjacency
// bitset word per vertex, plus the set-level predicates every other module
// builds on.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace holefree {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A subset of {0..63}. Iteration visits members in increasing order.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members);

  static VertexSet from(std::span<const Vertex> members);
  /// {0, ..., n-1}.
  static constexpr VertexSet prefix(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  /// Lowest member; -1 when empty.
  constexpr Vertex lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  constexpr Vertex highest() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;
  /// Orders sets by their sorted member lists, lexicographically.
  bool lex_less(VertexSet other) const;

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple graph over vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on an out-of-range endpoint, a self-loop, or n > 64.
  /// Duplicate pairs collapse to one edge.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must be symmetric, irreflexive and confined to {0..n-1}.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  std::size_t edge_count() const;
  VertexSet vertices() const { return VertexSet::prefix(n_); }

  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
  VertexSet closed_neighbors(Vertex v) const { return VertexSet(rows_[v]).with(v); }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }

  std::vector<Edge> edges() const;
  std::span<const std::uint64_t> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  bool operator==(const Graph& other) const;

 private:
  static void check_order(int n);

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

Graph complement(const Graph& g);

/// The subgraph on `members`, relabelled 0..|members|-1 in increasing order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  VertexSet lift(VertexSet local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet members);

/// Graph with the vertices of `removed` deleted; the remaining vertices keep
/// their relative order.
inline InducedSubgraph delete_vertices(const Graph& g, VertexSet removed) {
  return induced_subgraph(g, g.vertices() - removed);
}

/// Every pair across the (disjoint) sets is an edge. Throws on overlap or
/// out-of-range members. Vacuously true when either side is empty.
bool is_complete_between(const Graph& g, VertexSet a, VertexSet b);
/// No pair across the (disjoint) sets is an edge.
bool is_anticomplete_between(const Graph& g, VertexSet a, VertexSet b);

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
std::size_t edges_within(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);

}  // namespace holefree
