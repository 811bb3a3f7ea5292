#pragma once

#include "holefree/graph.hpp"

namespace holefree {

Graph empty_graph(int n);
Graph complete_graph(int n);
/// v_i ~ v_{i+1 mod n}; n >= 3.
Graph cycle_graph(int n);
Graph path_graph(int n);
/// K_{1,leaves} with centre 0.
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
Graph petersen_graph();
/// Rim cycle 0..rim-1 and hub `rim` adjacent to all of it.
Graph wheel_graph(int rim);
Graph cube_graph();
/// K_n with the perfect matching {0,1}, {2,3}, ... removed; n even.
Graph complete_minus_matching(int n);

/// Every vertex of g joined to every vertex of h; h is relabelled after g.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Vertices are g.edges() in order; throws if g has more than 64 edges.
Graph line_graph(const Graph& g);

}  // namespace holefree
