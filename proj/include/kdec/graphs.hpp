#pragma once

#include <vector>

#include "kdec/complex.hpp"

namespace kdec {

/// Isolated vertices count as components. Throws empty-graph.
bool connected(const Graph& g);

/// Vertex sets of all `size`-cliques, lexicographically sorted.
std::vector<Face> cliques(const Graph& g, int size);

/// full^d(G): the pure d-dimensional complex generated by all (d+1)-cliques,
/// on ground set V(G). Void when G has no (d+1)-clique.
Complex full_d(const Graph& g, int d);

/// G^H: adds H and joins every vertex of H to every other vertex of V ∪ H.
/// Throws not-disjoint.
Graph cone(const Graph& g, Face h);

/// Every h ∈ H is adjacent to all other vertices of skel(C), and every
/// (d+1)-clique of skel(C) is a facet. False when dim(C) < 2 or H ⊄ V(C).
bool is_fully_coned(const Complex& c, Face h);

/// Non-edges uv such that G + uv has a (d+1)-clique through uv, i.e. the
/// common neighbourhood of u and v holds a (d-1)-clique. Sorted.
std::vector<Face> clique_completing_edges(const Graph& g, int d);

}  // namespace kdec
