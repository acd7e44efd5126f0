#include "kdec/graphs.hpp"

#include "kdec/error.hpp"

namespace kdec {

namespace {

// Ordered expansion: each clique is grown only by vertices above its current
// maximum, so every clique is produced once and in lexicographic order.
void grow(const Graph& g, Face clique, Face candidates, int remaining, std::vector<Face>& out) {
  if (remaining == 0) {
    out.push_back(clique);
    return;
  }
  if (candidates.size() < remaining) return;
  for (Vertex v : candidates) {
    const Face above = Face(candidates.bits() & ~((std::uint64_t{2} << v) - 1));
    grow(g, clique.with(v), above & g.neighbors(v), remaining - 1, out);
  }
}

bool has_clique(const Graph& g, Face candidates, int remaining) {
  if (remaining <= 0) return true;
  if (candidates.size() < remaining) return false;
  for (Vertex v : candidates) {
    const Face above = Face(candidates.bits() & ~((std::uint64_t{2} << v) - 1));
    if (has_clique(g, above & g.neighbors(v), remaining - 1)) return true;
  }
  return false;
}

}  // namespace

bool connected(const Graph& g) {
  const Face all = g.vertices();
  if (all.empty()) throw Error(Errc::empty_graph, "connectivity of a graph without vertices");
  Face reached = Face::single(all.min());
  Face frontier = reached;
  while (!frontier.empty()) {
    Face next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    frontier = next - reached;
    reached |= frontier;
  }
  return reached == all;
}

std::vector<Face> cliques(const Graph& g, int size) {
  std::vector<Face> out;
  if (size < 1) return out;
  grow(g, Face{}, g.vertices(), size, out);
  return out;
}

Complex full_d(const Graph& g, int d) {
  return Complex::generated_by(cliques(g, d + 1), g.vertices());
}

Graph cone(const Graph& g, Face h) {
  if (!g.vertices().disjoint(h)) {
    throw Error(Errc::not_disjoint, "cone vertices already in the graph");
  }
  Graph out = g;
  const Face all = g.vertices() | h;
  for (Vertex a : h) {
    out.add_vertex(a);
    for (Vertex b : all) {
      if (a != b) out.add_edge(a, b);
    }
  }
  return out;
}

bool is_fully_coned(const Complex& c, Face h) {
  const int d = dimension(c);
  if (d < 2 || !c.vertex_set().contains(h)) return false;
  const Graph g = skeleton(c);
  for (Vertex a : h) {
    if (g.neighbors(a) != g.vertices().without(a)) return false;
  }
  const std::vector<Face> top = cliques(g, d + 1);
  if (top.size() != c.facet_count()) return false;
  for (Face f : top) {
    if (!c.has_facet(f)) return false;
  }
  return true;
}

std::vector<Face> clique_completing_edges(const Graph& g, int d) {
  std::vector<Face> out;
  for (Vertex u : g.vertices()) {
    for (Vertex v : g.vertices()) {
      if (v <= u || g.has_edge(u, v)) continue;
      if (has_clique(g, g.neighbors(u) & g.neighbors(v), d - 1)) {
        out.push_back(Face::single(u).with(v));
      }
    }
  }
  return out;
}

}  // namespace kdec
