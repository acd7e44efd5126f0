#pragma once

#include <array>
#include <climits>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kdec/face.hpp"

namespace kdec {

/// dimension() of the void complex. Deliberately not -1, which belongs to
/// the empty complex {∅}.
inline constexpr int kVoidDimension = INT_MIN;

enum class ComplexKind {
  void_complex,   // no faces at all
  empty_complex,  // only the empty face
  proper,         // at least one nonempty facet
};

/// A finite simplicial complex, stored by its facets plus an explicit
/// ground set. Ground elements that are not vertices are loops.
///
/// Facets are kept as a lexicographically sorted antichain. Values are
/// immutable once built; every operation returns a new complex.
class Complex {
 public:
  /// The void complex (no faces).
  Complex() = default;

  static Complex void_complex(Face ground = {});
  static Complex empty_complex(Face ground = {});

  /// Facets must form an antichain of nonempty faces (duplicates are
  /// merged). Throws not-an-antichain on containment and not-a-face if the
  /// ground set misses a vertex. An empty list yields the void complex.
  /// Without an explicit ground set the vertex set is used.
  static Complex from_facets(std::vector<Face> facets);
  static Complex from_facets(std::vector<Face> facets, Face ground);

  /// The complex generated by arbitrary faces: keeps the maximal ones. A
  /// list holding only ∅ gives the empty complex, an empty list the void one.
  static Complex generated_by(std::vector<Face> faces, Face ground);

  ComplexKind kind() const { return kind_; }
  bool is_void() const { return kind_ == ComplexKind::void_complex; }
  bool is_empty() const { return kind_ == ComplexKind::empty_complex; }
  bool is_proper() const { return kind_ == ComplexKind::proper; }

  std::span<const Face> facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  Face ground_set() const { return ground_; }
  Face vertex_set() const { return vertices_; }
  Face loops() const { return ground_ - vertices_; }

  /// True iff F is a face, i.e. some facet contains it. ∅ is a face of
  /// every non-void complex.
  bool has_face(Face f) const;
  bool has_facet(Face f) const;

  /// Same complex on a different ground set (must contain the vertices).
  Complex with_ground(Face ground) const;

  bool operator==(const Complex&) const = default;

 private:
  friend Complex add_facet(const Complex& c, Face f);

  ComplexKind kind_ = ComplexKind::void_complex;
  Face ground_;
  Face vertices_;
  std::vector<Face> facets_;
};

/// An undirected simple graph on a vertex set; isolated vertices allowed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Face vertices) : vertices_(vertices) {}

  /// Throws not-a-face when an endpoint lies outside `vertices`, or when an
  /// edge is a loop.
  static Graph from_edges(Face vertices, std::span<const Face> edges);

  Face vertices() const { return vertices_; }
  Face neighbors(Vertex v) const { return Face(adjacency_[static_cast<std::size_t>(v)]); }
  bool has_edge(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  bool has_edge(Face edge) const { return has_edge(edge.min(), edge.max()); }
  std::size_t edge_count() const;
  /// Edges as 2-element faces, lexicographically sorted.
  std::vector<Face> edges() const;

  void add_vertex(Vertex v) { vertices_ = vertices_.with(v); }
  void add_edge(Vertex u, Vertex v);
  void add_edge(Face edge) { add_edge(edge.min(), edge.max()); }

  Graph induced(Face subset) const;
  Graph without_vertex(Vertex v) const { return induced(vertices_.without(v)); }

  bool operator==(const Graph&) const = default;

 private:
  Face vertices_;
  std::array<std::uint64_t, kMaxVertices> adjacency_{};
};

/// Largest facet cardinality minus one; -1 for {∅}, kVoidDimension for void.
int dimension(const Complex& c);
/// Void and empty complexes count as pure.
bool is_pure(const Complex& c);

/// {G : G∩F=∅, G∪F ∈ C} on ground set V∖F. Throws not-a-face.
Complex link(const Complex& c, Face f);
/// Faces containing F, on ground set V. Throws not-a-face.
Complex star(const Complex& c, Face f);
/// Faces not containing F. Deleting a single vertex also drops it from the
/// ground set; larger faces leave the ground set alone.
Complex deletion(const Complex& c, Face f);
/// 1-skeleton as a graph on the vertex set. Throws dimension-too-low.
Graph skeleton(const Complex& c);

/// |F1 ∩ F2| = |F1| - 1. Throws size-mismatch.
bool facets_adjacent(Face a, Face b);

/// C + F. Adding an existing facet is a no-op. Throws dimension-mismatch.
Complex add_facet(const Complex& c, Face f);
/// C + D for facet-disjoint complexes of equal dimension. Throws overlap or
/// dimension-mismatch.
Complex complex_union(const Complex& c, const Complex& d);
/// C ∖ D: facets of C not in D. Throws dimension-mismatch.
Complex complex_minus(const Complex& c, const Complex& d);
/// ⟨F ∪ H : F facet⟩. Throws not-disjoint.
Complex pad(const Complex& c, Face h);

}  // namespace kdec
