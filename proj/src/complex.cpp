#include "kdec/complex.hpp"

#include <algorithm>
#include <string>

#include "kdec/error.hpp"

namespace kdec {

namespace {

std::string describe(Face f) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : f) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void sort_unique(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end(), LexLess{});
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

// Keeps only inclusion-maximal faces. Input must be sorted and unique.
std::vector<Face> maximal_only(const std::vector<Face>& faces) {
  std::vector<Face> kept;
  kept.reserve(faces.size());
  for (Face f : faces) {
    const bool dominated = std::any_of(faces.begin(), faces.end(), [f](Face g) {
      return g != f && g.contains(f);
    });
    if (!dominated) kept.push_back(f);
  }
  return kept;
}

}  // namespace

Complex Complex::void_complex(Face ground) {
  Complex c;
  c.ground_ = ground;
  return c;
}

Complex Complex::empty_complex(Face ground) {
  Complex c;
  c.kind_ = ComplexKind::empty_complex;
  c.ground_ = ground;
  return c;
}

Complex Complex::from_facets(std::vector<Face> facets) {
  Face vertices;
  for (Face f : facets) vertices |= f;
  return from_facets(std::move(facets), vertices);
}

Complex Complex::from_facets(std::vector<Face> facets, Face ground) {
  sort_unique(facets);
  Complex c;
  c.ground_ = ground;
  if (facets.empty()) return c;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].empty()) throw Error(Errc::not_an_antichain, "empty facet next to others");
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && facets[j].contains(facets[i])) {
        throw Error(Errc::not_an_antichain,
                    describe(facets[i]) + " lies in " + describe(facets[j]));
      }
    }
    c.vertices_ |= facets[i];
  }
  if (!ground.contains(c.vertices_)) {
    throw Error(Errc::not_a_face, "facet vertices " + describe(c.vertices_ - ground) +
                                      " missing from ground set");
  }
  c.kind_ = ComplexKind::proper;
  c.facets_ = std::move(facets);
  return c;
}

Complex Complex::generated_by(std::vector<Face> faces, Face ground) {
  if (faces.empty()) return void_complex(ground);
  sort_unique(faces);
  if (faces.size() == 1 && faces.front().empty()) return empty_complex(ground);
  std::erase_if(faces, [](Face f) { return f.empty(); });
  Complex c;
  c.kind_ = ComplexKind::proper;
  c.ground_ = ground;
  c.facets_ = maximal_only(faces);
  for (Face f : c.facets_) c.vertices_ |= f;
  c.ground_ |= c.vertices_;
  return c;
}

bool Complex::has_face(Face f) const {
  if (is_void()) return false;
  if (f.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return g.contains(f); });
}

bool Complex::has_facet(Face f) const {
  return std::binary_search(facets_.begin(), facets_.end(), f, LexLess{});
}

Complex Complex::with_ground(Face ground) const {
  if (!ground.contains(vertices_)) {
    throw Error(Errc::not_a_face, "ground set must contain every vertex");
  }
  Complex c = *this;
  c.ground_ = ground;
  return c;
}

// ---------------------------------------------------------------------------

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw Error(Errc::not_a_face, "graph edge needs two distinct endpoints");
  vertices_ = vertices_.with(u).with(v);
  adjacency_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adjacency_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

Graph Graph::from_edges(Face vertices, std::span<const Face> edges) {
  Graph g(vertices);
  for (Face e : edges) {
    if (e.size() != 2 || !vertices.contains(e)) {
      throw Error(Errc::not_a_face, "edge " + describe(e) + " is not a pair of graph vertices");
    }
    g.add_edge(e);
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Vertex v : vertices_) twice += static_cast<std::size_t>(neighbors(v).size());
  return twice / 2;
}

std::vector<Face> Graph::edges() const {
  std::vector<Face> out;
  for (Vertex u : vertices_) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back(Face::single(u).with(v));
    }
  }
  return out;
}

Graph Graph::induced(Face subset) const {
  Graph g(vertices_ & subset);
  for (Vertex v : g.vertices_) {
    g.adjacency_[static_cast<std::size_t>(v)] = (neighbors(v) & subset).bits();
  }
  return g;
}

// ---------------------------------------------------------------------------

int dimension(const Complex& c) {
  switch (c.kind()) {
    case ComplexKind::void_complex: return kVoidDimension;
    case ComplexKind::empty_complex: return -1;
    case ComplexKind::proper: break;
  }
  int top = 0;
  for (Face f : c.facets()) top = std::max(top, f.size());
  return top - 1;
}

bool is_pure(const Complex& c) {
  const auto facets = c.facets();
  return std::all_of(facets.begin(), facets.end(),
                     [&](Face f) { return f.size() == facets.front().size(); });
}

Complex link(const Complex& c, Face f) {
  if (!c.has_face(f)) throw Error(Errc::not_a_face, describe(f));
  std::vector<Face> faces;
  for (Face g : c.facets()) {
    if (g.contains(f)) faces.push_back(g - f);
  }
  return Complex::generated_by(std::move(faces), c.ground_set() - f);
}

Complex star(const Complex& c, Face f) {
  if (!c.has_face(f)) throw Error(Errc::not_a_face, describe(f));
  std::vector<Face> faces;
  for (Face g : c.facets()) {
    if (g.contains(f)) faces.push_back(g);
  }
  return Complex::generated_by(std::move(faces), c.ground_set());
}

Complex deletion(const Complex& c, Face f) {
  const Face ground = f.size() == 1 ? c.ground_set() - f : c.ground_set();
  if (c.is_void()) return Complex::void_complex(ground);
  if (c.is_empty()) {
    return f.empty() ? Complex::void_complex(ground) : Complex::empty_complex(ground);
  }
  std::vector<Face> faces;
  for (Face g : c.facets()) {
    if (!g.contains(f)) {
      faces.push_back(g);
      continue;
    }
    for (Vertex v : f) faces.push_back(g.without(v));
  }
  return Complex::generated_by(std::move(faces), ground);
}

Graph skeleton(const Complex& c) {
  if (dimension(c) < 1) {
    throw Error(Errc::dimension_too_low, "skeleton needs dimension at least 1");
  }
  Graph g(c.vertex_set());
  for (Face f : c.facets()) {
    for (Vertex u : f) {
      for (Vertex v : f) {
        if (u < v) g.add_edge(u, v);
      }
    }
  }
  return g;
}

bool facets_adjacent(Face a, Face b) {
  if (a.size() != b.size()) {
    throw Error(Errc::size_mismatch, describe(a) + " vs " + describe(b));
  }
  return adjacent_faces(a, b);
}

Complex add_facet(const Complex& c, Face f) {
  if (f.empty()) throw Error(Errc::dimension_mismatch, "cannot add the empty face");
  if (c.is_proper() && f.size() != dimension(c) + 1) {
    throw Error(Errc::dimension_mismatch, describe(f) + " does not match dimension " +
                                              std::to_string(dimension(c)));
  }
  if (c.has_facet(f)) return c;
  if (c.is_proper() && is_pure(c)) {
    // equal cardinalities: no containment possible, just insert in order
    Complex out = c;
    out.ground_ |= f;
    out.vertices_ |= f;
    out.facets_.insert(std::upper_bound(out.facets_.begin(), out.facets_.end(), f, LexLess{}), f);
    return out;
  }
  std::vector<Face> faces(c.facets().begin(), c.facets().end());
  faces.push_back(f);
  return Complex::generated_by(std::move(faces), c.ground_set() | f);
}

Complex complex_union(const Complex& c, const Complex& d) {
  if (c.is_void()) return d.with_ground(d.ground_set() | c.ground_set());
  if (d.is_void()) return c.with_ground(c.ground_set() | d.ground_set());
  if (dimension(c) != dimension(d)) {
    throw Error(Errc::dimension_mismatch, "union of complexes of different dimension");
  }
  std::vector<Face> faces(c.facets().begin(), c.facets().end());
  for (Face f : d.facets()) {
    if (c.has_facet(f)) throw Error(Errc::overlap, "shared facet " + describe(f));
    faces.push_back(f);
  }
  return Complex::generated_by(std::move(faces), c.ground_set() | d.ground_set());
}

Complex complex_minus(const Complex& c, const Complex& d) {
  if (!c.is_void() && !d.is_void() && dimension(c) != dimension(d)) {
    throw Error(Errc::dimension_mismatch, "difference of complexes of different dimension");
  }
  std::vector<Face> faces;
  for (Face f : c.facets()) {
    if (!d.has_facet(f)) faces.push_back(f);
  }
  return Complex::generated_by(std::move(faces), c.ground_set());
}

Complex pad(const Complex& c, Face h) {
  if (!c.vertex_set().disjoint(h)) {
    throw Error(Errc::not_disjoint, describe(c.vertex_set() & h) + " already used");
  }
  if (c.is_void()) return Complex::void_complex(c.ground_set() | h);
  if (c.is_empty()) {
    if (h.empty()) return c;
    return Complex::from_facets({h}, c.ground_set() | h);
  }
  std::vector<Face> faces;
  faces.reserve(c.facet_count());
  for (Face f : c.facets()) faces.push_back(f | h);
  return Complex::from_facets(std::move(faces), c.ground_set() | h);
}

}  // namespace kdec
