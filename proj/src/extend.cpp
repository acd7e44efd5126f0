#include "kdec/extend.hpp"

#include <algorithm>
#include <string>

#include "kdec/error.hpp"
#include "kdec/graphs.hpp"

namespace kdec {

namespace {

struct PendingStep {
  Face facet;
  std::vector<Face> shedding_candidates;  // innermost first
};

// Where emitted steps land: local faces are padded with `pad` (the union of
// the enclosing link faces), and `outer` lists the enclosing shedding faces
// as global candidates for the step annotation.
struct Frame {
  Face pad;
  std::vector<Face> outer;

  Frame enter_link(Face f) const {
    Frame inner{pad | f, {f | pad}};
    inner.outer.insert(inner.outer.end(), outer.begin(), outer.end());
    return inner;
  }
};

Face first_vertices(Face pool, int count) {
  Face out;
  for (Vertex v : pool) {
    if (out.size() == count) break;
    out = out.with(v);
  }
  return out;
}

Face common_neighbourhood(const Graph& g, Face f) {
  Face common = g.vertices() - f;
  for (Vertex v : f) common = common & g.neighbors(v);
  return common;
}

// Steps taking ⟨F⟩ to the (|F|-1)-skeleton of the simplex on `universe`.
// New vertices are coned on in increasing order; the link of each new vertex
// is grown by the same procedure one dimension down, and the vertex itself is
// the shedding face of its steps.
std::vector<std::pair<Face, Face>> simplex_steps(Face facet, Face universe) {
  std::vector<std::pair<Face, Face>> out;
  const int d = facet.size() - 1;
  Face built = facet;
  for (Vertex u : universe - facet) {
    const Face apex = Face::single(u);
    if (d == 0) {
      out.emplace_back(apex, apex);
      continue;
    }
    const Face seed = first_vertices(built, d);
    out.emplace_back(seed | apex, apex);
    for (const auto& [inner, ignored] : simplex_steps(seed, built)) {
      out.emplace_back(inner | apex, apex);
    }
    built = built.with(u);
  }
  return out;
}

Complex complete_skeleton(Face universe, int size) {
  return Complex::from_facets(subsets_of_size(universe, size), universe);
}

class Builder {
 public:
  explicit Builder(const SearchOptions& options) : oracle_(1, options) {}

  Complex to_cocl(const Complex& c, const DecompositionTree& tree, Face apexes,
                  const Frame& frame);
  Complex fill_coned(Complex current, Face apexes, const Graph& target, const Frame& frame);
  Complex clique_edge(Complex current, Face edge, const Frame& frame);
  Complex cocl_to_skeleton(Complex current, Face apexes, const Frame& frame);
  Complex grow_graph(Complex current, const Graph& target, const Frame& frame);

  ExtensionTrace finish(const Complex& start) const;

 private:
  Complex emit(const Complex& current, const Frame& frame, Face local,
               std::vector<Face> local_candidates) {
    PendingStep step{local | frame.pad, {}};
    for (Face f : local_candidates) step.shedding_candidates.push_back(f | frame.pad);
    step.shedding_candidates.insert(step.shedding_candidates.end(), frame.outer.begin(),
                                    frame.outer.end());
    steps_.push_back(std::move(step));
    return add_facet(current, local);
  }

  Decomposer oracle_;
  std::vector<PendingStep> steps_;
};

Complex Builder::to_cocl(const Complex& c, const DecompositionTree& tree, Face apexes,
                         const Frame& frame) {
  if (!c.is_proper()) return c;
  const int d = dimension(c);
  const Face all = c.vertex_set() | apexes;

  if (c.facet_count() == 1) {
    Complex current = c;
    for (const auto& [facet, apex] : simplex_steps(c.facets().front(), all)) {
      current = emit(current, frame, facet, {apex});
    }
    return current;
  }
  if (d == 0) {
    Complex current = c;
    for (Vertex h : apexes - c.vertex_set()) {
      current = emit(current, frame, Face::single(h), {Face::single(h)});
    }
    return current;
  }
  if (d == 1) return grow_graph(c, cone(skeleton(c), apexes), frame);

  if (tree.kind() != DecompositionTree::Kind::internal) {
    throw Error(Errc::bad_witness, "multi-facet complex needs a shedding face");
  }
  const Face f = tree.shedding_face();
  const Complex del_side = to_cocl(deletion(c, f), tree.deletion_child(), apexes, frame);

  const Frame inner = frame.enter_link(f);
  Complex link_side = to_cocl(link(c, f), tree.link_child(), apexes, inner);
  const Graph g = skeleton(c);
  link_side = fill_coned(std::move(link_side), apexes, g.induced(common_neighbourhood(g, f)), inner);

  std::vector<Face> facets(del_side.facets().begin(), del_side.facets().end());
  for (Face s : link_side.facets()) facets.push_back(s | f);
  return Complex::from_facets(std::move(facets), c.ground_set() | apexes);
}

// `current` is fully coned w.r.t. the apexes; grows it to full^d'(target^H)
// by coning on missing vertices and then inserting missing edges.
Complex Builder::fill_coned(Complex current, Face apexes, const Graph& target,
                            const Frame& frame) {
  const int d = dimension(current);
  for (Vertex v : target.vertices() - current.vertex_set()) {
    const Face apex = Face::single(v);
    if (d == 0) {
      current = emit(current, frame, apex, {apex});
      continue;
    }
    if (apexes.size() < d) {
      throw Error(Errc::not_applicable, "cone too small to attach vertex " + std::to_string(v));
    }
    const Face seed = first_vertices(apexes, d);
    current = emit(current, frame, seed | apex, {apex});
    for (const auto& [inner, ignored] : simplex_steps(seed, apexes)) {
      current = emit(current, frame, inner | apex, {apex});
    }
  }
  if (d == 0) return current;
  for (Face e : target.edges()) {
    if (!skeleton(current).has_edge(e)) current = clique_edge(std::move(current), e, frame);
  }
  return current;
}

// Adds every (d+1)-clique of skel(current)+e through e, in a 1-decomposable
// order of their common part, with e as the shedding face.
Complex Builder::clique_edge(Complex current, Face edge, const Frame& frame) {
  const int d = dimension(current);
  if (d == 1) return emit(current, frame, edge, {edge, Face::single(edge.min()), Face::single(edge.max())});

  const Graph g = skeleton(current);
  const Complex common = full_d(g.induced(common_neighbourhood(g, edge)), d - 2);
  if (common.is_void()) {
    throw Error(Errc::not_applicable, "edge completes no clique of the right size");
  }
  std::vector<Face> order;
  if (d == 2) {
    order.assign(common.facets().begin(), common.facets().end());
  } else {
    const Decision decision = oracle_.decide(common);
    if (decision.verdict == Verdict::inconclusive) {
      throw Error(Errc::budget_exhausted, "oracle ran out of nodes on a common neighbourhood");
    }
    if (decision.verdict != Verdict::yes) {
      throw Error(Errc::not_decomposable, "common neighbourhood complex failed the oracle");
    }
    order = decomposable_order(common, 1, *decision.witness);
  }
  for (Face s : order) current = emit(current, frame, s | edge, {edge});
  return current;
}

Complex Builder::cocl_to_skeleton(Complex current, Face apexes, const Frame& frame) {
  const Face base = current.vertex_set() - apexes;
  if (!connected(skeleton(current).induced(base))) {
    throw Error(Errc::disconnected_base, "skeleton restricted to the base vertices is disconnected");
  }
  while (true) {
    const Graph g = skeleton(current).induced(base);
    std::optional<Face> pick;
    for (Vertex u : base) {
      for (Vertex v : base - g.neighbors(u)) {
        if (v <= u) continue;
        if (!(g.neighbors(u) & g.neighbors(v)).empty()) {
          pick = Face::single(u).with(v);
          break;
        }
      }
      if (pick) break;
    }
    if (!pick) break;
    current = clique_edge(std::move(current), *pick, frame);
  }
  return current;
}

// 1-dimensional case: adds the missing edges of `target`, each touching the
// vertices already present, so every prefix stays connected.
Complex Builder::grow_graph(Complex current, const Graph& target, const Frame& frame) {
  std::vector<Face> missing;
  for (Face e : target.edges()) {
    if (!current.has_facet(e)) missing.push_back(e);
  }
  while (!missing.empty()) {
    const Face present = current.vertex_set();
    const auto it = std::find_if(missing.begin(), missing.end(),
                                 [&](Face e) { return !(e & present).empty(); });
    if (it == missing.end()) throw Error(Errc::not_applicable, "target graph is disconnected");
    const Face e = *it;
    missing.erase(it);
    std::vector<Face> candidates{e};
    if (const Face fresh = e - present; !fresh.empty()) candidates.insert(candidates.begin(), fresh);
    current = emit(current, frame, e, std::move(candidates));
  }
  return current;
}

ExtensionTrace Builder::finish(const Complex& start) const {
  ExtensionTrace trace(start);
  Complex current = start;
  for (const PendingStep& step : steps_) {
    current = add_facet(current, step.facet);
    std::optional<Face> shedding;
    if (is_pure(current)) {
      for (Face f : step.shedding_candidates) {
        if (!f.empty() && step.facet.contains(f) && is_shedding_face(current, f)) {
          shedding = f;
          break;
        }
      }
    }
    trace.add(step.facet, shedding);
  }
  return trace;
}

// --- precondition helpers --------------------------------------------------

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::not_applicable, what);
}

DecompositionTree require_decomposable(const Complex& c, const SearchOptions& options) {
  Decision decision = decide_k_decomposable(c, 1, options);
  switch (decision.verdict) {
    case Verdict::yes: return *decision.witness;
    case Verdict::no: throw Error(Errc::not_decomposable, "oracle: not 1-decomposable");
    case Verdict::inconclusive: break;
  }
  throw Error(Errc::budget_exhausted, "oracle inconclusive within the node budget");
}

void require_pure_dimension_at_least(const Complex& c, int d) {
  require(c.is_proper() && is_pure(c), "needs a pure nonempty complex");
  require(dimension(c) >= d, "needs dimension at least " + std::to_string(d));
}

bool is_edge_of(Face edge, const Complex& c) {
  return edge.size() == 2 && c.vertex_set().contains(edge);
}

}  // namespace

ConeContext main_cone_context(const Complex& c) {
  ConeContext ctx;
  ctx.base_vertices = c.vertex_set();
  ctx.dimension = dimension(c);
  const int count = std::max(ctx.dimension - 2, 0);
  const Face used = c.ground_set() | c.vertex_set();
  const Vertex first = used.empty() ? 0 : used.max() + 1;
  if (first + count > kMaxVertices) {
    throw Error(Errc::universe_too_large, "not enough labels left for the cone vertices");
  }
  if (count > 0) ctx.cone_vertices = Face::range(first, first + count - 1);
  return ctx;
}

ExtensionTrace extend_edge_2d(const Complex& c, Face edge, const SearchOptions& options) {
  require_pure_dimension_at_least(c, 2);
  require(dimension(c) == 2, "needs a 2-dimensional complex");
  require(is_edge_of(edge, c), "edge must join two vertices of the complex");
  const Graph g = skeleton(c);
  require(!g.has_edge(edge), "edge already in the skeleton");
  const Face common = common_neighbourhood(g, edge);
  require(!common.empty(), "edge completes no triangle");
  require_decomposable(c, options);
  ExtensionTrace trace(c);
  trace.add(edge.with(common.min()), edge);
  return trace;
}

ExtensionTrace extend_to_full_2d(const Complex& c, const SearchOptions& options) {
  require_pure_dimension_at_least(c, 2);
  require(dimension(c) == 2, "needs a 2-dimensional complex");
  const DecompositionTree tree = require_decomposable(c, options);
  Builder builder(options);
  builder.to_cocl(c, tree, Face{}, Frame{});
  return builder.finish(c);
}

ExtensionTrace extend_clique_edge(const Complex& c, Face cone_vertices, Face edge,
                                  const SearchOptions& options) {
  require_pure_dimension_at_least(c, 2);
  const int d = dimension(c);
  require(cone_vertices.size() >= d - 2, "cone needs at least d-2 vertices");
  require(is_fully_coned(c, cone_vertices), "complex is not fully coned w.r.t. the cone");
  require(is_edge_of(edge, c), "edge must join two vertices of the complex");
  const Graph g = skeleton(c);
  require(!g.has_edge(edge), "edge already in the skeleton");
  const auto completing = clique_completing_edges(g, d);
  require(std::find(completing.begin(), completing.end(), edge) != completing.end(),
          "edge completes no (d+1)-clique");
  require_decomposable(c, options);
  Builder builder(options);
  builder.clique_edge(c, edge, Frame{});
  return builder.finish(c);
}

ExtensionTrace extend_to_cocl(const Complex& c, Face cone_vertices, const SearchOptions& options) {
  require_pure_dimension_at_least(c, 2);
  require(c.vertex_set().disjoint(cone_vertices), "cone vertices must be fresh");
  require(cone_vertices.size() >= dimension(c) - 2, "cone needs at least d-2 vertices");
  const DecompositionTree tree = require_decomposable(c, options);
  Builder builder(options);
  builder.to_cocl(c, tree, cone_vertices, Frame{});
  return builder.finish(c);
}

ExtensionTrace extend_cocl_to_skeleton(const Complex& c, Face cone_vertices,
                                       const SearchOptions& options) {
  require_pure_dimension_at_least(c, 2);
  require(cone_vertices.size() == dimension(c) - 2, "cone needs exactly d-2 vertices");
  require(is_fully_coned(c, cone_vertices), "complex is not fully coned w.r.t. the cone");
  require_decomposable(c, options);
  Builder builder(options);
  builder.cocl_to_skeleton(c, cone_vertices, Frame{});
  return builder.finish(c);
}

ExtensionTrace extend_simplex_base(Face facet, Face universe) {
  require(!facet.empty() && universe.contains(facet), "facet must lie inside the universe");
  const Complex start = Complex::from_facets({facet}, universe);
  ExtensionTrace trace(start);
  for (const auto& [f, apex] : simplex_steps(facet, universe)) trace.add(f, apex);
  return trace;
}

ExtensionTrace extend_main(const Complex& c, const SearchOptions& options) {
  if (!c.is_proper() || dimension(c) < 2) return extend_main(c, Face{}, options);
  return extend_main(c, main_cone_context(c).cone_vertices, options);
}

ExtensionTrace extend_main(const Complex& c, Face cone_vertices, const SearchOptions& options) {
  if (!c.is_proper() || dimension(c) == 0) {
    if (c.is_proper() && !is_pure(c)) throw Error(Errc::not_pure, "needs a pure complex");
    require(cone_vertices.empty(), "no cone vertices below dimension 2");
    return ExtensionTrace(c);
  }
  const int d = dimension(c);
  require(is_pure(c) || d == 1, "needs a pure complex");
  require(cone_vertices.size() == std::max(d - 2, 0), "cone needs exactly d-2 vertices");
  require((c.ground_set() | c.vertex_set()).disjoint(cone_vertices),
          "cone vertices must lie outside the ground set");
  const DecompositionTree tree = require_decomposable(c, options);
  Builder builder(options);
  if (d == 1) {
    builder.grow_graph(c, skeleton(complete_skeleton(c.vertex_set(), 2)), Frame{});
    return builder.finish(c);
  }
  const Complex cocl = builder.to_cocl(c, tree, cone_vertices, Frame{});
  builder.cocl_to_skeleton(cocl, cone_vertices, Frame{});
  return builder.finish(c);
}

}  // namespace kdec
