#pragma once

#include "kdec/complex.hpp"
#include "kdec/decomp.hpp"
#include "kdec/trace.hpp"

namespace kdec {

/// Vertex bookkeeping for the coned extension: the original vertices, the
/// fresh cone vertices H, and the working dimension.
struct ConeContext {
  Face base_vertices;
  Face cone_vertices;
  int dimension = 0;
};

/// Base vertices of C plus d-2 fresh labels placed directly above the
/// largest ground-set label. Throws universe-too-large past 64 labels.
ConeContext main_cone_context(const Complex& c);

/// Every extension routine below returns a trace whose prefixes are all
/// 1-decomposable (0-decomposable for extend_simplex_base). Precondition
/// failures throw Error(not-applicable), or not-decomposable when the input
/// itself fails the oracle.

/// 2-dimensional C and a missing edge e=ab completing a triangle abc: adds
/// abc with e as shedding face (c is the smallest common neighbour).
ExtensionTrace extend_edge_2d(const Complex& c, Face edge, const SearchOptions& options = {});

/// 2-dimensional C up to full(C) with the skeleton fixed.
ExtensionTrace extend_to_full_2d(const Complex& c, const SearchOptions& options = {});

/// C fully coned w.r.t. H with |H| ≥ d-2 and a missing edge e completing a
/// (d+1)-clique: adds every (d+1)-clique of skel(C)+e through e. The result
/// is fully coned w.r.t. H on skeleton skel(C)+e.
ExtensionTrace extend_clique_edge(const Complex& c, Face cone_vertices, Face edge,
                                  const SearchOptions& options = {});

/// C (d ≥ 2) up to cocl C = full^d(skel(C)^H), for H disjoint from V(C)
/// with |H| ≥ d-2.
ExtensionTrace extend_to_cocl(const Complex& c, Face cone_vertices,
                              const SearchOptions& options = {});

/// A complex fully coned w.r.t. H, |H| = d-2, whose skeleton restricted to
/// the other vertices is connected, up to the d-skeleton of the simplex on
/// all its vertices. Throws disconnected-base.
ExtensionTrace extend_cocl_to_skeleton(const Complex& c, Face cone_vertices,
                                       const SearchOptions& options = {});

/// ⟨F⟩ up to the (|F|-1)-skeleton of the simplex on `universe`, keeping every
/// prefix vertex decomposable. Vertices of universe ∖ F are coned on one at a
/// time in increasing order.
ExtensionTrace extend_simplex_base(Face facet, Face universe);

/// A pure 1-decomposable C of dimension d on n vertices up to the
/// d-skeleton of the simplex on n+d-2 vertices (the n base vertices plus the
/// cone vertices of main_cone_context). For d = 1 the target is the complete
/// graph on the vertices; for d = 0 the trace is empty.
ExtensionTrace extend_main(const Complex& c, const SearchOptions& options = {});
/// Same, with caller-chosen cone vertices: exactly max(d-2, 0) labels
/// outside the ground set.
ExtensionTrace extend_main(const Complex& c, Face cone_vertices, const SearchOptions& options = {});

}  // namespace kdec
