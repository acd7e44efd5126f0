#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kdec/complex.hpp"
#include "kdec/decomp.hpp"

namespace kdec {

/// Isomorphism-invariant key of a complex's facet list under vertex
/// permutations. Vertices are split into cells by iterated colour
/// refinement; the key is the smallest sorted facet-mask list over all
/// relabelings that keep the cells in order. Exact, but exponential in the
/// cell sizes, so meant for small complexes.
std::vector<std::uint64_t> canonical_form(const Complex& c);

/// Classes of pure d-dimensional complexes inside the d-skeleton of the
/// simplex on n vertices, grouped by facet count.
struct ExtendabilityLevel {
  std::size_t facets = 0;
  std::size_t classes = 0;      // 1-decomposable complexes, up to isomorphism
  std::size_t extendable = 0;   // with a 1-decomposable one-facet extension
  std::size_t stuck = 0;        // without one (never the full skeleton)
};

struct ExtendabilityReport {
  int n = 0;
  int d = 0;
  std::vector<ExtendabilityLevel> levels;
  std::vector<Complex> stuck_examples;
  bool inconclusive = false;
  bool confirmed() const { return !inconclusive && stuck_examples.empty(); }
};

/// Breadth-first walk from a single facet through every 1-decomposable
/// subcomplex reachable by 1-decomposable one-facet steps, recording whether
/// each class can still grow. Every 1-decomposable complex has a facet order
/// with 1-decomposable prefixes, so the walk misses none.
ExtendabilityReport scan_extendability(int n, int d, const SearchOptions& options = {});

struct ThresholdLevel {
  std::size_t facets = 0;
  std::size_t classes = 0;  // complexes using all n vertices, up to isomorphism
  std::size_t vertex_decomposable = 0;
  std::size_t one_decomposable = 0;
  std::size_t shellable = 0;
};

struct ThresholdReport {
  int n = 0;
  int d = 0;
  std::vector<ThresholdLevel> levels;
  /// Smallest facet count m such that every class with at least m facets
  /// has the property.
  std::optional<std::size_t> vertex_decomposable_from;
  std::optional<std::size_t> one_decomposable_from;
  std::optional<std::size_t> shellable_from;
  bool inconclusive = false;
};

/// Counts, per facet count, the complexes on exactly n vertices that are
/// 0-decomposable, 1-decomposable and shellable.
ThresholdReport scan_thresholds(int n, int d, const SearchOptions& options = {});

}  // namespace kdec
