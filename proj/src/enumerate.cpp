#include "kdec/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "kdec/error.hpp"

namespace kdec {

namespace {

using Key = std::vector<std::uint64_t>;

// Colour classes of the vertices, refined until stable. Colours are ranks of
// isomorphism-invariant signatures, so the cell order is invariant too.
std::vector<int> refine_colours(const std::vector<Vertex>& verts, std::span<const Face> facets) {
  const std::size_t m = verts.size();
  std::vector<int> colour(m, 0);
  std::array<int, kMaxVertices> index{};
  for (std::size_t i = 0; i < m; ++i) index[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);

  std::size_t classes = 1;
  while (true) {
    std::vector<std::pair<int, std::vector<std::vector<int>>>> signature(m);
    for (std::size_t i = 0; i < m; ++i) signature[i].first = colour[i];
    for (Face f : facets) {
      std::vector<int> members;
      for (Vertex v : f) members.push_back(colour[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])]);
      std::sort(members.begin(), members.end());
      for (Vertex v : f) signature[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])].second.push_back(members);
    }
    for (auto& s : signature) std::sort(s.second.begin(), s.second.end());
    std::vector<decltype(signature)::value_type> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < m; ++i) {
      colour[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[i]) -
                                   distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

Key relabeled(std::span<const Face> facets, const std::array<int, kMaxVertices>& position) {
  Key key;
  key.reserve(facets.size());
  for (Face f : facets) {
    std::uint64_t bits = 0;
    for (Vertex v : f) bits |= std::uint64_t{1} << position[static_cast<std::size_t>(v)];
    key.push_back(bits);
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

std::vector<std::uint64_t> canonical_form(const Complex& c) {
  const std::vector<Vertex> verts = c.vertex_set().vertices();
  const std::vector<int> colour = refine_colours(verts, c.facets());

  // Vertices sorted by colour; permutations act within equal-colour runs.
  std::vector<std::size_t> order(verts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && colour[order[j]] == colour[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  std::array<int, kMaxVertices> position{};
  std::optional<Key> best;
  // Odometer over per-cell permutations, each cell cycling through
  // std::next_permutation from sorted order.
  while (true) {
    for (std::size_t slot = 0; slot < order.size(); ++slot) {
      position[static_cast<std::size_t>(verts[order[slot]])] = static_cast<int>(slot);
    }
    Key key = relabeled(c.facets(), position);
    if (!best || key < *best) best = std::move(key);

    std::size_t cell = 0;
    for (; cell < cells.size(); ++cell) {
      const auto [lo, hi] = cells[cell];
      if (std::next_permutation(order.begin() + static_cast<long>(lo),
                                order.begin() + static_cast<long>(hi))) {
        break;
      }
    }
    if (cell == cells.size()) break;
  }
  return best.value_or(Key{});
}

// ---------------------------------------------------------------------------

namespace {

void check_size(int n, int d) {
  if (n < 1 || d < 0 || d + 1 > n || n > kMaxVertices) {
    throw Error(Errc::not_applicable, "need 0 <= d < n <= 64");
  }
}

Complex from_key(const Key& key) {
  std::vector<Face> facets;
  for (std::uint64_t bits : key) facets.emplace_back(bits);
  return Complex::from_facets(std::move(facets));
}

}  // namespace

ExtendabilityReport scan_extendability(int n, int d, const SearchOptions& options) {
  check_size(n, d);
  ExtendabilityReport report;
  report.n = n;
  report.d = d;
  const std::vector<Face> universe = subsets_of_size(Face::range(0, n - 1), d + 1);
  Decomposer oracle(1, options);

  std::set<Key> level{canonical_form(Complex::from_facets({Face::range(0, d)}))};
  for (std::size_t size = 1; !level.empty(); ++size) {
    ExtendabilityLevel stats;
    stats.facets = size;
    stats.classes = level.size();
    std::set<Key> next;
    for (const Key& key : level) {
      const Complex c = from_key(key);
      bool grows = false;
      for (Face f : universe) {
        if (c.has_facet(f)) continue;
        const Complex bigger = add_facet(c, f);
        const Verdict v = oracle.verdict(bigger);
        if (v == Verdict::inconclusive) report.inconclusive = true;
        if (v != Verdict::yes) continue;
        grows = true;
        next.insert(canonical_form(bigger));
      }
      if (grows) {
        ++stats.extendable;
      } else if (size < universe.size()) {
        ++stats.stuck;
        report.stuck_examples.push_back(c);
      }
    }
    report.levels.push_back(stats);
    level = std::move(next);
  }
  return report;
}

ThresholdReport scan_thresholds(int n, int d, const SearchOptions& options) {
  check_size(n, d);
  ThresholdReport report;
  report.n = n;
  report.d = d;
  const Face all = Face::range(0, n - 1);
  const std::vector<Face> universe = subsets_of_size(all, d + 1);
  Decomposer vd(0, options);
  Decomposer one(1, options);

  std::set<Key> level{canonical_form(Complex::from_facets({Face::range(0, d)}))};
  for (std::size_t size = 1; !level.empty(); ++size) {
    ThresholdLevel stats;
    stats.facets = size;
    std::set<Key> next;
    for (const Key& key : level) {
      const Complex c = from_key(key);
      for (Face f : universe) {
        if (!c.has_facet(f)) next.insert(canonical_form(add_facet(c, f)));
      }
      if (c.vertex_set() != all) continue;
      ++stats.classes;
      const Verdict v0 = vd.verdict(c);
      const Verdict v1 = one.verdict(c);
      const Verdict vs = find_shelling(c, options).verdict;
      for (Verdict v : {v0, v1, vs}) {
        if (v == Verdict::inconclusive) report.inconclusive = true;
      }
      stats.vertex_decomposable += v0 == Verdict::yes;
      stats.one_decomposable += v1 == Verdict::yes;
      stats.shellable += vs == Verdict::yes;
    }
    report.levels.push_back(stats);
    level = std::move(next);
  }

  // Scan from the top: the threshold is one past the largest failing level.
  const auto threshold = [&](auto count) -> std::optional<std::size_t> {
    std::optional<std::size_t> from;
    for (auto it = report.levels.rbegin(); it != report.levels.rend(); ++it) {
      if (count(*it) != it->classes) break;
      from = it->facets;
    }
    return from;
  };
  report.vertex_decomposable_from =
      threshold([](const ThresholdLevel& l) { return l.vertex_decomposable; });
  report.one_decomposable_from = threshold([](const ThresholdLevel& l) { return l.one_decomposable; });
  report.shellable_from = threshold([](const ThresholdLevel& l) { return l.shellable; });
  return report;
}

}  // namespace kdec
