#include <doctest.h>

#include <map>
#include <numeric>

#include "kdec/decomp.hpp"
#include "kdec/enumerate.hpp"
#include "support.hpp"

using namespace kdec;
using kdec::test::cx;
using kdec::test::F;
namespace naive = kdec::test::naive;

namespace {

// Smallest sorted facet-mask list over every permutation of 0..n-1.
std::vector<std::uint64_t> brute_key(const Complex& c, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> key;
    for (Face f : c.facets()) {
      std::uint64_t bits = 0;
      for (Vertex v : f) bits |= std::uint64_t{1} << perm[static_cast<std::size_t>(v)];
      key.push_back(bits);
    }
    std::sort(key.begin(), key.end());
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Complex permuted(const Complex& c, const std::vector<Vertex>& perm) {
  std::vector<Face> out;
  for (Face f : c.facets()) {
    Face g;
    for (Vertex v : f) g = g.with(perm[static_cast<std::size_t>(v)]);
    out.push_back(g);
  }
  return Complex::from_facets(out);
}

Complex from_mask(const std::vector<Face>& pool, unsigned mask) {
  std::vector<Face> chosen;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mask & (1U << i)) chosen.push_back(pool[i]);
  }
  return Complex::from_facets(chosen);
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 200; ++round) {
    const int n = 4 + round % 3;
    const Complex c = test::random_pure(rng, n, 1 + round % 2, 1 + round % 8);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(c) == canonical_form(permuted(c, perm)));
  }
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 300; ++round) {
    const int n = 4 + round % 2;
    const int count = 2 + round % 5;
    const Complex a = test::random_pure(rng, n, 2, count);
    const Complex b = test::random_pure(rng, n, 2, count);
    CHECK((canonical_form(a) == canonical_form(b)) == (brute_key(a, n) == brute_key(b, n)));
  }
}

TEST_CASE("canonical form of regular complexes") {
  // every vertex looks the same here, so refinement leaves one cell
  const Complex boundary = Complex::from_facets(subsets_of_size(F(1234), 3));
  CHECK(canonical_form(boundary) == canonical_form(Complex::from_facets(subsets_of_size(F(2345), 3))));
  CHECK(canonical_form(cx({12, 23, 34, 45, 51})) == canonical_form(cx({13, 35, 52, 24, 41})));
  CHECK(canonical_form(cx({12, 23, 34, 45, 56, 61})) != canonical_form(cx({12, 23, 31, 45, 56, 64})));
}

TEST_CASE("extendability scan matches a brute-force census") {
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 1}}) {
    const ExtendabilityReport report = scan_extendability(n, d);
    CHECK(report.confirmed());
    CHECK(report.n == n);

    const std::vector<Face> pool = subsets_of_size(Face::range(0, n - 1), d + 1);
    std::map<std::size_t, std::set<std::vector<std::uint64_t>>> classes;
    for (unsigned mask = 1; mask < (1U << pool.size()); ++mask) {
      const Complex c = from_mask(pool, mask);
      if (naive::k_decomposable(c, 1)) classes[c.facet_count()].insert(brute_key(c, n));
    }
    REQUIRE(report.levels.size() == classes.size());
    for (const ExtendabilityLevel& level : report.levels) {
      CHECK(level.classes == classes[level.facets].size());
      // the full skeleton has nowhere to go and counts as neither
      const bool top = level.facets == pool.size();
      CHECK(level.extendable + level.stuck == (top ? 0 : level.classes));
      CHECK(level.stuck == 0);
    }
    CHECK(report.levels.back().facets == pool.size());
    CHECK(report.levels.back().classes == 1);
  }
}

TEST_CASE("threshold scan matches a brute-force census") {
  const int n = 5;
  const int d = 2;
  const ThresholdReport report = scan_thresholds(n, d);
  CHECK_FALSE(report.inconclusive);

  const std::vector<Face> pool = subsets_of_size(Face::range(0, n - 1), d + 1);
  struct Counts {
    std::set<std::vector<std::uint64_t>> all, vd, one, shell;
  };
  std::map<std::size_t, Counts> census;
  for (unsigned mask = 1; mask < (1U << pool.size()); ++mask) {
    const Complex c = from_mask(pool, mask);
    if (c.vertex_set() != Face::range(0, n - 1)) continue;
    const auto key = brute_key(c, n);
    Counts& slot = census[c.facet_count()];
    if (!slot.all.insert(key).second) continue;
    if (naive::k_decomposable(c, 0)) slot.vd.insert(key);
    if (naive::k_decomposable(c, 1)) slot.one.insert(key);
    if (naive::shellable(c)) slot.shell.insert(key);
  }
  // levels too small to touch every vertex are reported empty
  REQUIRE(report.levels.size() == pool.size());
  for (const ThresholdLevel& level : report.levels) {
    if (!census.count(level.facets)) {
      CHECK(level.classes == 0);
      continue;
    }
    const Counts& expected = census[level.facets];
    CHECK(level.classes == expected.all.size());
    CHECK(level.vertex_decomposable == expected.vd.size());
    CHECK(level.one_decomposable == expected.one.size());
    CHECK(level.shellable == expected.shell.size());
    CHECK(level.vertex_decomposable <= level.one_decomposable);
    CHECK(level.one_decomposable <= level.shellable);
  }

  // smallest m with every class at m facets or more having the property
  auto threshold = [&](auto member) -> std::optional<std::size_t> {
    std::optional<std::size_t> from;
    for (auto it = census.rbegin(); it != census.rend(); ++it) {
      if ((it->second.*member).size() != it->second.all.size()) break;
      from = it->first;
    }
    return from;
  };
  CHECK(report.vertex_decomposable_from == threshold(&Counts::vd));
  CHECK(report.one_decomposable_from == threshold(&Counts::one));
  CHECK(report.shellable_from == threshold(&Counts::shell));
}

TEST_CASE("scans report inconclusive under a tiny budget") {
  CHECK(scan_thresholds(5, 2, SearchOptions{1}).inconclusive);
  CHECK_FALSE(scan_extendability(5, 2, SearchOptions{1}).confirmed());
}
