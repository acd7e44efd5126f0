#include <doctest.h>

#include "kdec/decomp.hpp"
#include "kdec/error.hpp"
#include "kdec/extend.hpp"
#include "kdec/trace.hpp"
#include "support.hpp"

using namespace kdec;
using kdec::test::cx;
using kdec::test::F;
namespace naive = kdec::test::naive;

namespace {

const Complex kV6F10 = cx({123, 124, 125, 134, 136, 245, 256, 346, 356, 456});
const Complex kSix = cx({123, 234, 134, 135, 145, 245});

}  // namespace

TEST_CASE("shedding faces by the gluing criterion") {
  CHECK(is_shedding_face(kSix, F(25)));
  CHECK(is_shedding_face(kV6F10, F(15)));
  CHECK_FALSE(is_shedding_face(cx({123}), F(1)));
  CHECK(is_shedding_face(cx({123, 134, 145, 345}), F(5)));
  CHECK_FALSE(is_shedding_face(cx({123, 145}), F(5)));
}

TEST_CASE("shedding faces by the direct definition agree with the naive oracle") {
  const std::vector<std::pair<Complex, Face>> cases{
      {kSix, F(45)},          {kV6F10, F(15)}, {cx({123}), F(1)},
      {cx({123, 134, 145, 345}), F(5)}, {cx({123, 145}), F(5)}};
  for (const auto& [c, f] : cases) {
    const bool expected = naive::shedding(naive::to_family(c), naive::to_set(f));
    CHECK(is_shedding_face_direct(c, f) == expected);
    CHECK(is_shedding_face(c, f) == expected);
  }
  CHECK(is_shedding_face_direct(cx({123, 134, 145, 345}), F(5)));
  CHECK_FALSE(is_shedding_face_direct(cx({123, 145}), F(5)));
}

TEST_CASE("shedding preconditions") {
  CHECK_THROWS_AS(is_shedding_face(cx({123, 45}), F(4)), Error);
  try {
    is_shedding_face(cx({123}), F(4));
    FAIL("expected not-a-face");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_face);
  }
}

TEST_CASE("the ten-facet complex is 1- but not 0-decomposable") {
  CHECK_FALSE(is_k_decomposable(kV6F10, 0).has_value());
  const auto tree = is_k_decomposable(kV6F10, 1);
  REQUIRE(tree.has_value());
  CHECK(replay_tree(kV6F10, 1, *tree));
  CHECK(tree->max_face_dimension() <= 1);
  CHECK_FALSE(replay_tree(kV6F10, 0, *tree));
  // independent recursion without memo or pruning
  CHECK_FALSE(naive::k_decomposable(kV6F10, 0));
  CHECK(naive::k_decomposable(kV6F10, 1));
}

TEST_CASE("k-decomposability conventions") {
  for (int k = 0; k <= 3; ++k) {
    CHECK(is_k_decomposable(cx({1234}), k).has_value());
    CHECK(is_k_decomposable(Complex::void_complex(), k).has_value());
    CHECK(is_k_decomposable(Complex::empty_complex(), k).has_value());
    CHECK(is_k_decomposable(cx({1, 2, 3}), k).has_value());
  }
  CHECK(is_k_decomposable(cx({123}), 0)->kind() == DecompositionTree::Kind::simplex_leaf);
}

TEST_CASE("graphs are 1-decomposable exactly when connected") {
  CHECK(is_k_decomposable(cx({12, 23, 34}), 1).has_value());
  CHECK_FALSE(is_k_decomposable(cx({12, 34}), 1).has_value());
  // isolated vertices are stripped before the search
  CHECK(is_k_decomposable(cx({12, 23, 5}), 1).has_value());
  CHECK(is_k_decomposable(cx({12, 23, 31}), 0).has_value());
}

TEST_CASE("impure complexes of dimension two are rejected") {
  CHECK_THROWS_AS(is_k_decomposable(cx({123, 45}), 1), Error);
}

TEST_CASE("shellability") {
  CHECK(is_shellable(cx({123, 124, 134, 234})));
  CHECK_FALSE(is_shellable(cx({123, 456})));
  const ShellingResult r = find_shelling(kV6F10);
  REQUIRE(r.verdict == Verdict::yes);
  CHECK(r.order.size() == 10);
  CHECK(is_shelling_order(r.order));
  CHECK(naive::shellable(kV6F10));
  CHECK(is_shellable(Complex::empty_complex()));
  CHECK(is_shellable(Complex::void_complex()));
  CHECK_FALSE(is_shelling_order(test::faces({123, 345, 134})));
  CHECK(is_shelling_order(test::faces({123, 134, 345})));
}

TEST_CASE("shellable agrees with dim-decomposable on small cases") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    const Complex c = test::random_pure(rng, 6, 2, 2 + round % 8);
    const bool shell = is_shellable(c);
    CHECK(shell == naive::shellable(c));
    CHECK(shell == is_k_decomposable(c, dimension(c)).has_value());
  }
}

TEST_CASE("45 is not a shedding face of the six-facet complex") {
  // 245 minus 4 is 25, and no other facet contains 25
  CHECK_FALSE(is_shedding_face(kSix, F(45)));
  CHECK_FALSE(naive::shedding(naive::to_family(kSix), naive::to_set(F(45))));
  CHECK_FALSE(is_pure(deletion(kSix, F(45))));
  CHECK(naive::k_decomposable(kSix, 1));
  CHECK(is_k_decomposable(kSix, 1).has_value());
}

TEST_CASE("decomposable order puts the deletion first") {
  REQUIRE(is_shedding_face(kSix, F(25)));
  const Decision del = decide_k_decomposable(deletion(kSix, F(25)), 1);
  const Decision lk = decide_k_decomposable(link(kSix, F(25)), 1);
  REQUIRE(del.witness);
  REQUIRE(lk.witness);
  const auto tree = DecompositionTree::internal(F(25), *del.witness, *lk.witness);
  const std::vector<Face> order = decomposable_order(kSix, 1, tree);
  REQUIRE(order.size() == 6);
  CHECK(test::facet_set({order.begin(), order.begin() + 5}) ==
        test::facet_set(test::faces({123, 234, 134, 135, 145})));
  CHECK(order.back() == F(245));
  for (std::size_t i = 1; i <= order.size(); ++i) {
    CHECK(naive::k_decomposable(Complex::from_facets({order.begin(), order.begin() + static_cast<long>(i)}), 1));
  }
}

TEST_CASE("decomposable order of a searched witness") {
  const auto tree = is_k_decomposable(kV6F10, 1);
  REQUIRE(tree);
  const std::vector<Face> order = decomposable_order(kV6F10, 1, *tree);
  CHECK(test::facet_set(order) == test::facet_set(kV6F10));
  for (std::size_t i = 1; i <= order.size(); ++i) {
    CHECK(naive::k_decomposable(Complex::from_facets({order.begin(), order.begin() + static_cast<long>(i)}), 1));
  }
  CHECK(decomposable_order(cx({123}), 1, DecompositionTree::simplex()) == test::faces({123}));
}

TEST_CASE("a tree that does not fit is a bad witness") {
  const auto tree = DecompositionTree::internal(F(1), DecompositionTree::simplex(),
                                                DecompositionTree::simplex());
  try {
    decomposable_order(kSix, 1, tree);
    FAIL("expected bad-witness");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_witness);
  }
}

TEST_CASE("node budget yields inconclusive, never no") {
  const Decision d = decide_k_decomposable(kV6F10, 0, SearchOptions{1});
  CHECK(d.verdict == Verdict::inconclusive);
  CHECK_FALSE(d.witness.has_value());
  CHECK(find_shelling(cx({123, 456, 124, 125, 126, 134, 135}), SearchOptions{0}).verdict ==
        Verdict::inconclusive);
}

TEST_CASE("decomposer memo is reused across queries") {
  Decomposer oracle(1);
  CHECK(oracle.verdict(kV6F10) == Verdict::yes);
  const std::size_t cached = oracle.cache_size();
  CHECK(cached > 0);
  CHECK(oracle.verdict(kV6F10) == Verdict::yes);
  CHECK(oracle.cache_size() == cached);
}

TEST_CASE("certify an extension trace") {
  const ExtensionTrace trace = extend_main(kV6F10);
  const CertificationReport report = certify_trace(trace, 1);
  CHECK(report.passed);
  CHECK(report.prefixes.size() == trace.size() + 1);
  CHECK_FALSE(report.first_failure.has_value());
}

TEST_CASE("certify an empty trace") {
  CHECK(certify_trace(ExtensionTrace(kV6F10), 1).passed);
  CHECK_FALSE(certify_trace(ExtensionTrace(kV6F10), 0).passed);
  CHECK_FALSE(certify_trace(ExtensionTrace(cx({123, 456})), 1).passed);
}

TEST_CASE("a shuffled trace fails where the naive oracle says it does") {
  const ExtensionTrace good = extend_main(cx({123, 134, 145}));
  REQUIRE(certify_trace(good, 1).passed);
  bool found = false;
  for (std::size_t i = 0; i < good.size() && !found; ++i) {
    for (std::size_t j = i + 1; j < good.size() && !found; ++j) {
      std::vector<Face> steps = good.added_facets();
      std::swap(steps[i], steps[j]);
      ExtensionTrace swapped(good.start());
      for (Face f : steps) swapped.add(f);
      std::optional<std::size_t> expected;
      for (std::size_t p = 0; p <= swapped.size() && !expected; ++p) {
        if (!naive::k_decomposable(swapped.prefix(p), 1)) expected = p;
      }
      if (!expected) continue;
      found = true;
      const CertificationReport report = certify_trace(swapped, 1);
      CHECK_FALSE(report.passed);
      CHECK(report.first_failure == expected);
    }
  }
  CHECK(found);
}

TEST_CASE("a wrong shedding annotation fails certification") {
  ExtensionTrace trace(cx({123, 134, 145}));
  trace.add(F(125), F(25));
  CHECK(certify_trace(trace, 1).passed);
  ExtensionTrace wrong(cx({123, 134, 145}));
  wrong.add(F(125), F(1));
  const CertificationReport report = certify_trace(wrong, 1);
  CHECK_FALSE(report.passed);
  CHECK(report.first_failure == 1u);
  CHECK(report.prefixes[1].shedding_ok == false);
}

TEST_CASE("trace bookkeeping") {
  ExtensionTrace trace(cx({123}));
  trace.add(F(124));
  CHECK_THROWS_AS(trace.add(F(124)), Error);
  CHECK_THROWS_AS(trace.add(F(123)), Error);
  CHECK_THROWS_AS(trace.add(F(12)), Error);
  CHECK(trace.final_complex() == cx({123, 124}));
  CHECK(trace.prefix(0) == cx({123}));
}
