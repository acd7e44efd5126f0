#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "kdec/decomp.hpp"
#include "kdec/error.hpp"

namespace kdec {

namespace {

struct BudgetExceeded {};

using Placement = std::vector<std::uint64_t>;

struct PlacementHash {
  std::size_t operator()(const Placement& p) const noexcept {
    std::size_t h = 0;
    for (std::uint64_t w : p) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
    return h;
  }
};

class ShellingSearch {
 public:
  ShellingSearch(std::vector<Face> facets, const SearchOptions& options)
      : facets_(std::move(facets)), options_(options) {
    const std::size_t n = facets_.size();
    missing_.assign(n, std::vector<Face>(n));
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && adjacent_faces(facets_[i], facets_[j])) {
          missing_[i][j] = facets_[i] - facets_[j];
          ++degree[i];
        }
      }
    }
    // Greedy-first: well-connected facets are tried first.
    try_order_.resize(n);
    std::iota(try_order_.begin(), try_order_.end(), std::size_t{0});
    std::stable_sort(try_order_.begin(), try_order_.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    placed_.assign((n + 63) / 64, 0);
  }

  bool run() { return extend(); }
  std::vector<Face> order() const {
    std::vector<Face> out;
    for (std::size_t i : order_) out.push_back(facets_[i]);
    return out;
  }

 private:
  bool is_placed(std::size_t i) const { return (placed_[i / 64] >> (i % 64)) & 1U; }
  void flip(std::size_t i) { placed_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  // facet i meets the union of placed facets in a pure codimension-one complex
  bool fits(std::size_t i) const {
    if (order_.empty()) return true;
    Face ridge_drops;  // vertices r with F_i ∖ r inside some placed facet
    for (std::size_t j : order_) ridge_drops |= missing_[i][j];
    if (ridge_drops.empty()) return false;
    return std::all_of(order_.begin(), order_.end(), [&](std::size_t j) {
      return !((facets_[i] - facets_[j]) & ridge_drops).empty();
    });
  }

  bool extend() {
    if (order_.size() == facets_.size()) return true;
    if (dead_.contains(placed_)) return false;
    if (options_.node_budget && ++nodes_ > *options_.node_budget) throw BudgetExceeded{};
    for (std::size_t i : try_order_) {
      if (is_placed(i) || !fits(i)) continue;
      flip(i);
      order_.push_back(i);
      if (extend()) return true;
      order_.pop_back();
      flip(i);
    }
    dead_.insert(placed_);
    return false;
  }

  std::vector<Face> facets_;
  SearchOptions options_;
  std::vector<std::vector<Face>> missing_;
  std::vector<std::size_t> try_order_;
  std::vector<std::size_t> order_;
  Placement placed_;
  std::unordered_set<Placement, PlacementHash> dead_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ShellingResult find_shelling(const Complex& c, const SearchOptions& options) {
  if (!is_pure(c)) throw Error(Errc::not_pure, "shellability needs a pure complex");
  if (!c.is_proper()) return {Verdict::yes, {}};
  ShellingSearch search({c.facets().begin(), c.facets().end()}, options);
  try {
    if (search.run()) return {Verdict::yes, search.order()};
    return {Verdict::no, {}};
  } catch (const BudgetExceeded&) {
    return {Verdict::inconclusive, {}};
  }
}

bool is_shellable(const Complex& c) { return find_shelling(c).verdict == Verdict::yes; }

bool is_shelling_order(std::span<const Face> order) {
  for (std::size_t k = 1; k < order.size(); ++k) {
    const int ridge = order[k].size() - 1;
    std::vector<Face> meets;
    for (std::size_t i = 0; i < k; ++i) meets.push_back(order[k] & order[i]);
    for (Face m : meets) {
      const bool covered = std::any_of(meets.begin(), meets.end(), [&](Face other) {
        return other.size() == ridge && other.contains(m);
      });
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace kdec
