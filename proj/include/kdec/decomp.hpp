#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "kdec/complex.hpp"

namespace kdec {

/// Outcome of a bounded exhaustive search. `inconclusive` means the node
/// budget ran out; it never stands in for `no`.
enum class Verdict { yes, no, inconclusive };

struct SearchOptions {
  /// Cap on search nodes per top-level query; unset means unbounded.
  std::optional<std::uint64_t> node_budget;
};

/// Witness that a complex is k-decomposable. Internal nodes name a shedding
/// face; the deletion child certifies del_F C and the link child lk_F C.
/// Children are shared, so copies are cheap.
class DecompositionTree {
 public:
  enum class Kind { simplex_leaf, trivial_leaf, internal };

  static DecompositionTree simplex();
  /// Void, empty, or 0-dimensional complexes.
  static DecompositionTree trivial();
  static DecompositionTree internal(Face shedding_face, DecompositionTree deletion_child,
                                    DecompositionTree link_child);

  Kind kind() const { return kind_; }
  /// Only meaningful on internal nodes.
  Face shedding_face() const { return face_; }
  const DecompositionTree& deletion_child() const { return *deletion_; }
  const DecompositionTree& link_child() const { return *link_; }

  /// Number of internal nodes.
  std::size_t internal_count() const;
  /// Largest shedding-face dimension used anywhere in the tree (-1 if none).
  int max_face_dimension() const;

 private:
  DecompositionTree() = default;

  Kind kind_ = Kind::trivial_leaf;
  Face face_;
  std::shared_ptr<const DecompositionTree> deletion_;
  std::shared_ptr<const DecompositionTree> link_;
};

struct Decision {
  Verdict verdict = Verdict::no;
  std::optional<DecompositionTree> witness;
};

/// Memoized k-decomposability search for a fixed k.
///
/// Shedding faces are tried by dimension, then lexicographically. Results are
/// cached under an order-preserving dense relabeling of the facet list, so
/// the cache survives across queries on the same instance. Not thread-safe;
/// use one instance per thread.
class Decomposer {
 public:
  explicit Decomposer(int k, SearchOptions options = {});

  /// Pure complexes of any dimension; 1-dimensional complexes have their
  /// isolated vertices stripped first. Throws not-pure for an impure complex
  /// of dimension at least 2.
  Decision decide(const Complex& c);
  /// decide(c).verdict, without building a witness.
  Verdict verdict(const Complex& c);

  int k() const { return k_; }
  std::uint64_t nodes_visited() const { return nodes_; }
  std::size_t cache_size() const { return memo_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept;
  };

  bool search(const Complex& c);
  DecompositionTree build(const Complex& c);
  void start_query();

  int k_;
  SearchOptions options_;
  std::uint64_t nodes_ = 0;
  std::uint64_t query_start_ = 0;
  std::unordered_map<std::vector<std::uint64_t>, bool, KeyHash> memo_;
};

/// Gluing criterion: for each f ∈ F and each facet H ⊇ F there is a facet H'
/// with H ∩ H' = H ∖ {f}. Throws not-pure or not-a-face.
bool is_shedding_face(const Complex& c, Face f);
/// Direct definition: del_F C is pure of the same dimension as C.
bool is_shedding_face_direct(const Complex& c, Face f);

/// Unbounded search; absent means not k-decomposable.
std::optional<DecompositionTree> is_k_decomposable(const Complex& c, int k);
Decision decide_k_decomposable(const Complex& c, int k, const SearchOptions& options = {});

/// Replays a witness: every internal face has dimension ≤ k and passes the
/// gluing criterion on its node's complex, and leaves match their complexes.
bool replay_tree(const Complex& c, int k, const DecompositionTree& tree);

/// Facet order F1..Ft with every prefix k-decomposable: deletion-side facets
/// first, then the star padded from the link's order. Throws bad-witness.
std::vector<Face> decomposable_order(const Complex& c, int k, const DecompositionTree& tree);

/// Backtracking shelling search over facet orders. Throws not-pure.
struct ShellingResult {
  Verdict verdict = Verdict::no;
  std::vector<Face> order;  // a shelling when verdict == yes
};
ShellingResult find_shelling(const Complex& c, const SearchOptions& options = {});
bool is_shellable(const Complex& c);
/// Checks the shelling condition for a given facet order.
bool is_shelling_order(std::span<const Face> order);

}  // namespace kdec
