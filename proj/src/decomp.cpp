#include "kdec/decomp.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "kdec/error.hpp"

namespace kdec {

namespace {

struct BudgetExceeded {};

// Isolated vertices of a 1-dimensional complex carry no decomposability
// information; higher-dimensional complexes must already be pure.
Complex normalized(const Complex& c) {
  if (is_pure(c)) return c;
  if (dimension(c) >= 2) throw Error(Errc::not_pure, "decomposability needs a pure complex");
  std::vector<Face> edges;
  for (Face f : c.facets()) {
    if (f.size() == 2) edges.push_back(f);
  }
  return Complex::from_facets(std::move(edges), c.ground_set());
}

bool trivially_decomposable(const Complex& c) {
  return !c.is_proper() || c.facet_count() == 1 || dimension(c) == 0;
}

// Gluing criterion on a pure proper complex; F must be a face.
bool glues(const Complex& c, Face f) {
  const auto facets = c.facets();
  for (Face h : facets) {
    if (!h.contains(f)) continue;
    for (Vertex v : f) {
      const Face target = h.without(v);
      const bool found = std::any_of(facets.begin(), facets.end(),
                                     [&](Face other) { return (h & other) == target; });
      if (!found) return false;
    }
  }
  return true;
}

void require_pure_face(const Complex& c, Face f) {
  if (!is_pure(c)) throw Error(Errc::not_pure, "shedding test needs a pure complex");
  if (!c.has_face(f)) throw Error(Errc::not_a_face, "shedding candidate is not a face");
}

// Facets adjacent-connected. Shellable complexes of dimension ≥ 1 are
// strongly connected, so this is a sound prune for every k.
bool strongly_connected(const Complex& c) {
  const auto facets = c.facets();
  const std::size_t n = facets.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && adjacent_faces(facets[i], facets[j])) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == n;
}

// Faces with 1..k+1 vertices, by size and then lexicographically.
std::vector<Face> candidate_faces(const Complex& c, int k) {
  std::unordered_set<Face> pool;
  for (Face facet : c.facets()) {
    const int top = std::min(k + 1, facet.size());
    for (int s = 1; s <= top; ++s) {
      for (Face sub : subsets_of_size(facet, s)) pool.insert(sub);
    }
  }
  std::vector<Face> out(pool.begin(), pool.end());
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

// Order-preserving dense relabeling of the facet list.
std::vector<std::uint64_t> cache_key(const Complex& c) {
  std::array<int, kMaxVertices> dense{};
  int next = 0;
  for (Vertex v : c.vertex_set()) dense[static_cast<std::size_t>(v)] = next++;
  std::vector<std::uint64_t> key;
  key.reserve(c.facet_count());
  for (Face f : c.facets()) {
    std::uint64_t bits = 0;
    for (Vertex v : f) bits |= std::uint64_t{1} << dense[static_cast<std::size_t>(v)];
    key.push_back(bits);
  }
  std::sort(key.begin(), key.end());
  return key;
}

bool replay(const Complex& c, int k, const DecompositionTree& tree) {
  switch (tree.kind()) {
    case DecompositionTree::Kind::simplex_leaf:
      return c.is_proper() && c.facet_count() == 1;
    case DecompositionTree::Kind::trivial_leaf:
      return !c.is_proper() || dimension(c) == 0;
    case DecompositionTree::Kind::internal: break;
  }
  const Face f = tree.shedding_face();
  if (!c.is_proper() || f.empty() || f.size() > k + 1 || !c.has_face(f)) return false;
  if (!glues(c, f)) return false;
  return replay(deletion(c, f), k, tree.deletion_child()) &&
         replay(link(c, f), k, tree.link_child());
}

// May emit ∅ for an empty-complex link; callers padding with F turn it into F.
std::vector<Face> order_of(const Complex& c, const DecompositionTree& tree) {
  switch (tree.kind()) {
    case DecompositionTree::Kind::simplex_leaf:
      return {c.facets().front()};
    case DecompositionTree::Kind::trivial_leaf:
      if (c.is_empty()) return {Face{}};
      return {c.facets().begin(), c.facets().end()};
    case DecompositionTree::Kind::internal: break;
  }
  const Face f = tree.shedding_face();
  std::vector<Face> out = order_of(deletion(c, f), tree.deletion_child());
  for (Face g : order_of(link(c, f), tree.link_child())) out.push_back(g | f);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

DecompositionTree DecompositionTree::simplex() {
  DecompositionTree t;
  t.kind_ = Kind::simplex_leaf;
  return t;
}

DecompositionTree DecompositionTree::trivial() { return DecompositionTree(); }

DecompositionTree DecompositionTree::internal(Face shedding_face, DecompositionTree deletion_child,
                                              DecompositionTree link_child) {
  DecompositionTree t;
  t.kind_ = Kind::internal;
  t.face_ = shedding_face;
  t.deletion_ = std::make_shared<const DecompositionTree>(std::move(deletion_child));
  t.link_ = std::make_shared<const DecompositionTree>(std::move(link_child));
  return t;
}

std::size_t DecompositionTree::internal_count() const {
  if (kind_ != Kind::internal) return 0;
  return 1 + deletion_->internal_count() + link_->internal_count();
}

int DecompositionTree::max_face_dimension() const {
  if (kind_ != Kind::internal) return -1;
  return std::max({face_.size() - 1, deletion_->max_face_dimension(),
                   link_->max_face_dimension()});
}

// ---------------------------------------------------------------------------

std::size_t Decomposer::KeyHash::operator()(const std::vector<std::uint64_t>& key) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
  for (std::uint64_t x : key) {
    h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Decomposer::Decomposer(int k, SearchOptions options) : k_(k), options_(options) {
  if (k < 0) throw Error(Errc::not_applicable, "k must be non-negative");
}

void Decomposer::start_query() { query_start_ = nodes_; }

bool Decomposer::search(const Complex& c) {
  if (trivially_decomposable(c)) return true;
  if (!strongly_connected(c)) return false;
  auto key = cache_key(c);
  if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second;
  ++nodes_;
  if (options_.node_budget && nodes_ - query_start_ > *options_.node_budget) {
    throw BudgetExceeded{};
  }
  bool result = false;
  for (Face f : candidate_faces(c, k_)) {
    if (!glues(c, f)) continue;
    if (search(deletion(c, f)) && search(link(c, f))) {
      result = true;
      break;
    }
  }
  memo_.emplace(std::move(key), result);
  return result;
}

DecompositionTree Decomposer::build(const Complex& c) {
  if (c.is_proper() && c.facet_count() == 1) return DecompositionTree::simplex();
  if (trivially_decomposable(c)) return DecompositionTree::trivial();
  for (Face f : candidate_faces(c, k_)) {
    if (!glues(c, f)) continue;
    Complex del = deletion(c, f);
    Complex lk = link(c, f);
    if (search(del) && search(lk)) {
      return DecompositionTree::internal(f, build(del), build(lk));
    }
  }
  throw Error(Errc::bad_witness, "witness reconstruction failed");
}

Decision Decomposer::decide(const Complex& c) {
  const Complex target = normalized(c);
  start_query();
  try {
    if (!search(target)) return {Verdict::no, std::nullopt};
    return {Verdict::yes, build(target)};
  } catch (const BudgetExceeded&) {
    return {Verdict::inconclusive, std::nullopt};
  }
}

Verdict Decomposer::verdict(const Complex& c) {
  const Complex target = normalized(c);
  start_query();
  try {
    return search(target) ? Verdict::yes : Verdict::no;
  } catch (const BudgetExceeded&) {
    return Verdict::inconclusive;
  }
}

// ---------------------------------------------------------------------------

bool is_shedding_face(const Complex& c, Face f) {
  require_pure_face(c, f);
  return glues(c, f);
}

bool is_shedding_face_direct(const Complex& c, Face f) {
  require_pure_face(c, f);
  const Complex del = deletion(c, f);
  return !del.is_void() && is_pure(del) && dimension(del) == dimension(c);
}

std::optional<DecompositionTree> is_k_decomposable(const Complex& c, int k) {
  Decomposer decomposer(k);
  return decomposer.decide(c).witness;
}

Decision decide_k_decomposable(const Complex& c, int k, const SearchOptions& options) {
  Decomposer decomposer(k, options);
  return decomposer.decide(c);
}

bool replay_tree(const Complex& c, int k, const DecompositionTree& tree) {
  return replay(normalized(c), k, tree);
}

std::vector<Face> decomposable_order(const Complex& c, int k, const DecompositionTree& tree) {
  const Complex target = normalized(c);
  if (!replay(target, k, tree)) {
    throw Error(Errc::bad_witness, "tree does not certify the complex");
  }
  std::vector<Face> out = order_of(target, tree);
  std::erase_if(out, [](Face f) { return f.empty(); });
  return out;
}

}  // namespace kdec
