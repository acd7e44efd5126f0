#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace kdec {

/// Dense internal vertex id. Valid ids are 0..kMaxVertices-1.
using Vertex = int;

inline constexpr int kMaxVertices = 64;

/// A finite vertex set stored as a 64-bit mask. Used for faces, facets,
/// ground sets and cone sets alike.
class Face {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

  /// Throws Error(universe_too_large) for ids outside 0..63.
  static Face of(std::initializer_list<Vertex> vertices);
  static Face of(std::span<const Vertex> vertices);
  /// All ids in [first, last].
  static Face range(Vertex first, Vertex last);
  static constexpr Face single(Vertex v) { return Face(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  /// Superset test: every vertex of `other` lies in this face.
  constexpr bool contains(Face other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool disjoint(Face other) const { return (bits_ & other.bits_) == 0; }

  constexpr Vertex min() const { return std::countr_zero(bits_); }
  constexpr Vertex max() const { return 63 - std::countl_zero(bits_); }

  constexpr Face with(Vertex v) const { return Face(bits_ | (std::uint64_t{1} << v)); }
  constexpr Face without(Vertex v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
  /// Set difference.
  constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }
  constexpr Face& operator|=(Face o) {
    bits_ |= o.bits_;
    return *this;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> vertices() const;

  constexpr bool operator==(const Face&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted vertex lists (so 12 < 123 < 124 < 13).
constexpr bool lex_less(Face a, Face b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int p = std::countr_zero(diff);
  const auto above = [p](Face f) { return p < 63 && (f.bits() >> (p + 1)) != 0; };
  if (a.contains(p)) return above(b);
  return !above(a);
}

struct LexLess {
  constexpr bool operator()(Face a, Face b) const { return lex_less(a, b); }
};

/// |a ∩ b| = |a| - 1, for faces of equal size.
constexpr bool adjacent_faces(Face a, Face b) {
  return a.size() == b.size() && (a & b).size() == a.size() - 1;
}

/// All subsets of `universe` of the given size, in lexicographic order.
std::vector<Face> subsets_of_size(Face universe, int size);

}  // namespace kdec

template <>
struct std::hash<kdec::Face> {
  std::size_t operator()(kdec::Face f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits());
  }
};
