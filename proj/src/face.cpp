#include "kdec/face.hpp"

#include <string>

#include "kdec/error.hpp"

namespace kdec {

namespace {
std::uint64_t bit_for(Vertex v) {
  if (v < 0 || v >= kMaxVertices) {
    throw Error(Errc::universe_too_large,
                "vertex id " + std::to_string(v) + " outside 0.." +
                    std::to_string(kMaxVertices - 1));
  }
  return std::uint64_t{1} << v;
}

void collect_subsets(std::span<const Vertex> pool, std::size_t from, int remaining,
                     std::uint64_t acc, std::vector<Face>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= pool.size(); ++i) {
    collect_subsets(pool, i + 1, remaining - 1, acc | (std::uint64_t{1} << pool[i]), out);
  }
}
}  // namespace

Face Face::of(std::initializer_list<Vertex> vertices) {
  return of(std::span<const Vertex>(vertices.begin(), vertices.size()));
}

Face Face::of(std::span<const Vertex> vertices) {
  std::uint64_t bits = 0;
  for (Vertex v : vertices) bits |= bit_for(v);
  return Face(bits);
}

Face Face::range(Vertex first, Vertex last) {
  std::uint64_t bits = 0;
  for (Vertex v = first; v <= last; ++v) bits |= bit_for(v);
  return Face(bits);
}

std::vector<Vertex> Face::vertices() const { return {begin(), end()}; }

std::vector<Face> subsets_of_size(Face universe, int size) {
  std::vector<Face> out;
  if (size < 0 || size > universe.size()) return out;
  const std::vector<Vertex> pool = universe.vertices();
  collect_subsets(pool, 0, size, 0, out);
  return out;
}

}  // namespace kdec
