#pragma once

// Shared test helpers: digit-literal faces and a naive set-based oracle
// that shares no code with the library's search.

#include <algorithm>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kdec/complex.hpp"

namespace kdec::test {

/// 1234 -> {1,2,3,4}. Only for single-digit labels.
inline Face F(long digits) {
  Face f;
  if (digits == 0) return f;
  while (digits > 0) {
    f = f.with(static_cast<Vertex>(digits % 10));
    digits /= 10;
  }
  return f;
}

inline std::vector<Face> faces(std::initializer_list<long> list) {
  std::vector<Face> out;
  for (long x : list) out.push_back(F(x));
  return out;
}

inline Complex cx(std::initializer_list<long> list) { return Complex::from_facets(faces(list)); }

inline std::set<std::uint64_t> facet_set(const Complex& c) {
  std::set<std::uint64_t> out;
  for (Face f : c.facets()) out.insert(f.bits());
  return out;
}

inline std::set<std::uint64_t> facet_set(const std::vector<Face>& list) {
  std::set<std::uint64_t> out;
  for (Face f : list) out.insert(f.bits());
  return out;
}

// --- naive oracle ----------------------------------------------------------
//
// Complexes are plain sets of facets (sets of ints). Deletion and link are
// computed from the full face list, shedding faces by the definition
// (deletion pure of full dimension), and k-decomposability by exhaustive
// recursion without memoization.

namespace naive {

using Set = std::set<int>;
using Family = std::set<Set>;

inline Set to_set(Face f) {
  Set s;
  for (Vertex v : f) s.insert(v);
  return s;
}

inline Family to_family(const Complex& c) {
  Family out;
  for (Face f : c.facets()) out.insert(to_set(f));
  return out;
}

inline bool subset(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Family maximal(const Family& all) {
  Family out;
  for (const Set& s : all) {
    bool dominated = false;
    for (const Set& t : all) {
      if (t != s && subset(s, t)) dominated = true;
    }
    if (!dominated) out.insert(s);
  }
  return out;
}

inline Family all_faces(const Family& facets) {
  Family out;
  for (const Set& f : facets) {
    std::vector<int> v(f.begin(), f.end());
    for (unsigned mask = 0; mask < (1U << v.size()); ++mask) {
      Set s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (mask & (1U << i)) s.insert(v[i]);
      }
      out.insert(s);
    }
  }
  return out;
}

inline Family deletion(const Family& facets, const Set& f) {
  Family kept;
  for (const Set& g : all_faces(facets)) {
    if (!subset(f, g)) kept.insert(g);
  }
  return maximal(kept);
}

inline Family link(const Family& facets, const Set& f) {
  Family kept;
  for (const Set& g : facets) {
    if (!subset(f, g)) continue;
    Set rest;
    for (int v : g) {
      if (!f.count(v)) rest.insert(v);
    }
    kept.insert(rest);
  }
  return maximal(kept);
}

inline int dim(const Family& facets) {
  int top = -1;
  for (const Set& s : facets) top = std::max(top, static_cast<int>(s.size()) - 1);
  return top;
}

inline bool pure(const Family& facets) {
  for (const Set& s : facets) {
    if (s.size() != facets.begin()->size()) return false;
  }
  return true;
}

inline bool shedding(const Family& facets, const Set& f) {
  const Family del = deletion(facets, f);
  return !del.empty() && pure(del) && dim(del) == dim(facets);
}

inline bool k_decomposable(const Family& facets, int k) {
  if (facets.size() <= 1) return true;  // void, {∅} or a simplex
  if (dim(facets) == 0) return true;
  for (const Set& g : all_faces(facets)) {
    if (g.empty() || static_cast<int>(g.size()) > k + 1) continue;
    if (!shedding(facets, g)) continue;
    if (k_decomposable(deletion(facets, g), k) && k_decomposable(link(facets, g), k)) return true;
  }
  return false;
}

inline bool k_decomposable(const Complex& c, int k) { return k_decomposable(to_family(c), k); }

// Shelling order exists: backtracking over orders with the definition's
// intersection test.
inline bool shell_fits(const std::vector<Set>& placed, const Set& next) {
  const std::size_t ridge = next.size() - 1;
  std::vector<Set> meets;
  for (const Set& p : placed) {
    Set m;
    std::set_intersection(p.begin(), p.end(), next.begin(), next.end(),
                          std::inserter(m, m.begin()));
    meets.push_back(m);
  }
  for (const Set& m : meets) {
    bool covered = false;
    for (const Set& o : meets) {
      if (o.size() == ridge && subset(m, o)) covered = true;
    }
    if (!covered) return false;
  }
  return true;
}

inline bool shellable_from(std::vector<Set>& placed, std::vector<Set>& rest) {
  if (rest.empty()) return true;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (!placed.empty() && !shell_fits(placed, rest[i])) continue;
    Set s = rest[i];
    placed.push_back(s);
    rest.erase(rest.begin() + static_cast<long>(i));
    const bool ok = shellable_from(placed, rest);
    rest.insert(rest.begin() + static_cast<long>(i), s);
    placed.pop_back();
    if (ok) return true;
  }
  return false;
}

inline bool shellable(const Complex& c) {
  const Family fam = to_family(c);
  std::vector<Set> rest(fam.begin(), fam.end());
  std::vector<Set> placed;
  return shellable_from(placed, rest);
}

}  // namespace naive

// --- random instances --------------------------------------------------------

/// Random pure complex: `count` distinct (d+1)-subsets of {0..n-1}.
inline Complex random_pure(std::mt19937_64& rng, int n, int d, int count) {
  std::vector<Face> pool = subsets_of_size(Face::range(0, n - 1), d + 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<std::size_t>(pool.size(), static_cast<std::size_t>(std::max(count, 1))));
  return Complex::from_facets(pool);
}

}  // namespace kdec::test
