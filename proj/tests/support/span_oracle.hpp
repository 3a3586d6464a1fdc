#pragma once

// Brute-force subspaces of F_p^n as explicit sets of vectors.

#include <set>
#include <vector>

#include "hspec/linalg.hpp"

namespace hspec::testing {

using VectorSet = std::set<Vector>;

inline VectorSet span_set(const std::vector<Vector>& gens, int p, std::size_t n) {
  VectorSet out{Vector(n, 0)};
  for (const auto& g : gens) {
    VectorSet next;
    for (const auto& v : out)
      for (int c = 0; c < p; ++c) {
        Vector w = v;
        for (std::size_t i = 0; i < n; ++i) w[i] = (w[i] + c * g[i]) % p;
        next.insert(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

inline VectorSet set_of(const Subspace& s) {
  return span_set(s.basis(), s.prime(), s.ambient_dim());
}

inline VectorSet set_intersection(const VectorSet& a, const VectorSet& b) {
  VectorSet out;
  for (const auto& v : a)
    if (b.count(v)) out.insert(v);
  return out;
}

}  // namespace hspec::testing
