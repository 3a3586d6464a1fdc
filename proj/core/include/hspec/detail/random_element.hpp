#pragma once

#include <random>

namespace hspec {

template <typename Rng>
Element random_element(const Subgroup& s, Rng& rng) {
  const GroupParams& P = s.params();
  std::uniform_int_distribution<int> coeff(0, P.p - 1);
  Vector lie(P.lie_dim(), 0);
  for (const auto& b : s.lie().basis()) {
    const int c = coeff(rng);
    if (c == 0) continue;
    for (std::size_t i = 0; i < lie.size(); ++i) lie[i] = mod_p(lie[i] + static_cast<long long>(c) * b[i], P.p);
  }
  const Element h = from_lie(P, lie);
  int a = 0;
  if (s.has_top()) {
    int step = 1;
    for (int i = 0; i < s.top_index(); ++i) step *= P.p;
    std::uniform_int_distribution<int> top(0, P.n / step - 1);
    a = step * top(rng);
  }
  return Element(P, a, h.base(), h.central());
}

}  // namespace hspec
