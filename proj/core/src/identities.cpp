#include "hspec/identities.hpp"

#include <map>
#include <set>
#include <utility>

#include "hspec/errors.hpp"

namespace hspec {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct ChainState {
  Element value;
  int v_count;  // capped at 2
};

}  // namespace

NormalSubgroup weight_closure(const Element& u, const Element& v, int min_weight) {
  const GroupParams& P = u.params();
  std::vector<Element> gens;

  // Base images of uncovered chains (weight >= 2), by (weight, v_count).
  std::map<std::pair<int, int>, std::vector<Vector>> base_images;

  std::vector<ChainState> level;
  level.push_back({u, 0});
  level.push_back({v, 1});
  for (int weight = 1; !level.empty(); ++weight) {
    std::set<std::pair<Element, int>> seen;
    std::vector<ChainState> next;
    for (const auto& state : level) {
      for (int letter = 0; letter < 2; ++letter) {
        const int vc = std::min(2, state.v_count + letter);
        Element value = commutator(state.value, letter == 0 ? u : v);
        if (value.is_identity()) continue;
        if (!seen.insert({value, vc}).second) continue;
        const int w = weight + 1;
        if (w >= min_weight && vc >= 2) {
          // A generator; its extensions lie in its normal closure.
          gens.push_back(std::move(value));
          continue;
        }
        next.push_back({std::move(value), vc});
      }
    }
    for (const auto& state : next) {
      const Element h(P, 0, state.value.base(), Vector(static_cast<std::size_t>(P.zdim), 0));
      if (!is_zero(state.value.base()))
        base_images[{weight + 1, state.v_count}].push_back(to_lie(h));
    }
    level = std::move(next);
  }

  // [A, B] for uncovered chains A, B of weight >= 2.
  std::vector<std::pair<std::pair<int, int>, Subspace>> spans;
  for (const auto& [key, rows] : base_images) spans.emplace_back(key, rref(rows, P.p, P.lie_dim()));
  std::vector<Vector> central;
  for (std::size_t a = 0; a < spans.size(); ++a) {
    for (std::size_t b = a; b < spans.size(); ++b) {
      const auto& [ka, sa] = spans[a];
      const auto& [kb, sb] = spans[b];
      if (ka.first + kb.first < min_weight || ka.second + kb.second < 2) continue;
      for (const auto& x : sa.basis())
        for (const auto& y : sb.basis()) {
          Vector br = lie_bracket(P, x, y);
          if (!is_zero(br)) central.push_back(std::move(br));
        }
    }
  }
  const Subspace central_span = rref(central, P.p, P.lie_dim());
  for (const auto& row : central_span.basis()) gens.push_back(from_lie(P, row));

  return normal_closure(gens, P);
}

ComIdsResult verify_com_ids(const Element& a, const Element& b, int r) {
  if (!(a.params() == b.params())) throw ParameterError("elements from different groups");
  if (r < 0) throw ParameterError("r must be non-negative");
  ComIdsResult result;
  if (r == 0) {
    result.power_congruence = true;
    result.commutator_congruence = true;
    return result;
  }
  const GroupParams& P = a.params();
  long long q = 1;
  for (int i = 0; i < r; ++i) q *= P.p;
  const int tail = static_cast<int>(std::min<long long>(q - 1, 1 << 20));
  const int weight = static_cast<int>(std::min<long long>(q, 1 << 20));

  {
    const Element lhs = power(multiply(a, b), q);
    const Element rhs = multiply(multiply(power(a, q), power(b, q)), iterated_commutator(b, a, tail));
    const NormalSubgroup K = weight_closure(a, b, weight);
    result.power_congruence = K.contains(multiply(inverse(lhs), rhs));
  }
  {
    const Element ab = commutator(a, b);
    const Element lhs = commutator(power(a, q), b);
    const Element rhs = iterated_commutator(ab, a, tail);
    const NormalSubgroup K = weight_closure(a, ab, weight);
    result.commutator_congruence = K.contains(multiply(inverse(lhs), rhs));
  }
  return result;
}

bool verify_double_prod(int i, int j, int r, NamedElements& named) {
  if (i < 1 || j < 1 || r < 0) throw ParameterError("double product needs i, j >= 1 and r >= 0");
  const GroupParams& P = named.params();
  const Element lhs = iterated_commutator(named.z_pair(i, j), x_gen(P), r);
  Element rhs = identity(P);
  for (int s = 0; s <= r; ++s)
    for (int t = 0; t <= s; ++t) {
      const int e = mod_p(binomial(r, s) % P.p * (binomial(s, t) % P.p), P.p);
      if (e == 0) continue;
      rhs = multiply(rhs, power(named.z_pair(i + r - t, j + r - s + t), e));
    }
  return lhs == rhs;
}

bool verify_double_prod(int i, int j, int r, const GroupParams& P) {
  NamedElements named(P);
  return verify_double_prod(i, j, r, named);
}

bool verify_pk_commutator(int i, int j, int kk, NamedElements& named) {
  if (i < 1 || j < 1 || kk < 0) throw ParameterError("p^k commutator needs i, j >= 1 and k >= 0");
  const GroupParams& P = named.params();
  long long q = 1;
  for (int t = 0; t < kk; ++t) q *= P.p;
  if (q > (1 << 20)) throw ParameterError("p^k shift too large");
  const int shift = static_cast<int>(q);
  const Element lhs = commutator(named.z_pair(i, j), x_power(P, q));
  const Element rhs = multiply(multiply(named.z_pair(i + shift, j), named.z_pair(i, j + shift)),
                               named.z_pair(i + shift, j + shift));
  return lhs == rhs;
}

bool verify_pk_commutator(int i, int j, int kk, const GroupParams& P) {
  NamedElements named(P);
  return verify_pk_commutator(i, j, kk, named);
}

}  // namespace hspec
