#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "hspec/identities.hpp"
#include "hspec/oracle.hpp"

using namespace hspec;

namespace {

// Normal closure of every bracket arrangement in {u, v} of weight >= w with
// v occurring at least twice, enumerated up to weight limit.
OracleGroup::Set brute_force_k(const OracleGroup& o, int u, int v, int w, int limit) {
  // values[weight] = set of (element, min(2, v count))
  std::vector<std::set<std::pair<int, int>>> values(limit + 1);
  values[1] = {{u, 0}, {v, 1}};
  for (int weight = 2; weight <= limit; ++weight)
    for (int i = 1; i < weight; ++i)
      for (const auto& [a, ca] : values[i])
        for (const auto& [b, cb] : values[weight - i])
          values[weight].insert({o.comm(a, b), std::min(2, ca + cb)});
  std::vector<int> gens;
  for (int weight = w; weight <= limit; ++weight)
    for (const auto& [g, c] : values[weight])
      if (c >= 2) gens.push_back(g);
  return o.normal_closure(gens);
}

}  // namespace

TEST_CASE("weight closure equals the brute-force normal closure") {
  const OracleGroup o(GroupParams::make(3, 1));
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> pick(0, o.size() - 1);
  // The class is 5, so brackets of weight above 6 are trivial.
  for (int t = 0; t < 30; ++t) {
    const int u = t == 0 ? o.x() : pick(rng);
    const int v = t == 0 ? o.y() : pick(rng);
    for (int w = 2; w <= 6; ++w)
      CHECK(same_subgroup(o, brute_force_k(o, u, v, w, 6),
                          weight_closure(o.to_element(u), o.to_element(v), w)));
  }
}

TEST_CASE("power and commutator congruences") {
  const GroupParams P = GroupParams::make(3, 1);
  const Element x = x_gen(P), y = y_gen(P);
  // (xy)^3 against x^3 y^3 [y, x, x] modulo K(x, y).
  const Element lhs = power(x * y, 3);
  const Element rhs = power(x, 3) * power(y, 3) * iterated_commutator(y, x, 2);
  CHECK(weight_closure(x, y, 3).contains(inverse(lhs) * rhs));
  CHECK(verify_com_ids(x, y, 1).holds());

  std::mt19937_64 rng(4);
  for (const auto& Q : {GroupParams::make(3, 2), GroupParams::make(5, 1)}) {
    const Subgroup G = Subgroup::whole(Q);
    for (int t = 0; t < 40; ++t) {
      const Element a = random_element(G, rng), b = random_element(G, rng);
      CHECK(verify_com_ids(a, b, 0).holds());
      CHECK(verify_com_ids(a, b, 1).holds());
    }
  }
}

TEST_CASE("double products of z") {
  const GroupParams P = GroupParams::make(3, 2);
  NamedElements named(P);
  const Element x = x_gen(P);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      // r = 0 and r = 1 written out.
      CHECK(verify_double_prod(i, j, 0, named));
      const Element one = commutator(named.z_pair(i, j), x);
      CHECK(one == named.z_pair(i + 1, j) * named.z_pair(i, j + 1) * named.z_pair(i + 1, j + 1));
      CHECK(verify_double_prod(i, j, 1, named));
    }
  CHECK(verify_double_prod(2, 1, 5, P));
  CHECK(verify_pk_commutator(2, 1, 1, P));
  CHECK(verify_pk_commutator(3, 5, 0, P));
}
