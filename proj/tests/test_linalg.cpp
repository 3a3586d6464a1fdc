#include <doctest.h>

#include <random>

#include "hspec/errors.hpp"
#include "hspec/linalg.hpp"
#include "support/span_oracle.hpp"

using namespace hspec;
using hspec::testing::set_intersection;
using hspec::testing::set_of;
using hspec::testing::span_set;

namespace {

std::vector<Vector> random_rows(std::mt19937_64& rng, int p, std::size_t n, int count) {
  std::uniform_int_distribution<int> d(0, p - 1);
  std::vector<Vector> rows(count, Vector(n));
  for (auto& r : rows)
    for (auto& x : r) x = d(rng);
  return rows;
}

}  // namespace

TEST_CASE("residue helpers") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(7));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK(mod_p(-1, 5) == 4);
  for (int a = 1; a < 7; ++a) CHECK(a * inverse_mod_p(a, 7) % 7 == 1);
  CHECK_THROWS_AS(Subspace(4, 3), ParameterError);
}

TEST_CASE("rref is canonical and spans the same set") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = trial % 2 ? 3 : 5;
    const std::size_t n = 4;
    const auto rows = random_rows(rng, p, n, 1 + trial % 4);
    const Subspace s = rref(rows, p, n);
    CHECK(set_of(s) == span_set(rows, p, n));

    // Any other generating set of the same span gives the same basis.
    std::vector<Vector> mixed = rows;
    for (std::size_t i = 1; i < mixed.size(); ++i)
      for (std::size_t c = 0; c < n; ++c) mixed[i][c] = (mixed[i][c] + 2 * mixed[i - 1][c]) % p;
    std::reverse(mixed.begin(), mixed.end());
    if (set_of(rref(mixed, p, n)) == set_of(s)) CHECK(rref(mixed, p, n) == s);

    for (std::size_t i = 0; i < s.dim(); ++i) CHECK(s.basis()[i][s.pivots()[i]] == 1);
  }
}

TEST_CASE("sum and intersection agree with explicit sets") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const int p = 3;
    const std::size_t n = 5;
    const Subspace a = rref(random_rows(rng, p, n, trial % 4), p, n);
    const Subspace b = rref(random_rows(rng, p, n, 1 + trial % 3), p, n);
    auto both = a.basis();
    both.insert(both.end(), b.basis().begin(), b.basis().end());
    CHECK(set_of(sum(a, b)) == span_set(both, p, n));
    CHECK(set_of(intersect(a, b)) == set_intersection(set_of(a), set_of(b)));
    CHECK(a.is_subspace_of(sum(a, b)));
    CHECK(intersect(a, b).is_subspace_of(b));
    CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("membership, reduction and quotients") {
  const int p = 5;
  const Subspace s = rref(std::vector<Vector>{{1, 2, 0, 0}, {0, 0, 1, 4}}, p, 4);
  CHECK(s.contains({2, 4, 3, 2}));
  CHECK_FALSE(s.contains({0, 1, 0, 0}));
  CHECK(is_zero(s.reduce({3, 1, 2, 3})));
  CHECK_THROWS_AS(s.reduce({1, 2, 3}), DimensionMismatch);

  const Subspace t = rref(std::vector<Vector>{{1, 2, 1, 4}}, p, 4);
  CHECK(quotient_logorder(s, t) == 1);
  CHECK_THROWS_AS(quotient_logorder(t, s), ContainmentError);
  const auto comp = complement_basis(s, t);
  REQUIRE(comp.size() == 1);
  CHECK(sum(t, rref(comp, p, 4)) == s);
  CHECK(extend(t, comp) == s);
  CHECK(Subspace::full(p, 4).dim() == 4);
}
