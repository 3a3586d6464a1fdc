#include <doctest.h>

#include <map>
#include <random>

#include "hspec/errors.hpp"
#include "hspec/oracle.hpp"
#include "hspec/subgroup.hpp"

using namespace hspec;

namespace {

const OracleGroup& oracle31() {
  static const OracleGroup o(GroupParams::make(3, 1));
  return o;
}

OracleGroup::Set set_and(const OracleGroup::Set& a, const OracleGroup::Set& b) {
  OracleGroup::Set out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

}  // namespace

TEST_CASE("standard subgroups") {
  for (const auto& P : {GroupParams::make(3, 1), GroupParams::make(3, 2), GroupParams::make(5, 1)}) {
    const NormalSubgroup H = base_subgroup(P), Z = center_subgroup(P);
    CHECK(H.log_order() == P.n + P.zdim);
    CHECK(Z.log_order() == P.zdim);
    CHECK_FALSE(H.has_top());
    CHECK(Z.is_subgroup_of(H));
    CHECK(H.is_normal());
    CHECK(NormalSubgroup::whole(P).log_order() == P.log_order());
    CHECK(NormalSubgroup::trivial(P).is_trivial());
    for (const auto& g : Z.generators()) CHECK(g.in_center());
    const Element gens[] = {x_gen(P), y_gen(P)};
    CHECK(subgroup_generated(gens, P) == Subgroup::whole(P));
    // <x> is a complement to H but not normal.
    const Element x = x_gen(P);
    const Subgroup X = subgroup_generated(std::span<const Element>(&x, 1), P);
    CHECK(X.log_order() == P.k);
    CHECK_FALSE(X.is_normal());
    CHECK_THROWS_AS(NormalSubgroup{X}, ParameterError);
  }
}

TEST_CASE("subgroups that are not split are rejected") {
  const GroupParams P = GroupParams::make(3, 1);
  const Element xy = x_gen(P) * y_gen(P);
  CHECK_THROWS_AS(subgroup_generated(std::span<const Element>(&xy, 1), P), SplitFormError);
  // The normal closure of x y has index p and misses x.
  CHECK_THROWS_AS(normal_closure(std::span<const Element>(&xy, 1), P), SplitFormError);
  const OracleGroup& o = oracle31();
  CHECK(OracleGroup::count(o.normal_closure({o.mul(o.x(), o.y())})) == 729);
  // Pure generators always close up.
  const Element pure[] = {x_gen(P), y_gen(P)};
  CHECK(normal_closure(pure, P) == Subgroup::whole(P));
}

TEST_CASE("validated constructor rejects non-subgroups") {
  const GroupParams P = GroupParams::make(3, 1);
  // span of b_0 and b_1 is not bracket closed without [b_0, b_1].
  Vector b0(P.lie_dim(), 0), b1(P.lie_dim(), 0);
  b0[0] = 1;
  b1[1] = 1;
  CHECK_THROWS_AS(Subgroup(P, P.k, rref(std::vector<Vector>{b0, b1}, P.p, P.lie_dim())), ParameterError);
  CHECK_NOTHROW(Subgroup(P, P.k, rref(std::vector<Vector>{b0}, P.p, P.lie_dim())));
  // x normalises nothing smaller than its orbit.
  CHECK_THROWS_AS(Subgroup(P, 0, rref(std::vector<Vector>{b0}, P.p, P.lie_dim())), ParameterError);
}

TEST_CASE("base image and central part do not determine a normal subgroup") {
  const GroupParams P = GroupParams::make(3, 1);
  std::map<std::pair<std::vector<Vector>, std::vector<Vector>>, std::vector<Subgroup>> by_data;
  bool found = false;
  for (int code = 0; code < 27; ++code) {
    Vector m{code % 3, code / 3 % 3, code / 9};
    const Element g(P, 0, Vector{1, 1, 1}, m);
    const NormalSubgroup N = normal_closure(std::span<const Element>(&g, 1), P);
    auto& bucket = by_data[{N.base_image().basis(), N.central_part().basis()}];
    for (const auto& other : bucket) found = found || !(other == N);
    bucket.push_back(N);
  }
  CHECK(found);
}

TEST_CASE("products, intersections and commutators match the oracle") {
  const OracleGroup& o = oracle31();
  const GroupParams& P = o.params();
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> pick(0, o.size() - 1);
  // Split each random element x^a h into its pure parts x^a and h.
  auto pure_parts = [&](int g) {
    const int a = o.to_element(g).top();
    const int top = o.pow(o.x(), a);
    return std::vector<int>{top, o.mul(o.inv(top), g)};
  };
  auto engine_closure = [&](const std::vector<int>& gens) {
    std::vector<Element> es;
    for (int g : gens) es.push_back(o.to_element(g));
    return normal_closure(es, P);
  };
  for (int t = 0; t < 25; ++t) {
    const auto g = pure_parts(pick(rng));
    const auto h = t % 2 ? std::vector<int>{pure_parts(pick(rng))[1]} : pure_parts(pick(rng));
    const auto A = o.normal_closure(g);
    const auto B = o.normal_closure(h);
    const NormalSubgroup NA = engine_closure(g);
    const NormalSubgroup NB = engine_closure(h);
    CHECK(same_subgroup(o, A, NA));
    CHECK(same_subgroup(o, o.product(A, B), product(NA, NB)));
    CHECK(same_subgroup(o, set_and(A, B), intersect(NA, NB)));
    CHECK(same_subgroup(o, o.commutator(A, B), commutator_subgroup(NA, NB)));
    CHECK(NA.is_subgroup_of(product(NA, NB)));
    CHECK(intersect(NA, NB).is_subgroup_of(NB));
  }
}

TEST_CASE("element enumeration") {
  const GroupParams P = GroupParams::make(3, 1);
  CHECK(enumerate_elements(Subgroup::whole(P)).size() == 2187);
  const auto Z = enumerate_elements(center_subgroup(P));
  CHECK(Z.size() == 27);
  for (const auto& z : Z) CHECK(z.in_center());
  std::mt19937_64 rng(3);
  const NormalSubgroup H = base_subgroup(GroupParams::make(3, 2));
  for (int t = 0; t < 50; ++t) CHECK(H.contains(random_element(H, rng)));
}

TEST_CASE("sampled power subgroups agree with exhaustive ones") {
  const OracleGroup& o = oracle31();
  const GroupParams& P = o.params();
  PowerOptions sampled;
  sampled.exact_limit = 0;
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL})
    for (int e = 0; e <= 2; ++e) {
      sampled.seed = seed;
      const NormalSubgroup G = NormalSubgroup::whole(P);
      const NormalSubgroup exact = power_subgroup(G, e);
      CHECK(power_subgroup(G, e, sampled) == exact);
      CHECK(same_subgroup(o, o.power(o.whole(), e), exact));
    }
  // At (3, 2) the sampled result does not depend on the seed or on how long
  // stability must persist.
  const GroupParams Q = GroupParams::make(3, 2);
  const NormalSubgroup G = NormalSubgroup::whole(Q);
  for (int e = 1; e <= 2; ++e) {
    const NormalSubgroup ref = power_subgroup(G, e);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      PowerOptions opts;
      opts.seed = seed;
      opts.confirm_rounds = 8;
      CHECK(power_subgroup(G, e, opts) == ref);
    }
  }
  CHECK(power_subgroup(G, 3).is_trivial());
  CHECK_THROWS_AS(power_subgroup(G, -1), ParameterError);
}

TEST_CASE("x powers and tops") {
  const GroupParams P = GroupParams::make(3, 2);
  CHECK(x_pow_p(P, 0) == x_gen(P));
  CHECK(x_pow_p(P, 1) == power(x_gen(P), 3));
  CHECK(x_pow_p(P, 2).is_identity());
  const Subgroup s = with_top(1, center_subgroup(P));
  CHECK(s.top_index() == 1);
  CHECK(s.log_order() == 1 + P.zdim);
  CHECK(with_top(5, center_subgroup(P)) == static_cast<const Subgroup&>(center_subgroup(P)));
}
