#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "hspec/errors.hpp"
#include "hspec/group.hpp"
#include "hspec/oracle.hpp"
#include "hspec/subgroup.hpp"
#include "support/tensor_model.hpp"

using namespace hspec;
using hspec::testing::TensorModel;

namespace {

Element random_elem(const GroupParams& P, std::mt19937_64& rng) {
  return random_element(Subgroup::whole(P), rng);
}

const GroupParams kSmall[] = {GroupParams::make(3, 1), GroupParams::make(3, 2), GroupParams::make(5, 1)};

}  // namespace

TEST_CASE("parameters") {
  const GroupParams P = GroupParams::make(3, 2);
  CHECK(P.n == 9);
  CHECK(P.zdim == 36);
  CHECK(P.log_order() == 47);
  CHECK(GroupParams::make(5, 1).log_order() == 16);
  CHECK_THROWS_AS(GroupParams::make(2, 1), ParameterError);
  CHECK_THROWS_AS(GroupParams::make(3, 0), ParameterError);
  // Pairs are numbered consecutively.
  int expect = 0;
  for (int i = 0; i < P.n; ++i)
    for (int j = i + 1; j < P.n; ++j) CHECK(P.pair_index(i, j) == static_cast<std::size_t>(expect++));
}

TEST_CASE("multiplication matches the tensor model") {
  std::mt19937_64 rng(1);
  for (const auto& P : kSmall) {
    const TensorModel T(P);
    for (int t = 0; t < 300; ++t) {
      const Element g = random_elem(P, rng), h = random_elem(P, rng);
      CHECK(T.image(g * h) == T.mul(T.image(g), T.image(h)));
      CHECK(T.image(inverse(g)) == T.inv(T.image(g)));
      // The normal form is faithful: distinct elements have distinct images.
      if (!(g == h)) CHECK_FALSE(T.image(g) == T.image(h));
    }
    CHECK(T.image(x_gen(P)) == T.x());
    CHECK(T.image(y_gen(P)) == T.b(0));
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(2);
  for (const auto& P : {GroupParams::make(3, 2), GroupParams::make(5, 1)})
    for (int t = 0; t < 10000; ++t) {
      const Element a = random_elem(P, rng), b = random_elem(P, rng), c = random_elem(P, rng);
      REQUIRE((a * b) * c == a * (b * c));
    }
}

TEST_CASE("basic relations") {
  std::mt19937_64 rng(3);
  for (const auto& P : kSmall) {
    const Element x = x_gen(P);
    CHECK(power(x, P.n).is_identity());
    CHECK_FALSE(power(x, P.n / P.p).is_identity());
    for (int i = 0; i < P.n; ++i) {
      CHECK(conjugate(base_generator(P, i), x) == base_generator(P, (i + 1) % P.n));
      for (int j = i + 1; j < P.n; ++j)
        CHECK(commutator(base_generator(P, i), base_generator(P, j)) == central_generator(P, i, j));
    }
    for (int t = 0; t < 50; ++t) {
      const Element g = random_elem(P, rng), h = random_elem(P, rng);
      CHECK((g * inverse(g)).is_identity());
      CHECK(power(g, -3) == inverse(power(g, 3)));
      // x-conjugation has order p^k.
      CHECK(conjugate_by_x_power(g, P.n) == g);
      CHECK(conjugate(g, power(x, 5)) == conjugate_by_x_power(g, 5));
      // H has exponent p and [H, H] lies in the centre.
      const Element u(P, 0, g.base(), g.central()), w(P, 0, h.base(), h.central());
      CHECK(power(u, P.p).is_identity());
      CHECK(commutator(u, w).in_center());
      CHECK(commutator(commutator(u, w), u).is_identity());
    }
  }
}

TEST_CASE("Lazard coordinates") {
  std::mt19937_64 rng(4);
  const GroupParams P = GroupParams::make(3, 2);
  for (int t = 0; t < 200; ++t) {
    const Element g = random_elem(P, rng), h = random_elem(P, rng);
    const Element u(P, 0, g.base(), g.central()), w(P, 0, h.base(), h.central());
    CHECK(from_lie(P, to_lie(u)) == u);
    // Group commutators of H are Lie brackets.
    CHECK(to_lie(commutator(u, w)) == lie_bracket(P, to_lie(u), to_lie(w)));
    CHECK(to_lie(conjugate_by_x_power(u, t)) == lie_shift(P, to_lie(u), t));
  }
}

TEST_CASE("named elements") {
  const GroupParams P = GroupParams::make(3, 1);
  const Element x = x_gen(P), y = y_gen(P);
  CHECK(c(1, P) == y);
  CHECK(c(2, P) == commutator(y, x));
  CHECK(c(3, P) == commutator(commutator(y, x), x));
  CHECK(c2(2, 1, P) == commutator(c(2, P), y));
  CHECK(c2(2, 2, P) == commutator(c2(2, 1, P), x));
  CHECK(zgen(2, 1, P) == commutator(c(2, P), c(1, P)));
  CHECK(zgen(1, 2, P).is_identity());
  CHECK(zgen(2, 2, P).is_identity());
  CHECK(z_pair(1, 2, P) == commutator(c(1, P), c(2, P)));
  CHECK(z_pair(0, 2, P).is_identity());
  CHECK_THROWS_AS(zgen(0, 1, P), ParameterError);
  NamedElements named(P);
  for (int i = 1; i < 9; ++i) CHECK(named.c(i) == c(i, P));
  // c_i lies in γ_i, which is trivial past the class.
  CHECK_FALSE(c(3, P).is_identity());
  CHECK(c(6, P).is_identity());
}

TEST_CASE("words") {
  const GroupParams P = GroupParams::make(3, 1);
  CHECK(evaluate_word(Word::parse(""), P).is_identity());
  const Element x = x_gen(P), y = y_gen(P);
  CHECK(evaluate_word(Word::parse("Y X y x"), P) == commutator(y, x));
  CHECK(evaluate_word(Word::parse("y^-1 x^-1 y x"), P) == c(2, P));
  CHECK(evaluate_word(Word::parse("xy") + Word::parse("Y"), P) == x);
  CHECK_THROWS_AS(Word::parse("xz"), ParameterError);

  // Random words against path products in the enumeration oracle.
  const OracleGroup o(P);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> letter(0, 3), len(0, 20);
  const std::string alphabet = "xXyY";
  for (int t = 0; t < 200; ++t) {
    std::string text;
    int g = o.identity();
    for (int l = len(rng); l > 0; --l) {
      const int c = letter(rng);
      text += alphabet[c];
      const int s = c < 2 ? o.x() : o.y();
      g = o.mul(g, c % 2 ? o.inv(s) : s);
    }
    CHECK(evaluate_word(Word::parse(text), P) == o.to_element(g));
  }
}

TEST_CASE("json round trip and validation") {
  std::mt19937_64 rng(6);
  const GroupParams P = GroupParams::make(5, 1);
  for (int t = 0; t < 20; ++t) {
    const Element g = random_elem(P, rng);
    CHECK(element_from_json(P, to_json(g)) == g);
  }
  nlohmann::json bad = to_json(x_gen(P));
  bad["a"] = 7;
  CHECK_THROWS_AS(element_from_json(P, bad), ParameterError);
  CHECK_THROWS_AS(Element(P, 0, Vector(3, 0), Vector(P.zdim, 0)), DimensionMismatch);
}
