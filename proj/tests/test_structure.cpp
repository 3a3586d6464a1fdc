#include <doctest.h>

#include "hspec/errors.hpp"
#include "hspec/oracle.hpp"
#include "hspec/structure.hpp"

using namespace hspec;

namespace {

// Generators of γ_i modulo γ_{i+1}, written with c_i and c_{i,j}.
std::vector<Element> layer_generators(int i, const GroupParams& P) {
  const int n = P.n;
  std::vector<Element> out;
  if (i <= n) {
    out.push_back(c(i, P));
    for (int a = 2; a <= i - 1; a += 2) out.push_back(c2(a, i - a, P));
  } else {
    const int start = (i % 2 == 0) ? i - n + 1 : i - n;
    for (int a = start; a <= n - 1; a += 2) out.push_back(c2(a, i - a, P));
  }
  return out;
}

}  // namespace

TEST_CASE("lower central ranks") {
  const int sums[] = {7, 47, 16};
  int idx = 0;
  for (const auto& P : {GroupParams::make(3, 1), GroupParams::make(3, 2), GroupParams::make(5, 1)}) {
    const FiltrationSeries gamma = series(SeriesKind::gamma, P);
    int total = 0;
    for (const auto& row : gamma_rank_report(gamma)) {
      CHECK(row.pass());
      total += row.rank;
    }
    CHECK(total == sums[idx++]);
    CHECK(gamma.last_index() - 1 == 2 * P.n - 1);
  }
  const GroupParams P = GroupParams::make(3, 1);
  const std::vector<int> ranks{2, 1, 2, 1, 1, 0};
  for (int i = 1; i <= 6; ++i) CHECK(expected_gamma_rank(i, P) == ranks[i - 1]);
}

TEST_CASE("named generators of the lower central layers") {
  for (const auto& P : {GroupParams::make(3, 1), GroupParams::make(3, 2), GroupParams::make(5, 1)}) {
    const FiltrationSeries gamma = series(SeriesKind::gamma, P);
    for (int i = 2; i <= 2 * P.n - 1; ++i) {
      std::vector<Element> gens = layer_generators(i, P);
      const int listed = static_cast<int>(gens.size());
      for (const auto& g : gens) CHECK(gamma.term(i).contains(g));
      const auto below = gamma.term(i + 1).generators();
      gens.insert(gens.end(), below.begin(), below.end());
      const Subgroup s = subgroup_generated(gens, P);
      CHECK(s == static_cast<const Subgroup&>(gamma.term(i)));
      CHECK(s.log_order() - gamma.term(i + 1).log_order() == listed);
    }
  }
}

TEST_CASE("quotient by the centre") {
  for (const auto& P : {GroupParams::make(3, 1), GroupParams::make(3, 2)}) {
    std::vector<int> expected(P.n, 1);
    expected[0] = P.k + 1;
    CHECK(wreath_quotient_ranks(series(SeriesKind::gamma, P)) == expected);
  }
}

TEST_CASE("lower central terms meet the centre in z spans") {
  const GroupParams P = GroupParams::make(3, 2);
  const FiltrationSeries gamma = series(SeriesKind::gamma, P);
  for (int i = 2; i <= gamma.last_index(); ++i)
    CHECK(gamma_cap_Z(i, P).central_part() == gamma.term(i).central_part());
  CHECK_THROWS_AS(gamma_cap_Z(1, P), ParameterError);

  // At (3, 1) against sets: γ_i ∩ C_G(H).
  const OracleGroup o(GroupParams::make(3, 1));
  OracleGroup::Set centraliser(o.size(), false);
  const auto H = o.normal_closure({o.y()});
  for (int g = 0; g < o.size(); ++g) {
    bool central = true;
    for (int h = 0; h < o.size() && central; ++h)
      if (H[h] && o.mul(g, h) != o.mul(h, g)) central = false;
    centraliser[g] = central;
  }
  CHECK(OracleGroup::count(centraliser) == 27);
  const auto terms = o.series(SeriesKind::gamma);
  for (int i = 2; i <= static_cast<int>(terms.size()); ++i) {
    OracleGroup::Set cap(o.size());
    for (int g = 0; g < o.size(); ++g) cap[g] = terms[i - 1][g] && centraliser[g];
    CHECK(same_subgroup(o, cap, gamma_cap_Z(i, o.params())));
  }
}

TEST_CASE("index of the lower central terms in the centre") {
  CHECK(z_index_closed_form(3) == 0);
  CHECK(z_index_closed_form(5) == 2);
  CHECK(z_index_closed_form(10) == 16);
  const ZIndexReport rep = z_index_report(series(SeriesKind::gamma, GroupParams::make(3, 2)));
  for (const auto& row : rep.rows) {
    CHECK(row.span_matches());
    if (row.i <= 10) CHECK(row.formula_matches());
  }
  CHECK(rep.rows[3].i == 5);
  CHECK(rep.rows[3].computed == 2);
  CHECK(rep.rows[8].computed == 16);
  CHECK(rep.formula_agrees_to >= 10);
}

TEST_CASE("closed forms of the lower p-series and the dimension series") {
  for (const auto& P : {GroupParams::make(3, 1), GroupParams::make(3, 2)}) {
    const FiltrationSeries gamma = series(SeriesKind::gamma, P);
    for (const auto& row : lower_p_closed_form(series(SeriesKind::L, P), gamma)) CHECK(row.equal);
    for (const auto& row : dimension_closed_form(series(SeriesKind::D, P), gamma)) CHECK(row.equal);
  }
  CHECK(ceil_log(1, 3) == 0);
  CHECK(ceil_log(3, 3) == 1);
  CHECK(ceil_log(4, 3) == 2);
  CHECK(repunit(1, 3) == 1);
  CHECK(repunit(2, 3) == 4);
  CHECK(repunit(3, 5) == 31);
}

TEST_CASE("power series sandwich") {
  const GroupParams P = GroupParams::make(3, 2);
  const auto rows = power_sandwich_report(series(SeriesKind::gamma, P), series(SeriesKind::P, P),
                                          series(SeriesKind::Pstar, P), 2);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(r.holds());
}

TEST_CASE("Frattini series sandwich") {
  for (const auto& P : {GroupParams::make(3, 1), GroupParams::make(3, 2)}) {
    const auto rows = frattini_sandwich_report(series(SeriesKind::F, P));
    REQUIRE(!rows.empty());
    for (const auto& r : rows) {
      CHECK(r.lower_holds);
      CHECK(r.upper_holds);
    }
    CHECK(rows[0].lower_equal);
    CHECK(rows[0].upper_equal);
  }
  const auto rows = frattini_sandwich_report(series(SeriesKind::F, GroupParams::make(3, 2)));
  CHECK(rows[1].lower_threshold == 6);
  CHECK(rows[1].upper_threshold == 4);
  CHECK(rows[1].in_class_range);
}
