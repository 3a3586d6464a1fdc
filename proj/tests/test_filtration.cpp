#include <doctest.h>

#include "hspec/errors.hpp"
#include "hspec/filtration.hpp"
#include "hspec/oracle.hpp"

using namespace hspec;

TEST_CASE("series kinds") {
  for (SeriesKind kind : kAllSeriesKinds) CHECK(parse_series_kind(to_string(kind)) == kind);
  CHECK(first_index(SeriesKind::gamma) == 1);
  CHECK(first_index(SeriesKind::D) == 1);
  CHECK(first_index(SeriesKind::P) == 0);
  CHECK(first_index(SeriesKind::F) == 0);
  CHECK_THROWS_AS(parse_series_kind("Q"), ParameterError);
}

TEST_CASE("series are descending normal chains ending in the trivial group") {
  for (const auto& P : {GroupParams::make(3, 1), GroupParams::make(3, 2), GroupParams::make(5, 1)})
    for (SeriesKind kind : kAllSeriesKinds) {
      const FiltrationSeries s = series(kind, P);
      CHECK(s.terms().front() == NormalSubgroup::whole(P));
      CHECK(s.terms().back().is_trivial());
      for (std::size_t i = 0; i + 1 < s.terms().size(); ++i) {
        CHECK(s.terms()[i].is_normal());
        CHECK(s.terms()[i + 1].is_subgroup_of(s.terms()[i]));
        CHECK_FALSE(s.terms()[i].is_trivial());
      }
      CHECK(s.term(s.first_index() - 1) == NormalSubgroup::whole(P));
      CHECK(s.term(s.last_index() + 3).is_trivial());
    }
}

TEST_CASE("central series properties") {
  const GroupParams P = GroupParams::make(3, 2);
  const NormalSubgroup G = NormalSubgroup::whole(P);
  const FiltrationSeries gamma = series(SeriesKind::gamma, P);
  for (SeriesKind kind : {SeriesKind::gamma, SeriesKind::L, SeriesKind::D}) {
    const FiltrationSeries s = series(kind, P);
    for (int i = 1; i <= s.last_index(); ++i) {
      CHECK(commutator_subgroup(s.term(i), G).is_subgroup_of(s.term(i + 1)));
      // Every N-series sits above the lower central series.
      CHECK(gamma.term(i).is_subgroup_of(s.term(i)));
    }
  }
  // Dimension subgroups: [D_i, D_j] <= D_{i+j} and D_i^p <= D_{ip}.
  const FiltrationSeries D = series(SeriesKind::D, P);
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j)
      CHECK(commutator_subgroup(D.term(i), D.term(j)).is_subgroup_of(D.term(i + j)));
    CHECK(power_subgroup(D.term(i)).is_subgroup_of(D.term(3 * i)));
  }
}

TEST_CASE("every series term equals the brute-force set") {
  const OracleGroup o(GroupParams::make(3, 1));
  for (SeriesKind kind : kAllSeriesKinds) {
    const FiltrationSeries s = series(kind, o.params());
    const auto terms = o.series(kind);
    REQUIRE(static_cast<int>(terms.size()) == s.last_index() - s.first_index() + 1);
    for (std::size_t t = 0; t < terms.size(); ++t)
      CHECK(same_subgroup(o, terms[t], s.term(s.first_index() + static_cast<int>(t))));
  }
}

TEST_CASE("term guard") {
  SeriesOptions opts;
  opts.max_terms = 3;
  CHECK_THROWS_AS(series(SeriesKind::gamma, GroupParams::make(3, 2), opts), BudgetError);
}
