#include <doctest.h>

#include "hspec/errors.hpp"
#include "hspec/oracle.hpp"

using namespace hspec;

TEST_CASE("enumeration oracle at p = 3, k = 1") {
  const OracleGroup o(GroupParams::make(3, 1));
  CHECK(o.size() == 2187);
  CHECK(OracleGroup::count(o.generated_by_xy()) == 2187);
  CHECK(o.light_associative());
  CHECK(o.matches_engine_on_generators());
  CHECK(o.series(SeriesKind::gamma).size() == 6);  // class 5
  CHECK(o.pow(o.x(), 3) == o.identity());
  CHECK(o.pow(o.y(), 3) == o.identity());
  for (int g = 0; g < o.size(); g += 97) CHECK(o.mul(g, o.inv(g)) == o.identity());
}

TEST_CASE("oracle size limit") {
  CHECK_THROWS_AS(OracleGroup(GroupParams::make(5, 1)), OracleError);
}
