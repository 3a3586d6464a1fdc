#pragma once

// Report rows and their JSON / CSV renderings. Rendering is deterministic:
// the same report always produces the same bytes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hspec/hausdorff.hpp"

namespace hspec {

inline constexpr const char* kReportSchema = "hspec-report/1";
inline constexpr const char* kFiniteNote =
    "densities are finite-level quotients of G_k, not limits over the tower";

struct CheckRow {
  nlohmann::json index;
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
};

struct CheckResult {
  std::string name;
  std::vector<CheckRow> rows;
  std::optional<std::string> error;
  bool pass() const;
};

struct Report {
  GroupParams params;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool pass() const;
};

std::string to_string(const Rational& q);
// Fixed six-digit rendering, for reports only.
std::string to_decimal(const Rational& q);

nlohmann::json to_json(const Report& r);
// check,index,expected,computed,pass
std::string to_csv(const Report& r);

nlohmann::json to_json(const FiltrationSeries& s);
// kind,p,k,i,top_index,log_order,log_index
std::string to_csv(const FiltrationSeries& s);

nlohmann::json to_json(const DimensionProfile& prof);
// kind,p,k,i,num,den,q,decimal
std::string to_csv(const std::vector<DimensionProfile>& profiles);

nlohmann::json to_json(const DialPlan& plan);

}  // namespace hspec
