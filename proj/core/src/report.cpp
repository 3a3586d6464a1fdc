#include "hspec/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hspec {

using nlohmann::json;

namespace {

json params_json(const GroupParams& P) { return {{"p", P.p}, {"k", P.k}}; }

std::string csv_cell(const json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool CheckResult::pass() const {
  return !error && std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f",
                static_cast<double>(q.numerator()) / static_cast<double>(q.denominator()));
  return buf;
}

json to_json(const Report& r) {
  json checks = json::array();
  int passed = 0;
  for (const auto& c : r.checks) {
    json rows = json::array();
    for (const auto& row : c.rows)
      rows.push_back({{"check", c.name},
                      {"params", params_json(r.params)},
                      {"index", row.index},
                      {"expected", row.expected},
                      {"computed", row.computed},
                      {"pass", row.pass}});
    json entry = {{"check", c.name}, {"pass", c.pass()}, {"rows", std::move(rows)}};
    if (c.error) entry["error"] = *c.error;
    checks.push_back(std::move(entry));
    passed += c.pass() ? 1 : 0;
  }
  return {{"schema", kReportSchema},
          {"note", kFiniteNote},
          {"params", {{"p", r.params.p}, {"k", r.params.k}, {"seed", r.seed}}},
          {"checks", std::move(checks)},
          {"summary",
           {{"passed", passed},
            {"failed", static_cast<int>(r.checks.size()) - passed},
            {"pass", r.pass()}}}};
}

std::string to_csv(const Report& r) {
  std::ostringstream out;
  out << "# " << kReportSchema << " p=" << r.params.p << " k=" << r.params.k << " seed=" << r.seed
      << "\n";
  out << "check,index,expected,computed,pass\n";
  for (const auto& c : r.checks) {
    if (c.error) out << c.name << ",error," << csv_cell(*c.error) << ",,false\n";
    for (const auto& row : c.rows)
      out << c.name << ',' << csv_cell(row.index) << ',' << csv_cell(row.expected) << ','
          << csv_cell(row.computed) << ',' << (row.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

json to_json(const FiltrationSeries& s) {
  json terms = json::array();
  for (int i = s.first_index(); i <= s.last_index(); ++i) {
    const NormalSubgroup& t = s.term(i);
    terms.push_back({{"i", i},
                     {"top_index", t.top_index()},
                     {"log_order", t.log_order()},
                     {"log_index", t.log_index()},
                     {"base_rank", t.base_image().dim()},
                     {"central_rank", t.central_part().dim()}});
  }
  return {{"schema", kReportSchema},
          {"kind", std::string(to_string(s.kind()))},
          {"params", params_json(s.params())},
          {"terms", std::move(terms)}};
}

std::string to_csv(const FiltrationSeries& s) {
  std::ostringstream out;
  out << "kind,p,k,i,top_index,log_order,log_index\n";
  for (int i = s.first_index(); i <= s.last_index(); ++i) {
    const NormalSubgroup& t = s.term(i);
    out << to_string(s.kind()) << ',' << s.params().p << ',' << s.params().k << ',' << i << ','
        << t.top_index() << ',' << t.log_order() << ',' << t.log_index() << '\n';
  }
  return out.str();
}

json to_json(const DimensionProfile& prof) {
  json levels = json::array();
  for (const auto& l : prof.levels)
    levels.push_back({{"i", l.i}, {"num", l.num}, {"den", l.den}, {"q", to_string(l.q())},
                      {"decimal", to_decimal(l.q())}});
  return {{"schema", kReportSchema},
          {"note", kFiniteNote},
          {"kind", std::string(to_string(prof.kind))},
          {"params", params_json(prof.params)},
          {"subgroup_log_order", prof.subgroup.log_order()},
          {"levels", std::move(levels)}};
}

std::string to_csv(const std::vector<DimensionProfile>& profiles) {
  std::ostringstream out;
  out << "kind,p,k,i,num,den,q,decimal\n";
  for (const auto& prof : profiles)
    for (const auto& l : prof.levels)
      out << to_string(prof.kind) << ',' << prof.params.p << ',' << prof.params.k << ',' << l.i
          << ',' << l.num << ',' << l.den << ',' << to_string(l.q()) << ','
          << to_decimal(l.q()) << '\n';
  return out.str();
}

json to_json(const DialPlan& plan) {
  json layers = json::array();
  for (const auto& l : plan.layers)
    layers.push_back({{"i", l.i}, {"rank", l.rank}, {"chosen", l.chosen},
                      {"running", to_string(l.running)}});
  return {{"schema", kReportSchema},
          {"note", kFiniteNote},
          {"construction", "finite greedy dial over the layers of Z along the series"},
          {"kind", std::string(to_string(plan.kind))},
          {"params", params_json(plan.subgroup.params())},
          {"target", to_string(plan.target)},
          {"achieved", to_string(plan.achieved)},
          {"achieved_decimal", to_decimal(plan.achieved)},
          {"max_layer_rank", plan.max_layer_rank},
          {"layers", std::move(layers)}};
}

}  // namespace hspec
