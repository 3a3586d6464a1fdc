// hspec: verify, series, hdim and dial subcommands.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hspec/errors.hpp"
#include "hspec/runner.hpp"

namespace {

using namespace hspec;

struct Common {
  int p = 3;
  int k = 1;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool allow_large = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--p", c.p, "odd prime")->capture_default_str();
  cmd->add_option("--k", c.k, "x has order p^k")->capture_default_str();
  cmd->add_option("--format", c.format, "json or csv")->capture_default_str();
  cmd->add_option("--seed", c.seed, "seed for sampled power subgroups")->capture_default_str();
  cmd->add_flag("--allow-large", c.allow_large, "run parameters outside the feasibility table");
}

GroupParams checked_params(const Common& c) {
  const GroupParams P = GroupParams::make(c.p, c.k);
  if (!c.allow_large && !allow_large_from_env() && !is_feasible(c.p, c.k))
    throw BudgetError("(p, k) is outside the feasibility table; pass --allow-large");
  return P;
}

SeriesOptions series_options(const Common& c) {
  SeriesOptions opts;
  opts.power.seed = c.seed;
  return opts;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long n = std::stoll(s, &used);
      if (used != s.size()) throw ParameterError("");
      return Rational(n);
    }
    const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    const long long n = std::stoll(a, &used);
    if (used != a.size()) throw ParameterError("");
    const long long d = std::stoll(b, &used);
    if (used != b.size() || d == 0) throw ParameterError("");
    return Rational(n, d);
  } catch (const std::exception&) {
    throw ParameterError("expected a fraction such as 1/2, got '" + s + "'");
  }
}

std::vector<SeriesKind> kinds_from(const std::string& name) {
  if (name == "all") return {std::begin(kAllSeriesKinds), std::end(kAllSeriesKinds)};
  return {parse_series_kind(name)};
}

NormalSubgroup named_subgroup(const std::string& name, const GroupParams& P) {
  if (name == "Z") return center_subgroup(P);
  if (name == "H") return base_subgroup(P);
  if (name == "G") return NormalSubgroup::whole(P);
  if (name == "1") return NormalSubgroup::trivial(P);
  throw ParameterError("unknown subgroup '" + name + "' (Z, H, G or 1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the p-groups G_k = C_{p^k} semidirect a free class-2 exponent-p group"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string verify_format = "json";
  std::vector<std::string> checks{"all"};
  auto* verify = app.add_subcommand("verify", "run verification checks and emit a report");
  verify->add_option("--p", cfg.p, "odd prime")->capture_default_str();
  verify->add_option("--k", cfg.k, "x has order p^k")->capture_default_str();
  verify->add_option("--checks", checks, "comma-separated check names, all, or none")->delimiter(',')->capture_default_str();
  verify->add_option("--format", verify_format, "json or csv")->capture_default_str();
  verify->add_option("--out", cfg.out, "report path (default: stdout)");
  verify->add_option("--seed", cfg.seed, "seed for sampling")->capture_default_str();
  verify->add_option("--budget", cfg.budget_seconds, "wall-clock limit in seconds, 0 for none")
      ->capture_default_str();
  verify->add_flag("--allow-large", cfg.allow_large, "run parameters outside the feasibility table");
  bool list_checks = false;
  verify->add_flag("--list", list_checks, "print the check names and exit");

  Common series_c;
  std::string series_kind = "gamma";
  auto* series_cmd = app.add_subcommand("series", "print a filtration series");
  add_common(series_cmd, series_c);
  series_cmd->add_option("--kind", series_kind, "gamma, L, D, P, Pstar, F or all")->capture_default_str();

  Common hdim_c;
  std::string hdim_kind = "all", hdim_subgroup = "Z";
  auto* hdim = app.add_subcommand("hdim", "finite density profile of a normal subgroup");
  add_common(hdim, hdim_c);
  hdim->add_option("--subgroup", hdim_subgroup, "Z, H, G or 1")->capture_default_str();
  hdim->add_option("--kind", hdim_kind, "series kind or all")->capture_default_str();

  Common dial_c;
  std::string dial_kind = "L", eta_text = "1/2";
  int depth = 0;
  auto* dial = app.add_subcommand("dial", "build a normal subgroup of Z with a target density");
  add_common(dial, dial_c);
  dial->add_option("--eta", eta_text, "target density in [0, 1]")->capture_default_str();
  dial->add_option("--kind", dial_kind, "series kind")->capture_default_str();
  dial->add_option("--depth", depth, "layers to visit, 0 for all")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  try {
    if (*verify) {
      if (list_checks) {
        for (const auto& n : check_names()) std::cout << n << '\n';
        return kPass;
      }
      cfg.checks.clear();
      for (const auto& c : checks)
        if (!c.empty() && c != "none") cfg.checks.push_back(c);
      cfg.format = parse_format(verify_format);
      cfg.allow_large = cfg.allow_large || allow_large_from_env();
      const RunOutcome out = run(cfg);
      if (!out.message.empty()) std::cerr << "hspec: " << out.message << '\n';
      if (cfg.out.empty()) std::cout << out.rendered;
      std::cout.flush();
      int passed = 0;
      for (const auto& c : out.report.checks) {
        std::cerr << (c.pass() ? "PASS " : "FAIL ") << c.name;
        if (c.error) std::cerr << " (" << *c.error << ')';
        std::cerr << '\n';
        passed += c.pass() ? 1 : 0;
      }
      if (!out.report.checks.empty())
        std::cerr << passed << '/' << out.report.checks.size() << " checks passed\n";
      // Workers left behind by a budget timeout must not delay the exit.
      if (out.exit_code == kBudgetExceeded) std::_Exit(kBudgetExceeded);
      return out.exit_code;
    }

    if (*series_cmd) {
      const GroupParams P = checked_params(series_c);
      const Format f = parse_format(series_c.format);
      nlohmann::json all = nlohmann::json::array();
      for (SeriesKind kind : kinds_from(series_kind)) {
        const FiltrationSeries s = series(kind, P, series_options(series_c));
        if (f == Format::csv)
          std::cout << to_csv(s);
        else
          all.push_back(to_json(s));
      }
      if (f == Format::json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
      return kPass;
    }

    if (*hdim) {
      const GroupParams P = checked_params(hdim_c);
      const Format f = parse_format(hdim_c.format);
      const NormalSubgroup H = named_subgroup(hdim_subgroup, P);
      std::vector<DimensionProfile> profiles;
      for (SeriesKind kind : kinds_from(hdim_kind))
        profiles.push_back(profile(H, series(kind, P, series_options(hdim_c))));
      if (f == Format::csv) {
        std::cout << to_csv(profiles);
      } else {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& prof : profiles) all.push_back(to_json(prof));
        std::cout << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
      }
      return kPass;
    }

    if (*dial) {
      const GroupParams P = checked_params(dial_c);
      const Rational eta = parse_rational(eta_text);
      const FiltrationSeries s = series(parse_series_kind(dial_kind), P, series_options(dial_c));
      const DialPlan plan = dial_density(eta, s, depth);
      std::cout << to_json(plan).dump(2) << '\n';
      return kPass;
    }
  } catch (const BudgetError& e) {
    std::cerr << "hspec: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hspec: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "hspec: " << e.what() << '\n';
    return kFailure;
  }
  return kPass;
}
