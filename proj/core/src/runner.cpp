#include "hspec/runner.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "hspec/errors.hpp"
#include "hspec/identities.hpp"
#include "hspec/oracle.hpp"
#include "hspec/structure.hpp"

namespace hspec {

using nlohmann::json;

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool oracle_feasible(const GroupParams& P) {
  long long order = 1;
  for (int t = 0; t < P.log_order(); ++t)
    if ((order *= P.p) > 4096) return false;
  return true;
}

// Shared, lazily built inputs. Each piece is built once, whichever check asks first.
class Context {
 public:
  Context(const GroupParams& P, std::uint64_t seed) : P_(P), seed_(seed) {
    opts_.power.seed = seed;
  }

  const GroupParams& params() const { return P_; }
  std::uint64_t seed() const { return seed_; }
  const SeriesOptions& options() const { return opts_; }

  const FiltrationSeries& get(SeriesKind kind) {
    const auto idx = static_cast<std::size_t>(kind);
    std::call_once(series_once_[idx], [&] { series_[idx].emplace(series(kind, P_, opts_)); });
    return *series_[idx];
  }

  const OracleGroup& oracle() {
    std::call_once(oracle_once_, [&] { oracle_.emplace(P_); });
    return *oracle_;
  }

  // Independent stream per check so results do not depend on scheduling.
  std::mt19937_64 rng(std::uint64_t salt) const {
    std::seed_seq seq{seed_, salt, static_cast<std::uint64_t>(P_.p), static_cast<std::uint64_t>(P_.k)};
    return std::mt19937_64(seq);
  }

 private:
  GroupParams P_;
  std::uint64_t seed_;
  SeriesOptions opts_;
  std::once_flag series_once_[6];
  std::optional<FiltrationSeries> series_[6];
  std::once_flag oracle_once_;
  std::optional<OracleGroup> oracle_;
};

CheckRow row(json index, json expected, json computed, bool pass) {
  return {std::move(index), std::move(expected), std::move(computed), pass};
}

CheckRow equal_row(json index, const json& expected, const json& computed) {
  return row(std::move(index), expected, computed, expected == computed);
}

using CheckFn = std::function<std::vector<CheckRow>(Context&)>;

std::vector<CheckRow> check_group_order(Context& ctx) {
  const GroupParams& P = ctx.params();
  std::vector<CheckRow> rows;
  const Element gens[] = {x_gen(P), y_gen(P)};
  rows.push_back(equal_row("log_order", P.log_order(), subgroup_generated(gens, P).log_order()));
  if (oracle_feasible(P)) {
    const OracleGroup& o = ctx.oracle();
    rows.push_back(equal_row("elements", ipow(P.p, P.log_order()),
                             OracleGroup::count(o.generated_by_xy())));
    rows.push_back(equal_row("associative", true, o.light_associative()));
    rows.push_back(equal_row("engine-agrees", true, o.matches_engine_on_generators()));
  }
  return rows;
}

std::vector<CheckRow> check_gamma_ranks(Context& ctx) {
  const GroupParams& P = ctx.params();
  const FiltrationSeries& gamma = ctx.get(SeriesKind::gamma);
  std::vector<CheckRow> rows;
  int total = 0;
  for (const auto& r : gamma_rank_report(gamma)) {
    rows.push_back(equal_row(r.i, r.expected, r.rank));
    total += r.rank;
  }
  rows.push_back(equal_row("rank-sum", P.log_order(), total));
  rows.push_back(equal_row("class", 2 * P.n - 1, gamma.last_index() - 1));
  return rows;
}

std::vector<CheckRow> check_wreath_quotient(Context& ctx) {
  const GroupParams& P = ctx.params();
  const std::vector<int> ranks = wreath_quotient_ranks(ctx.get(SeriesKind::gamma));
  std::vector<CheckRow> rows;
  const int len = std::max<int>(P.n, static_cast<int>(ranks.size()));
  for (int i = 1; i <= len; ++i) {
    const int expected = i == 1 ? P.k + 1 : (i <= P.n ? 1 : 0);
    const int computed = i <= static_cast<int>(ranks.size()) ? ranks[i - 1] : 0;
    rows.push_back(equal_row(i, expected, computed));
  }
  rows.push_back(equal_row("class", P.n, static_cast<int>(ranks.size())));
  return rows;
}

std::vector<CheckRow> check_z_index(Context& ctx) {
  const GroupParams& P = ctx.params();
  const ZIndexReport rep = z_index_report(ctx.get(SeriesKind::gamma));
  std::vector<CheckRow> rows;
  // The formula describes the infinite group; G_k follows it while the
  // lower central ranks of G_k and of its limit agree, i.e. for i <= p^k + 1.
  const int validated = P.n + 1;
  for (const auto& r : rep.rows)
    if (r.i <= validated) rows.push_back(equal_row(r.i, r.formula, r.computed));
  rows.push_back(row("agreement-range", json::array({2, validated}),
                     json::array({2, rep.formula_agrees_to}), rep.formula_agrees_to >= validated));
  return rows;
}

std::vector<CheckRow> check_gamma_cap_z(Context& ctx) {
  const GroupParams& P = ctx.params();
  const FiltrationSeries& gamma = ctx.get(SeriesKind::gamma);
  NamedElements named(P);
  std::vector<CheckRow> rows;
  for (int i = 2; i <= gamma.last_index(); ++i) {
    const Subspace cap = gamma.term(i).central_part();
    const Subspace span = gamma_cap_Z(i, named).central_part();
    rows.push_back(row(i, span.dim(), cap.dim(), cap == span));
  }
  return rows;
}

std::vector<CheckRow> closed_form_check(const std::vector<ClosedFormRow>& cf, const FiltrationSeries& s,
                                        int expected_length) {
  std::vector<CheckRow> rows;
  for (const auto& r : cf) rows.push_back(row(r.i, json{{"top_index", r.exponent}}, r.equal, r.equal));
  rows.push_back(equal_row("length", expected_length, s.last_index() - s.first_index()));
  return rows;
}

std::vector<CheckRow> check_lower_p(Context& ctx) {
  const FiltrationSeries& L = ctx.get(SeriesKind::L);
  return closed_form_check(lower_p_closed_form(L, ctx.get(SeriesKind::gamma)), L,
                           2 * ctx.params().n - 1);
}

std::vector<CheckRow> check_dimension(Context& ctx) {
  const FiltrationSeries& D = ctx.get(SeriesKind::D);
  return closed_form_check(dimension_closed_form(D, ctx.get(SeriesKind::gamma)), D,
                           2 * ctx.params().n - 1);
}

std::vector<CheckRow> check_com_ids(Context& ctx) {
  const GroupParams& P = ctx.params();
  auto rng = ctx.rng(1);
  const Subgroup G = Subgroup::whole(P);
  constexpr int kPairs = 200;
  std::vector<CheckRow> rows;
  for (int r : {1, 2}) {
    int power_ok = 0, comm_ok = 0;
    for (int t = 0; t < kPairs; ++t) {
      const Element a = random_element(G, rng);
      const Element b = random_element(G, rng);
      const ComIdsResult res = verify_com_ids(a, b, r);
      power_ok += res.power_congruence ? 1 : 0;
      comm_ok += res.commutator_congruence ? 1 : 0;
    }
    rows.push_back(equal_row(json{{"r", r}, {"congruence", "power"}}, kPairs, power_ok));
    rows.push_back(equal_row(json{{"r", r}, {"congruence", "commutator"}}, kPairs, comm_ok));
  }
  return rows;
}

std::vector<CheckRow> check_double_prod(Context& ctx) {
  const GroupParams& P = ctx.params();
  NamedElements named(P);
  std::vector<CheckRow> rows;
  for (int r = 0; r <= 6; ++r) {
    int ok = 0;
    for (int i = 1; i <= P.n; ++i)
      for (int j = 1; j <= P.n; ++j) ok += verify_double_prod(i, j, r, named) ? 1 : 0;
    rows.push_back(equal_row(json{{"r", r}, {"i_max", P.n}, {"j_max", P.n}}, P.n * P.n, ok));
  }
  return rows;
}

std::vector<CheckRow> check_pk_commutator(Context& ctx) {
  const GroupParams& P = ctx.params();
  NamedElements named(P);
  std::vector<CheckRow> rows;
  const int top = 2 * P.n - 1;
  for (int kk = 0; kk < P.k; ++kk) {
    int ok = 0;
    for (int i = 1; i <= top; ++i)
      for (int j = 1; j <= top; ++j) ok += verify_pk_commutator(i, j, kk, named) ? 1 : 0;
    rows.push_back(equal_row(json{{"kk", kk}, {"i_max", top}, {"j_max", top}}, top * top, ok));
  }
  return rows;
}

std::vector<CheckRow> check_power_sandwich(Context& ctx) {
  std::vector<CheckRow> rows;
  for (const auto& r : power_sandwich_report(ctx.get(SeriesKind::gamma), ctx.get(SeriesKind::P),
                                             ctx.get(SeriesKind::Pstar), 2)) {
    rows.push_back(equal_row(json{{"i", r.i}, {"inclusion", "gamma_2p^i <= pi_i"}}, true, r.gamma_in_power));
    rows.push_back(equal_row(json{{"i", r.i}, {"inclusion", "pi_i <= pi*_i"}}, true, r.power_in_iterated));
    rows.push_back(equal_row(json{{"i", r.i}, {"inclusion", "pi*_i <= <x^p^i> gamma_p^i"}}, true,
                             r.iterated_in_bound));
  }
  return rows;
}

std::vector<CheckRow> check_frattini(Context& ctx) {
  std::vector<CheckRow> rows;
  for (const auto& r : frattini_sandwich_report(ctx.get(SeriesKind::F))) {
    rows.push_back(equal_row(json{{"i", r.i}, {"bound", "lower"}, {"threshold", r.lower_threshold},
                                  {"in_class_range", r.in_class_range}},
                             true, r.lower_holds));
    rows.push_back(equal_row(json{{"i", r.i}, {"bound", "upper"}, {"threshold", r.upper_threshold},
                                  {"in_class_range", r.in_class_range}},
                             true, r.upper_holds));
    if (r.i == 1)
      rows.push_back(equal_row(json{{"i", 1}, {"bound", "both equal"}}, true,
                               r.lower_equal && r.upper_equal));
  }
  return rows;
}

std::vector<CheckRow> check_closure_growth(Context& ctx) {
  const GroupParams& P = ctx.params();
  auto rng = ctx.rng(2);
  std::uniform_int_distribution<int> digit(0, P.p - 1);
  constexpr int kSamples = 100;
  const FiltrationSeries& gamma = ctx.get(SeriesKind::gamma);
  std::vector<Element> zs;
  for (int t = 0; t < kSamples; ++t) {
    Vector m(P.zdim);
    for (auto& d : m) d = digit(rng);
    zs.emplace_back(P, 0, Vector(P.n, 0), m);
  }
  std::vector<CheckRow> rows;
  for (SeriesKind kind : kFiltrationKinds) {
    const FiltrationSeries& S = ctx.get(kind);
    int ok = 0;
    for (const auto& z : zs) {
      const auto table = closure_growth_bound(z, S, gamma);
      ok += std::all_of(table.begin(), table.end(), [](const GrowthRow& g) { return g.holds(); }) ? 1 : 0;
    }
    rows.push_back(equal_row(json{{"kind", to_string(kind)}, {"samples", kSamples}}, kSamples, ok));
  }
  // The bound for one fixed generator, with the levels where it is attained.
  if (P.n >= 2) {
    const auto table = closure_growth_bound(zgen(2, 1, P), ctx.get(SeriesKind::L), gamma);
    json tight = json::array();
    bool holds = true;
    for (const auto& g : table) {
      holds = holds && g.holds();
      if (g.tight()) tight.push_back(g.i);
    }
    rows.push_back(row(json{{"kind", "L"}, {"z", "z_{2,1}"}}, "growth <= n_i at every level",
                       json{{"holds", holds}, {"tight_levels", tight}}, holds));
  }
  return rows;
}

std::vector<CheckRow> check_z_density(Context& ctx) {
  const GroupParams& P = ctx.params();
  const Rational expected(P.zdim, P.log_order());
  const NormalSubgroup Z = center_subgroup(P);
  std::vector<CheckRow> rows;
  for (SeriesKind kind : kAllSeriesKinds) {
    const Rational q = profile(Z, ctx.get(kind)).final_quotient();
    rows.push_back(equal_row(json{{"kind", to_string(kind)}}, to_string(expected), to_string(q)));
  }
  if (P.k >= 2 && is_feasible(P.p, P.k - 1)) {
    const auto trend = z_density_trend(SeriesKind::gamma, P.p, {P.k - 1, P.k}, ctx.options());
    rows.push_back(row("increasing-in-k", "q(k-1) < q(k)",
                       json::array({to_string(trend[0].final_quotient), to_string(trend[1].final_quotient)}),
                       trend[0].final_quotient < trend[1].final_quotient));
    rows.push_back(row("deep-ratio-decreasing", "ratio(k-1) > ratio(k)",
                       json::array({to_string(trend[0].deep_ratio), to_string(trend[1].deep_ratio)}),
                       trend[0].deep_ratio > trend[1].deep_ratio));
  }
  return rows;
}

std::vector<CheckRow> check_dial_density(Context& ctx) {
  const GroupParams& P = ctx.params();
  const FiltrationSeries& L = ctx.get(SeriesKind::L);
  const Rational tol(2, P.zdim);
  std::vector<CheckRow> rows;
  for (int j = 0; j <= 20; ++j) {
    const Rational eta(j, 20);
    const DialPlan plan = dial_density(eta, L);
    const Rational err = plan.achieved > eta ? plan.achieved - eta : eta - plan.achieved;
    rows.push_back(row(json{{"eta", to_string(eta)}, {"tolerance", to_string(tol)}}, to_string(eta),
                       to_string(plan.achieved), err <= tol));
  }
  return rows;
}

std::vector<CheckRow> check_oracle(Context& ctx) {
  const GroupParams& P = ctx.params();
  const OracleGroup& o = ctx.oracle();
  std::vector<CheckRow> rows;
  for (SeriesKind kind : kAllSeriesKinds) {
    const FiltrationSeries& s = ctx.get(kind);
    const auto terms = o.series(kind);
    const int first = first_index(kind);
    rows.push_back(equal_row(json{{"kind", to_string(kind)}, {"i", "last"}},
                             first + static_cast<int>(terms.size()) - 1, s.last_index()));
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const int i = first + static_cast<int>(t);
      const bool same = same_subgroup(o, terms[t], s.term(i));
      rows.push_back(row(json{{"kind", to_string(kind)}, {"i", i}}, OracleGroup::count(terms[t]),
                         same, same));
    }
  }
  // The sampling route for power subgroups, with exhaustive enumeration disabled.
  PowerOptions sampled = ctx.options().power;
  sampled.exact_limit = 0;
  for (int e = 1; e < P.k + 2; ++e) {
    const NormalSubgroup pw = power_subgroup(NormalSubgroup::whole(P), e, sampled);
    const bool same = same_subgroup(o, o.power(o.whole(), e), pw);
    rows.push_back(row(json{{"power", e}, {"route", "sampled"}}, true, same, same));
  }
  return rows;
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"group-order", check_group_order},
      {"gamma-ranks", check_gamma_ranks},
      {"wreath-quotient", check_wreath_quotient},
      {"z-index", check_z_index},
      {"gamma-cap-z", check_gamma_cap_z},
      {"lower-p-series", check_lower_p},
      {"dimension-series", check_dimension},
      {"power-commutator-congruence", check_com_ids},
      {"z-double-product", check_double_prod},
      {"z-pk-commutator", check_pk_commutator},
      {"power-sandwich", check_power_sandwich},
      {"frattini-sandwich", check_frattini},
      {"closure-growth", check_closure_growth},
      {"z-density", check_z_density},
      {"dial-density", check_dial_density},
      {"oracle-equivalence", check_oracle},
  };
  return table;
}

std::string render(const Report& r, Format f) {
  return f == Format::json ? to_json(r).dump(2) + "\n" : to_csv(r);
}

// Results written by worker threads. Held by shared_ptr so that workers left
// running after a budget timeout never touch freed memory.
struct Pool {
  std::mutex mu;
  std::condition_variable cv;
  std::vector<std::optional<CheckResult>> results;
  int remaining = 0;
};

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw ParameterError("unknown format '" + name + "' (json or csv)");
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<std::string> applicable_checks(int p, int k) {
  const GroupParams P = GroupParams::make(p, k);
  std::vector<std::string> out;
  for (const auto& name : check_names())
    if (name != "oracle-equivalence" || oracle_feasible(P)) out.push_back(name);
  return out;
}

bool allow_large_from_env() {
  const char* v = std::getenv("HSPEC_ALLOW_LARGE");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  GroupParams P;
  std::vector<std::string> names;
  try {
    if (config.budget_seconds < 0) throw ParameterError("budget must be non-negative");
    P = GroupParams::make(config.p, config.k);
    for (const auto& name : config.checks) {
      if (name == "all") {
        for (const auto& n : applicable_checks(config.p, config.k)) names.push_back(n);
        continue;
      }
      if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
        throw ParameterError("unknown check '" + name + "'");
      if (name == "oracle-equivalence" && !oracle_feasible(P))
        throw ParameterError("oracle-equivalence needs a group of at most 4096 elements");
      names.push_back(name);
    }
  } catch (const std::exception& e) {
    outcome.exit_code = kConfigError;
    outcome.message = e.what();
    return outcome;
  }
  if (!config.allow_large && !is_feasible(config.p, config.k)) {
    outcome.exit_code = kBudgetExceeded;
    outcome.message = "(p, k) = (" + std::to_string(config.p) + ", " + std::to_string(config.k) +
                      ") is outside the feasibility table; set --allow-large or HSPEC_ALLOW_LARGE=1";
    return outcome;
  }

  // Report order follows the registry, with duplicates dropped.
  std::vector<std::string> ordered;
  for (const auto& n : check_names())
    if (std::find(names.begin(), names.end(), n) != names.end()) ordered.push_back(n);

  outcome.report.params = P;
  outcome.report.seed = config.seed;
  auto ctx = std::make_shared<Context>(P, config.seed);
  auto pool = std::make_shared<Pool>();
  pool->results.resize(ordered.size());
  pool->remaining = static_cast<int>(ordered.size());

  std::map<std::string, CheckFn> fns(registry().begin(), registry().end());
  for (std::size_t t = 0; t < ordered.size(); ++t) {
    std::thread([ctx, pool, t, name = ordered[t], fn = fns.at(ordered[t])] {
      CheckResult res{name, {}, std::nullopt};
      try {
        res.rows = fn(*ctx);
      } catch (const std::exception& e) {
        res.error = e.what();
      }
      std::lock_guard lock(pool->mu);
      pool->results[t] = std::move(res);
      if (--pool->remaining == 0) pool->cv.notify_all();
    }).detach();
  }

  std::unique_lock lock(pool->mu);
  const auto done = [&] { return pool->remaining == 0; };
  if (config.budget_seconds > 0) {
    const auto limit = std::chrono::duration<double>(config.budget_seconds);
    if (!pool->cv.wait_for(lock, limit, done)) {
      outcome.exit_code = kBudgetExceeded;
      outcome.message = "time budget of " + std::to_string(config.budget_seconds) + " s exceeded";
      for (std::size_t t = 0; t < ordered.size(); ++t)
        outcome.report.checks.push_back(pool->results[t]
                                            ? *pool->results[t]
                                            : CheckResult{ordered[t], {}, "not finished within budget"});
      outcome.rendered = render(outcome.report, config.format);
      return outcome;
    }
  } else {
    pool->cv.wait(lock, done);
  }
  for (auto& r : pool->results) outcome.report.checks.push_back(std::move(*r));
  lock.unlock();

  outcome.rendered = render(outcome.report, config.format);
  if (!config.out.empty()) {
    std::ofstream f(config.out, std::ios::binary);
    if (!f) {
      outcome.exit_code = kConfigError;
      outcome.message = "cannot write " + config.out;
      return outcome;
    }
    f << outcome.rendered;
  }
  outcome.exit_code = outcome.report.pass() ? kPass : kFailure;
  return outcome;
}

}  // namespace hspec
