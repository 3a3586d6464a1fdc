#include "hspec/hausdorff.hpp"

#include <algorithm>

#include "hspec/errors.hpp"

namespace hspec {

namespace {

Element central_element(const GroupParams& P, const Vector& m) {
  return Element(P, 0, Vector(P.n, 0), m);
}

NormalSubgroup closure_of(const Element& z) {
  return normal_closure(std::span<const Element>(&z, 1), z.params());
}

// Log order of S ∩ Z.
int central_dim(const Subgroup& s) { return static_cast<int>(s.central_part().dim()); }

}  // namespace

Rational DimensionProfile::final_quotient() const {
  if (levels.empty()) throw ParameterError("profile has no proper levels");
  return levels.back().q();
}

DimensionProfile profile(const NormalSubgroup& H, const FiltrationSeries& S) {
  if (!(H.params() == S.params())) throw ParameterError("subgroup and series belong to different groups");
  const GroupParams& P = S.params();
  DimensionProfile out{S.kind(), P, H, {}};
  for (int i = S.first_index(); i <= S.last_index(); ++i) {
    const NormalSubgroup& Si = S.term(i);
    if (Si.log_index() == 0) continue;
    const int num = product(H, Si).log_order() - Si.log_order();
    out.levels.push_back({i, num, Si.log_index()});
  }
  return out;
}

std::vector<GrowthRow> closure_growth_bound(const Element& z, const FiltrationSeries& S,
                                            const FiltrationSeries& gamma) {
  if (!z.in_center()) throw ParameterError("closure_growth_bound needs a central element");
  if (gamma.kind() != SeriesKind::gamma || !(gamma.params() == S.params()))
    throw ParameterError("expected the lower central series of the same group");
  const Subspace zc = closure_of(z).central_part();

  // γ_j ∩ Z for j = 1 .. last (trivial at last).
  std::vector<Subspace> gz;
  for (int j = 1; j <= gamma.last_index(); ++j) gz.push_back(gamma.term(j).central_part());

  std::vector<GrowthRow> rows;
  for (int i = S.first_index(); i <= S.last_index(); ++i) {
    const Subspace Zi = S.term(i).central_part();
    const int growth = static_cast<int>(sum(zc, Zi).dim() - Zi.dim());
    int n = 0;
    while (n + 1 <= static_cast<int>(gz.size()) && !gz[n].is_subspace_of(Zi)) ++n;
    // Z / Z_i is elementary abelian, so its exponent is at most p.
    rows.push_back({i, growth, 1, n});
  }
  return rows;
}

DialPlan dial_density(const Rational& eta, const FiltrationSeries& S, int depth) {
  if (eta < Rational(0) || eta > Rational(1)) throw ParameterError("eta must lie in [0, 1]");
  const GroupParams& P = S.params();
  const int D = P.zdim;
  // Budget: nearest integer to eta * D, halves rounded up.
  const Rational scaled = eta * Rational(D);
  const int budget = static_cast<int>((2 * scaled.numerator() + scaled.denominator()) /
                                      (2 * scaled.denominator()));

  DialPlan plan{eta, S.kind(), {}, NormalSubgroup::trivial(P), Rational(0), 0};
  Subspace h(P.p, P.zdim);
  Subspace prev = Subspace::full(P.p, P.zdim);
  int visited = 0;
  for (int i = S.first_index(); i <= S.last_index(); ++i) {
    const Subspace Zi = S.term(i).central_part();
    if (Zi.dim() == prev.dim()) {
      prev = Zi;
      continue;
    }
    if (depth > 0 && visited == depth) break;
    ++visited;
    DialLayer layer{i, static_cast<int>(prev.dim() - Zi.dim()), {}, Rational(0)};
    plan.max_layer_rank = std::max(plan.max_layer_rank, layer.rank);
    for (const Vector& cand : complement_basis(prev, Zi)) {
      if (h.contains(cand)) continue;
      const Subspace grown = sum(h, closure_of(central_element(P, cand)).central_part());
      if (static_cast<int>(grown.dim()) > budget) continue;
      h = grown;
      layer.chosen.push_back(cand);
    }
    const int num = static_cast<int>(sum(h, Zi).dim() - Zi.dim());
    layer.running = Rational(num, D - static_cast<int>(Zi.dim()));
    plan.layers.push_back(std::move(layer));
    prev = Zi;
  }

  std::vector<Element> gens;
  for (const auto& layer : plan.layers)
    for (const auto& v : layer.chosen) gens.push_back(central_element(P, v));
  plan.subgroup = normal_closure(gens, P);
  if (!plan.subgroup.is_normal() || plan.subgroup.central_part().dim() != h.dim())
    throw ContainmentError("dial_density closure check failed");
  plan.achieved = Rational(static_cast<std::int64_t>(h.dim()), D);
  return plan;
}

bool is_feasible(int p, int k) {
  if (k < 1) return false;
  if (p == 3) return k <= 2;
  if (p == 5 || p == 7) return k <= 1;
  return false;
}

std::vector<TrendRow> z_density_trend(SeriesKind kind, int p, const std::vector<int>& ks,
                                      const SeriesOptions& opts, bool allow_large) {
  std::vector<TrendRow> rows;
  for (int k : ks) {
    if (!allow_large && !is_feasible(p, k))
      throw BudgetError("parameters outside the feasible set; pass the override to run them");
    const GroupParams P = GroupParams::make(p, k);
    const FiltrationSeries S = series(kind, P, opts);
    const FiltrationSeries gamma = kind == SeriesKind::gamma ? S : series(SeriesKind::gamma, P, opts);
    const NormalSubgroup Z = center_subgroup(P);
    const int deep = 2 * P.n - 1;
    const int idx = P.zdim - central_dim(gamma.term(deep));
    rows.push_back({k, profile(Z, S).final_quotient(), deep,
                    idx == 0 ? Rational(0) : Rational(2 * deep, idx)});
  }
  return rows;
}

}  // namespace hspec
