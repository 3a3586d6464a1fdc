#include "hspec/structure.hpp"

#include <algorithm>

#include "hspec/errors.hpp"

namespace hspec {

namespace {

long long ipow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// c_j for j >= from, stopping at the first trivial one.
std::vector<Element> c_tail(NamedElements& named, int from) {
  std::vector<Element> out;
  const int guard = 4 * named.params().log_order() + 8;
  for (int j = std::max(from, 1); j < from + guard; ++j) {
    const Element& cj = named.c(j);
    if (cj.is_identity()) break;
    out.push_back(cj);
  }
  return out;
}

int trailing_trim(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return static_cast<int>(v.size());
}

}  // namespace

int ceil_log(int i, int p) {
  if (i < 1) throw ParameterError("ceil_log needs i >= 1");
  int l = 0;
  long long q = 1;
  while (q < i) {
    q *= p;
    ++l;
  }
  return l;
}

long long repunit(int i, int p) { return (ipow(p, i) - 1) / (p - 1); }

int expected_gamma_rank(int i, const GroupParams& P) {
  const int n = P.n;
  if (i < 1) throw ParameterError("gamma ranks start at i = 1");
  if (i == 1) return P.k + 1;
  if (i <= n) return (i + 1) / 2;
  if (i < 2 * n) return (2 * n - i + 1) / 2;
  return 0;
}

std::vector<RankRow> gamma_rank_report(const FiltrationSeries& gamma) {
  if (gamma.kind() != SeriesKind::gamma) throw ParameterError("expected the lower central series");
  std::vector<RankRow> rows;
  for (int i = 1; i <= gamma.last_index(); ++i) {
    const int r = gamma.term(i).log_order() - gamma.term(i + 1).log_order();
    rows.push_back({i, r, expected_gamma_rank(i, gamma.params())});
  }
  return rows;
}

std::vector<RankRow> gamma_rank_report(const GroupParams& P) {
  return gamma_rank_report(series(SeriesKind::gamma, P));
}

std::vector<int> wreath_quotient_ranks(const FiltrationSeries& gamma) {
  const GroupParams& P = gamma.params();
  const NormalSubgroup Z = center_subgroup(P);
  std::vector<int> ranks;
  for (int i = 1; i <= gamma.last_index(); ++i) {
    const int hi = product(gamma.term(i), Z).log_order();
    const int lo = product(gamma.term(i + 1), Z).log_order();
    ranks.push_back(hi - lo);
  }
  trailing_trim(ranks);
  return ranks;
}

NormalSubgroup gamma_cap_Z(int i, NamedElements& named) {
  if (i < 2) throw ParameterError("gamma_cap_Z needs i >= 2");
  const GroupParams& P = named.params();
  std::vector<Element> cs = c_tail(named, 1);
  const int top = static_cast<int>(cs.size());
  std::vector<Element> gens;
  for (int a = 2; a <= top; ++a)
    for (int b = std::max(1, i - a); b < a; ++b) {
      Element z = commutator(cs[a - 1], cs[b - 1]);
      if (!z.is_identity()) gens.push_back(std::move(z));
    }
  return NormalSubgroup(subgroup_generated(gens, P));
}

NormalSubgroup gamma_cap_Z(int i, const GroupParams& P) {
  NamedElements named(P);
  return gamma_cap_Z(i, named);
}

long long z_index_closed_form(int i) {
  const long long I = i;
  return (I % 2 != 0) ? (I * I - 4 * I + 3) / 4 : (I * I - 4 * I + 4) / 4;
}

ZIndexReport z_index_report(const FiltrationSeries& gamma) {
  const GroupParams& P = gamma.params();
  NamedElements named(P);
  const NormalSubgroup Z = center_subgroup(P);
  ZIndexReport rep;
  bool agreeing = true;
  for (int i = 2; i <= gamma.last_index(); ++i) {
    const int cap = static_cast<int>(intersect(gamma.term(i), Z).log_order());
    const int span = gamma_cap_Z(i, named).log_order();
    ZIndexRow row{i, P.zdim - cap, P.zdim - span, z_index_closed_form(i)};
    if (agreeing && row.formula_matches())
      rep.formula_agrees_to = i;
    else
      agreeing = false;
    rep.rows.push_back(row);
  }
  return rep;
}

std::vector<FrattiniRow> frattini_sandwich_report(const FiltrationSeries& frattini) {
  if (frattini.kind() != SeriesKind::F) throw ParameterError("expected the Frattini series");
  const GroupParams& P = frattini.params();
  NamedElements named(P);
  std::vector<FrattiniRow> rows;
  for (int i = 1; i <= frattini.last_index(); ++i) {
    const long long rep_prev = repunit(i - 1, P.p);
    const long long lower_t = 1 + 2 * rep_prev + ipow(P.p, i - 1);
    const long long upper_t = 2 + 2 * rep_prev;
    const long long class_bound = 2LL * P.n;

    std::vector<Element> base = c_tail(named, static_cast<int>(1 + repunit(i, P.p)));
    base.push_back(x_pow_p(P, i));
    auto bound = [&](long long t) {
      std::vector<Element> gens = base;
      if (t < class_bound) {
        const auto extra = gamma_cap_Z(static_cast<int>(std::max<long long>(t, 2)), named).generators();
        gens.insert(gens.end(), extra.begin(), extra.end());
      }
      return subgroup_generated(gens, P);
    };
    const Subgroup lower = bound(lower_t);
    const Subgroup upper = bound(upper_t);
    const NormalSubgroup& phi = frattini.term(i);
    rows.push_back({i, static_cast<int>(lower_t), static_cast<int>(upper_t),
                    lower.is_subgroup_of(phi), phi.is_subgroup_of(upper),
                    lower == static_cast<const Subgroup&>(phi), upper == static_cast<const Subgroup&>(phi),
                    lower_t < class_bound && upper_t < class_bound});
  }
  return rows;
}

std::vector<PowerSandwichRow> power_sandwich_report(const FiltrationSeries& gamma,
                                                    const FiltrationSeries& power,
                                                    const FiltrationSeries& iterated, int max_i) {
  const GroupParams& P = gamma.params();
  std::vector<PowerSandwichRow> rows;
  for (int i = 0; i <= max_i; ++i) {
    const long long q = ipow(P.p, i);
    const int gi = static_cast<int>(std::min<long long>(q, gamma.last_index()));
    const int g2i = static_cast<int>(std::min<long long>(2 * q, gamma.last_index()));
    const NormalSubgroup& pi = power.term(i);
    const NormalSubgroup& pstar = iterated.term(i);
    const Subgroup top = with_top(std::min(i, P.k), gamma.term(gi));
    rows.push_back({i, gamma.term(g2i).is_subgroup_of(pi), pi.is_subgroup_of(pstar),
                    pstar.is_subgroup_of(top)});
  }
  return rows;
}

namespace {

template <typename ExponentFn>
std::vector<ClosedFormRow> closed_form_rows(const FiltrationSeries& s, const FiltrationSeries& gamma,
                                            ExponentFn exponent) {
  const GroupParams& P = gamma.params();
  const int last = std::max(s.last_index(), gamma.last_index());
  std::vector<ClosedFormRow> rows;
  for (int i = 1; i <= last; ++i) {
    const int m = exponent(i);
    const Subgroup expected = with_top(std::min(m, P.k), gamma.term(i));
    rows.push_back({i, m, static_cast<const Subgroup&>(s.term(i)) == expected});
  }
  return rows;
}

}  // namespace

std::vector<ClosedFormRow> lower_p_closed_form(const FiltrationSeries& lower_p,
                                               const FiltrationSeries& gamma) {
  if (lower_p.kind() != SeriesKind::L) throw ParameterError("expected the lower p-series");
  return closed_form_rows(lower_p, gamma, [](int i) { return i - 1; });
}

std::vector<ClosedFormRow> dimension_closed_form(const FiltrationSeries& dimension,
                                                 const FiltrationSeries& gamma) {
  if (dimension.kind() != SeriesKind::D) throw ParameterError("expected the dimension series");
  const int p = gamma.params().p;
  return closed_form_rows(dimension, gamma, [p](int i) { return ceil_log(i, p); });
}

}  // namespace hspec
