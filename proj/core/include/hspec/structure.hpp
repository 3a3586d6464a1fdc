#pragma once

// Structural checks on G_k: lower central ranks against their closed forms,
// the intersections γ_i ∩ Z, and the inclusion chains relating the power,
// iterated-power and Frattini series to the lower central series.

#include <vector>

#include "hspec/filtration.hpp"

namespace hspec {

// log_p |γ_i : γ_{i+1}| predicted for G_k: k+1 at i = 1, then ceil(i/2) for
// 2 <= i <= p^k and ceil((2p^k - i)/2) for p^k < i < 2p^k; 0 afterwards.
int expected_gamma_rank(int i, const GroupParams& P);

struct RankRow {
  int i;
  int rank;
  int expected;
  bool pass() const { return rank == expected; }
};

// One row per i from 1 to the index of the first trivial term (inclusive).
std::vector<RankRow> gamma_rank_report(const FiltrationSeries& gamma);
std::vector<RankRow> gamma_rank_report(const GroupParams& P);

// log_p |γ_i Z : γ_{i+1} Z| for i = 1 .. last index of gamma; the quotient by
// Z_k is the wreath product C_p wr C_{p^k}.
std::vector<int> wreath_quotient_ranks(const FiltrationSeries& gamma);

// ⟨z_{a,b} : 1 <= b < a, a + b >= i⟩, i >= 2.
NormalSubgroup gamma_cap_Z(int i, const GroupParams& P);
NormalSubgroup gamma_cap_Z(int i, NamedElements& named);

// (i^2 - 4i + 3)/4 for odd i and (i^2 - 4i + 4)/4 for even i.
long long z_index_closed_form(int i);

struct ZIndexRow {
  int i;
  int computed;       // log_p |Z : γ_i ∩ Z|
  int span_index;     // log_p |Z : ⟨z_{a,b} : a + b >= i⟩|  (i >= 2)
  long long formula;  // closed form
  bool span_matches() const { return computed == span_index; }
  bool formula_matches() const { return computed == formula; }
};

struct ZIndexReport {
  std::vector<ZIndexRow> rows;  // i = 2 .. last index of gamma
  // Largest I such that the closed form holds for every 2 <= i <= I.
  int formula_agrees_to = 1;
};

ZIndexReport z_index_report(const FiltrationSeries& gamma);

struct FrattiniRow {
  int i;
  int lower_threshold;  // 1 + 2[i-1]_p + p^{i-1}
  int upper_threshold;  // 2 + 2[i-1]_p
  bool lower_holds;     // Ψ⁻_i <= Φ_i
  bool upper_holds;     // Φ_i <= Ψ⁺_i
  bool lower_equal;     // Ψ⁻_i == Φ_i
  bool upper_equal;     // Φ_i == Ψ⁺_i
  bool in_class_range;  // both thresholds below 2p^k
};

// C_i = ⟨x^{p^i}, c_j : j >= 1 + [i]_p⟩ with [i]_p = (p^i - 1)/(p - 1);
// Ψ⁻_i = C_i (γ_{lower} ∩ Z), Ψ⁺_i = C_i (γ_{upper} ∩ Z). Rows run over
// i = 1 .. last index of the Frattini series.
std::vector<FrattiniRow> frattini_sandwich_report(const FiltrationSeries& frattini);

struct PowerSandwichRow {
  int i;
  bool gamma_in_power;        // γ_{2p^i} <= G^{p^i}
  bool power_in_iterated;     // G^{p^i} <= π*_i
  bool iterated_in_bound;     // π*_i <= ⟨x^{p^i}⟩ γ_{p^i}
  bool holds() const { return gamma_in_power && power_in_iterated && iterated_in_bound; }
};

std::vector<PowerSandwichRow> power_sandwich_report(const FiltrationSeries& gamma,
                                                    const FiltrationSeries& power,
                                                    const FiltrationSeries& iterated, int max_i);

struct ClosedFormRow {
  int i;
  int exponent;  // the m in ⟨x^{p^m}⟩ γ_i
  bool equal;
};

// L_i = ⟨x^{p^{i-1}}⟩ γ_i for i = 1 .. max(last indices).
std::vector<ClosedFormRow> lower_p_closed_form(const FiltrationSeries& lower_p,
                                               const FiltrationSeries& gamma);
// D_i = ⟨x^{p^{ceil(log_p i)}}⟩ γ_i for i = 1 .. max(last indices).
std::vector<ClosedFormRow> dimension_closed_form(const FiltrationSeries& dimension,
                                                 const FiltrationSeries& gamma);

// Smallest l with p^l >= i.
int ceil_log(int i, int p);
// (p^i - 1)/(p - 1).
long long repunit(int i, int p);

}  // namespace hspec
