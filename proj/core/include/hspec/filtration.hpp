#pragma once

// The lower central series and the five standard filtration series of G_k,
// each computed from its defining recursion:
//
//   gamma  γ_1 = G,  γ_i = [γ_{i-1}, G]
//   L      P_1 = G,  P_i = P_{i-1}^p [P_{i-1}, G]
//   D      D_1 = G,  D_i = D_{ceil(i/p)}^p ∏_{1<=j<i} [D_j, D_{i-j}]
//   P      π_i = G^{p^i}                       (i >= 0)
//   Pstar  π*_0 = G, π*_i = (π*_{i-1})^p
//   F      Φ_0 = G,  Φ_i = Φ_{i-1}^p [Φ_{i-1}, Φ_{i-1}]

#include <string_view>
#include <vector>

#include "hspec/subgroup.hpp"

namespace hspec {

enum class SeriesKind { gamma, L, D, P, Pstar, F };

inline constexpr SeriesKind kAllSeriesKinds[] = {SeriesKind::gamma, SeriesKind::L,
                                                 SeriesKind::D,     SeriesKind::P,
                                                 SeriesKind::Pstar, SeriesKind::F};
inline constexpr SeriesKind kFiltrationKinds[] = {SeriesKind::L, SeriesKind::D, SeriesKind::P,
                                                  SeriesKind::Pstar, SeriesKind::F};

std::string_view to_string(SeriesKind kind);
SeriesKind parse_series_kind(std::string_view name);

// 1 for gamma, L and D; 0 for P, Pstar and F.
int first_index(SeriesKind kind);

class FiltrationSeries {
 public:
  FiltrationSeries(SeriesKind kind, const GroupParams& P, std::vector<NormalSubgroup> terms);

  SeriesKind kind() const { return kind_; }
  const GroupParams& params() const { return params_; }
  int first_index() const { return first_; }
  // Index of the first trivial term.
  int last_index() const { return first_ + static_cast<int>(terms_.size()) - 1; }
  const std::vector<NormalSubgroup>& terms() const { return terms_; }

  // G below first_index(), the trivial group beyond last_index().
  const NormalSubgroup& term(int i) const;

 private:
  SeriesKind kind_;
  GroupParams params_;
  int first_;
  std::vector<NormalSubgroup> terms_;
  NormalSubgroup whole_;
};

struct SeriesOptions {
  PowerOptions power;
  // Guard against a non-terminating recursion; 0 means 4 * log|G| + 8.
  int max_terms = 0;
};

FiltrationSeries series(SeriesKind kind, const GroupParams& P, const SeriesOptions& opts = {});

}  // namespace hspec
