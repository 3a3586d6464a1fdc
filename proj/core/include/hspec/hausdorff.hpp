#pragma once

// Partial logarithmic densities log_p|H S_i : S_i| / log_p|G : S_i| of normal
// subgroups along computed series. These are finite-level values; the
// dimensions they shadow are limits over the whole tower and are not
// computed here.

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "hspec/filtration.hpp"

namespace hspec {

using Rational = boost::rational<std::int64_t>;

struct ProfileLevel {
  int i;
  int num;  // log_p |H S_i : S_i|
  int den;  // log_p |G : S_i|
  Rational q() const { return Rational(num, den); }
};

struct DimensionProfile {
  SeriesKind kind;
  GroupParams params;
  NormalSubgroup subgroup;
  // One entry per level with S_i != G, in increasing i.
  std::vector<ProfileLevel> levels;

  Rational final_quotient() const;
};

DimensionProfile profile(const NormalSubgroup& H, const FiltrationSeries& S);

struct GrowthRow {
  int i;
  int growth;  // log_p |<z>^G Z_i : Z_i| with Z_i = S_i ∩ Z
  int e;       // exponent of Z / Z_i, always 1 (Z is elementary abelian)
  int n;       // least n with γ_{n+1} ∩ Z <= Z_i
  int bound() const { return e * n; }
  bool holds() const { return growth <= bound(); }
  bool tight() const { return growth == bound(); }
};

// Throws ParameterError unless z is in Z_k. gamma must be the lower central
// series for the same parameters.
std::vector<GrowthRow> closure_growth_bound(const Element& z, const FiltrationSeries& S,
                                            const FiltrationSeries& gamma);

struct DialLayer {
  int i;                        // Z_i = S_i ∩ Z; the layer is Z_{i-1} / Z_i
  int rank;                     // log_p |Z_{i-1} : Z_i|
  std::vector<Vector> chosen;   // central coordinates of the included layer elements
  Rational running;             // log_p|H Z_i : Z_i| / log_p|Z : Z_i| after the layer
};

struct DialPlan {
  Rational target;
  SeriesKind kind;
  std::vector<DialLayer> layers;
  NormalSubgroup subgroup;  // normal closure of every chosen element
  Rational achieved;        // log_p|H| / log_p|Z|
  int max_layer_rank = 0;
};

// Builds H <= Z normal in G_k with log_p|H| / log_p|Z| close to eta. Layers of
// the Z-series are visited coarse to fine and each layer element is taken
// (through its normal closure) when that keeps log_p|H| within
// round(eta * log_p|Z|). depth limits the number of layers visited; 0 means
// all. Throws ParameterError if eta is outside [0, 1].
DialPlan dial_density(const Rational& eta, const FiltrationSeries& S, int depth = 0);

struct TrendRow {
  int k;
  Rational final_quotient;  // last profile quotient of Z along the series
  int deep_index;           // i = 2p^k - 1
  Rational deep_ratio;      // 2i / log_p |Z : γ_i ∩ Z| at that i
};

// Throws BudgetError for parameters outside the feasible set unless
// allow_large is set.
std::vector<TrendRow> z_density_trend(SeriesKind kind, int p, const std::vector<int>& ks,
                                      const SeriesOptions& opts = {}, bool allow_large = false);

// Default feasibility: p = 3 up to k = 2, p = 5 and 7 at k = 1.
bool is_feasible(int p, int k);

}  // namespace hspec
