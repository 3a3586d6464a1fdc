#pragma once

// Brute-force model of a small G_k: every element is listed, products come
// from a full multiplication table, and subgroups are plain element sets.
// The table is built from its own Lazard-coordinate arithmetic and shares
// nothing with the engine's multiply() beyond the coordinate layout, so the
// engine can be checked against it.

#include <cstdint>
#include <vector>

#include "hspec/filtration.hpp"

namespace hspec {

class OracleGroup {
 public:
  using Set = std::vector<bool>;

  // Throws OracleError when |G_k| exceeds 4096 elements.
  explicit OracleGroup(const GroupParams& P);

  const GroupParams& params() const { return params_; }
  int size() const { return size_; }
  int identity() const { return 0; }
  int x() const { return x_; }
  int y() const { return y_; }

  int mul(int g, int h) const { return table_[static_cast<std::size_t>(g) * size_ + h]; }
  int inv(int g) const { return inverse_[g]; }
  int comm(int g, int h) const { return mul(mul(inv(g), inv(h)), mul(g, h)); }
  int pow(int g, long long e) const;

  // Engine element with the same coordinates.
  Element to_element(int g) const;

  // Elements reachable from the identity by right multiplication with x, y.
  Set generated_by_xy() const;

  // (g s) h == g (s h) for all g, h and s in {x, y}; with generation by x, y
  // this proves the table associative.
  bool light_associative() const;
  // to_element(g) * to_element(s) == to_element(g s) for all g and s in {x, y}.
  bool matches_engine_on_generators() const;

  Set closure(const std::vector<int>& gens) const;
  Set normal_closure(std::vector<int> gens) const;
  Set product(const Set& a, const Set& b) const;
  Set commutator(const Set& a, const Set& b) const;
  // <g^(p^e) : g in a>.
  Set power(const Set& a, int e) const;

  Set whole() const { return Set(size_, true); }
  Set trivial() const;
  static int count(const Set& s);

  // Terms from the first index until (and including) the first trivial term.
  std::vector<Set> series(SeriesKind kind) const;

 private:
  std::vector<int> small_generating_set(const Set& s) const;

  GroupParams params_;
  int size_;
  int x_ = 0;
  int y_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<int> inverse_;
};

// Same elements: sizes agree and the engine subgroup contains each listed one.
bool same_subgroup(const OracleGroup& oracle, const OracleGroup::Set& s, const Subgroup& engine);

}  // namespace hspec
