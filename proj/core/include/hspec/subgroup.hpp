#pragma once

// Split-form subgroups <x^(p^m)> ⋉ S of G_k with S <= H_k. S is stored as a
// subspace of Lazard coordinates, where subgroups of H_k are exactly the
// bracket-closed subspaces and normal subgroups of G_k inside H_k are the
// shift-invariant subspaces L with [L, H_k] <= L.

#include <cstdint>
#include <span>
#include <vector>

#include "hspec/group.hpp"
#include "hspec/linalg.hpp"

namespace hspec {

class Subgroup {
 public:
  // Validates that lie is bracket-closed and invariant under x^(p^m).
  Subgroup(const GroupParams& P, int top_index, Subspace lie);

  static Subgroup trivial(const GroupParams& P);
  static Subgroup whole(const GroupParams& P);

  const GroupParams& params() const { return params_; }
  // m with top part <x^(p^m)>; m == k means the top part is trivial.
  int top_index() const { return top_; }
  bool has_top() const { return top_ < params_.k; }
  const Subspace& lie() const { return lie_; }

  // Image of S in H_k / Z_k.
  Subspace base_image() const;
  // S ∩ Z_k, as a subspace of F_p^zdim.
  Subspace central_part() const;

  bool contains(const Element& g) const;
  int log_order() const { return (params_.k - top_) + static_cast<int>(lie_.dim()); }
  int log_index() const { return params_.log_order() - log_order(); }
  bool is_trivial() const { return top_ == params_.k && lie_.dim() == 0; }
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_normal() const;

  // x^(p^m) (when present) followed by exp of the Lie basis.
  std::vector<Element> generators() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.params_ == b.params_ && a.top_ == b.top_ && a.lie_ == b.lie_;
  }

 protected:
  struct Trusted {};
  Subgroup(Trusted, const GroupParams& P, int top_index, Subspace lie)
      : params_(P), top_(top_index), lie_(std::move(lie)) {}

 private:
  friend Subgroup close_split(std::span<const Element>, const GroupParams&, bool);

  GroupParams params_;
  int top_;
  Subspace lie_;
};

class NormalSubgroup : public Subgroup {
 public:
  // Throws ParameterError if s is not normal in G_k.
  explicit NormalSubgroup(const Subgroup& s);

  static NormalSubgroup trivial(const GroupParams& P);
  static NormalSubgroup whole(const GroupParams& P);

 private:
  friend NormalSubgroup trusted_normal(const Subgroup&);
  NormalSubgroup(Trusted t, const Subgroup& s)
      : Subgroup(t, s.params(), s.top_index(), s.lie()) {}
};

// Smallest split-form subgroup containing gens; with normal = true, the
// normal closure. Throws SplitFormError if the result would need a top
// generator x^(p^m) h with h outside the subgroup.
Subgroup close_split(std::span<const Element> gens, const GroupParams& P, bool normal);

Subgroup subgroup_generated(std::span<const Element> gens, const GroupParams& P);
NormalSubgroup normal_closure(std::span<const Element> gens, const GroupParams& P);

NormalSubgroup base_subgroup(const GroupParams& P);    // H_k
NormalSubgroup center_subgroup(const GroupParams& P);  // Z_k

NormalSubgroup product(const NormalSubgroup& a, const NormalSubgroup& b);
NormalSubgroup intersect(const NormalSubgroup& a, const NormalSubgroup& b);
NormalSubgroup commutator_subgroup(const NormalSubgroup& a, const NormalSubgroup& b);

// x^(p^e), the identity once e >= k.
Element x_pow_p(const GroupParams& P, int e);

// <x^(p^m)> S as a (not necessarily normal) subgroup.
Subgroup with_top(int m, const Subgroup& s);

struct PowerOptions {
  std::uint64_t seed = 0;
  // Random rounds in a row that must add nothing before the result is accepted.
  int confirm_rounds = 3;
  // Random elements per round; 0 picks 2 * (log_order + 1).
  int batch = 0;
  // Subgroups with at most this many elements are enumerated exhaustively;
  // 0 always samples.
  long long exact_limit = 59049;
};

// <g^(p^e) : g in N>. Exact when N is small enough to enumerate; otherwise the
// normal closure of p^e-th powers of a deterministic slate (generators and
// their pairwise products) grown by seeded random sampling until stable.
NormalSubgroup power_subgroup(const NormalSubgroup& N, int e = 1, const PowerOptions& opts = {});

// Uniformly random element of a split subgroup.
template <typename Rng>
Element random_element(const Subgroup& s, Rng& rng);

// All elements of a split subgroup, in no particular order. Intended for
// small groups only.
std::vector<Element> enumerate_elements(const Subgroup& s);

}  // namespace hspec

#include "hspec/detail/random_element.hpp"
