#pragma once

// Exact checks of commutator identities in G_k.

#include "hspec/group.hpp"
#include "hspec/subgroup.hpp"

namespace hspec {

// Normal closure in G_k of all commutators in {u, v} of weight >= min_weight
// that involve v at least twice.
//
// Nontrivial commutators in G_k are, up to inversion and conjugation, either
// left-normed letter chains [s_1, ..., s_m] or brackets [A, B] of two chains
// of weight >= 2 (which are central in H_k) followed by letters. Chains are
// enumerated by weight with duplicate values merged; the [A, B] part is
// bilinear in the base images of A and B, so it is generated from spans.
NormalSubgroup weight_closure(const Element& u, const Element& v, int min_weight);

struct ComIdsResult {
  bool power_congruence = false;       // (ab)^q ≡ a^q b^q [b,a,...,a]  mod K(a,b)
  bool commutator_congruence = false;  // [a^q,b] ≡ [a,b,a,...,a]       mod K(a,[a,b])
  bool holds() const { return power_congruence && commutator_congruence; }
};

// q = p^r. For r = 0 both congruences degenerate to equalities and hold.
ComIdsResult verify_com_ids(const Element& a, const Element& b, int r);

// [z_{i,j}, x, ..., x] (r times) against
// ∏_{s=0}^{r} ∏_{t=0}^{s} z_{i+r-t, j+r-s+t}^{C(r,s) C(s,t)}.
bool verify_double_prod(int i, int j, int r, NamedElements& named);
bool verify_double_prod(int i, int j, int r, const GroupParams& P);

// [z_{i,j}, x^{p^kk}] against z_{i+p^kk, j} z_{i, j+p^kk} z_{i+p^kk, j+p^kk}.
bool verify_pk_commutator(int i, int j, int kk, NamedElements& named);
bool verify_pk_commutator(int i, int j, int kk, const GroupParams& P);

}  // namespace hspec
