#pragma once

// Normal-form arithmetic in G_k = <x> ⋉ M, where <x> is cyclic of order p^k and
// M is the free class-2 exponent-p group on b_0, ..., b_{p^k - 1}. Conjugation
// by x shifts base indices cyclically: b_i^x = b_{i+1 mod p^k}.

#include <cstddef>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hspec/linalg.hpp"

namespace hspec {

struct GroupParams {
  int p = 3;
  int k = 1;
  int n = 3;      // p^k, the rank of the base group
  int zdim = 3;   // n(n-1)/2, the rank of the central part

  // Validates p (odd prime) and k (>= 1) and derives n, zdim.
  static GroupParams make(int p, int k);

  int log_order() const { return k + n + zdim; }
  std::size_t lie_dim() const { return static_cast<std::size_t>(n + zdim); }

  // Row-major position of the pair (i, j), i < j, in the central vector.
  std::size_t pair_index(int i, int j) const {
    return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
  }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

// x^a * prod_i b_i^{v_i} * prod_{i<j} [b_i,b_j]^{M_ij}, base factors in
// increasing index order and central factors in lexicographic (i, j) order.
class Element {
 public:
  explicit Element(const GroupParams& params);  // identity
  Element(const GroupParams& params, int a, Vector v, Vector m);

  const GroupParams& params() const { return params_; }
  int top() const { return a_; }
  const Vector& base() const { return v_; }
  const Vector& central() const { return m_; }
  int central_at(int i, int j) const { return m_[params_.pair_index(i, j)]; }

  bool is_identity() const;
  bool in_base() const { return a_ == 0; }  // element of H_k
  bool in_center() const;                    // element of Z_k

  friend bool operator==(const Element& g, const Element& h) {
    return g.params_ == h.params_ && g.a_ == h.a_ && g.v_ == h.v_ && g.m_ == h.m_;
  }
  friend bool operator<(const Element& g, const Element& h);

 private:
  friend Element multiply(const Element&, const Element&);
  friend Element inverse(const Element&);
  friend Element conjugate_by_x_power(const Element&, long long);

  GroupParams params_;
  int a_ = 0;
  Vector v_;
  Vector m_;
};

Element identity(const GroupParams& P);
Element x_gen(const GroupParams& P);
Element y_gen(const GroupParams& P);
Element base_generator(const GroupParams& P, int i);
Element central_generator(const GroupParams& P, int i, int j);  // [b_i, b_j]
Element x_power(const GroupParams& P, long long e);

Element multiply(const Element& g, const Element& h);
Element inverse(const Element& g);
Element power(const Element& g, long long e);

// [g, h] = g^-1 h^-1 g h.
Element commutator(const Element& g, const Element& h);
// Left-normed [g, h, h, ..., h] with `times` copies of h.
Element iterated_commutator(const Element& g, const Element& h, int times);
// g^h = h^-1 g h.
Element conjugate(const Element& g, const Element& h);
// g^(x^e), computed directly from the cyclic shift.
Element conjugate_by_x_power(const Element& g, long long e);

inline Element operator*(const Element& g, const Element& h) { return multiply(g, h); }

// Lazard coordinates on H_k: log(u, C) = (u, C + q(u)/2) where q(u)_{ij} = u_i u_j.
// In these coordinates products follow X + Y + [X,Y]/2, automorphisms act
// linearly, and subgroups of H_k are exactly the bracket-closed subspaces.
Vector to_lie(const Element& h);
Element from_lie(const GroupParams& P, const Vector& lie);
Vector lie_bracket(const GroupParams& P, const Vector& X, const Vector& Y);
// Image of X under conjugation by x^s (a signed permutation of coordinates).
Vector lie_shift(const GroupParams& P, const Vector& X, long long s);

// c_1 = y, c_i = [c_{i-1}, x].
Element c(int i, const GroupParams& P);
// c_{i,1} = [c_i, y], c_{i,j} = [c_{i,j-1}, x].
Element c2(int i, int j, const GroupParams& P);
// [c_i, c_j] for i > j >= 1 and the identity for i <= j. Throws on zero indices.
Element zgen(int i, int j, const GroupParams& P);
// [c_i, c_j] for all i, j >= 1 and the identity when either index is < 1.
Element z_pair(int i, int j, const GroupParams& P);

// Memo for the iterated commutators c_i, which the sweeps request repeatedly.
class NamedElements {
 public:
  explicit NamedElements(const GroupParams& P);
  const GroupParams& params() const { return params_; }
  const Element& c(int i);
  Element z_pair(int i, int j);

 private:
  GroupParams params_;
  std::vector<Element> c_;
};

enum class Letter { x, x_inv, y, y_inv };

struct Word {
  std::vector<Letter> letters;

  // Letters x, y and their inverses X, Y (also x^-1, y^-1); whitespace ignored.
  static Word parse(std::string_view text);
  Word operator+(const Word& other) const;
};

Element evaluate_word(const Word& w, const GroupParams& P);

nlohmann::json to_json(const Element& g);
Element element_from_json(const GroupParams& P, const nlohmann::json& j);

}  // namespace hspec
