#pragma once

// Exact linear algebra over the prime field F_p.

#include <cstddef>
#include <span>
#include <vector>

namespace hspec {

// Entries are residues 0..p-1.
using Vector = std::vector<int>;

bool is_odd_prime(int p);

// Small helpers for residue arithmetic; all results are reduced into 0..p-1.
inline int mod_p(long long value, int p) {
  long long r = value % p;
  return static_cast<int>(r < 0 ? r + p : r);
}
int inverse_mod_p(int value, int p);

bool is_zero(const Vector& v);

// A subspace of F_p^n held as its reduced row-echelon basis. Two subspaces are
// equal exactly when their bases are equal.
class Subspace {
 public:
  Subspace(int p, std::size_t ambient_dim);

  static Subspace full(int p, std::size_t ambient_dim);

  int prime() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;

  // Remainder of v after elimination against the basis; zero iff contained.
  Vector reduce(Vector v) const;

  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  friend Subspace rref(std::span<const Vector> rows, int p, std::size_t n);

  int p_;
  std::size_t n_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

// Canonical reduced row-echelon basis of the span of rows.
Subspace rref(std::span<const Vector> rows, int p, std::size_t n);

Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);

// Adds extra generators to s.
Subspace extend(const Subspace& s, std::span<const Vector> rows);

// log_p |S : T| = dim S - dim T; throws ContainmentError unless T <= S.
std::size_t quotient_logorder(const Subspace& s, const Subspace& t);

// Basis vectors of a complement of t inside s (taken from s's echelon basis).
std::vector<Vector> complement_basis(const Subspace& s, const Subspace& t);

}  // namespace hspec
