#include "hspec/linalg.hpp"

#include <algorithm>
#include <string>

#include "hspec/errors.hpp"

namespace hspec {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

int inverse_mod_p(int value, int p) {
  value = mod_p(value, p);
  if (value == 0) throw ParameterError("zero has no inverse mod p");
  // Fermat: value^(p-2).
  long long result = 1, base = value;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

namespace {

void check_prime(int p) {
  if (!is_odd_prime(p))
    throw ParameterError("modulus " + std::to_string(p) + " is not an odd prime");
}

void check_same_space(const Subspace& s, const Subspace& t) {
  if (s.prime() != t.prime() || s.ambient_dim() != t.ambient_dim())
    throw DimensionMismatch("subspaces live in different ambient spaces");
}

}  // namespace

Subspace::Subspace(int p, std::size_t ambient_dim) : p_(p), n_(ambient_dim) {
  check_prime(p);
}

Subspace Subspace::full(int p, std::size_t ambient_dim) {
  std::vector<Vector> rows(ambient_dim, Vector(ambient_dim, 0));
  for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][i] = 1;
  return rref(rows, p, ambient_dim);
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != n_)
    throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                            " does not match ambient dimension " +
                            std::to_string(n_));
  for (auto& x : v) x = mod_p(x, p_);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    int coeff = v[pivots_[r]];
    if (coeff == 0) continue;
    const Vector& row = basis_[r];
    for (std::size_t c = pivots_[r]; c < n_; ++c)
      if (row[c] != 0) v[c] = mod_p(v[c] - static_cast<long long>(coeff) * row[c], p_);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::is_subspace_of(const Subspace& other) const {
  check_same_space(*this, other);
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const Vector& b) { return other.contains(b); });
}

Subspace rref(std::span<const Vector> rows, int p, std::size_t n) {
  Subspace out(p, n);
  std::vector<Vector> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != n)
      throw DimensionMismatch("row length " + std::to_string(row.size()) +
                              " does not match " + std::to_string(n));
    Vector r(row);
    for (auto& x : r) x = mod_p(x, p);
    if (!is_zero(r)) m.push_back(std::move(r));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);

    const int inv = inverse_mod_p(m[rank][col], p);
    for (std::size_t c = col; c < n; ++c)
      m[rank][c] = static_cast<int>(static_cast<long long>(m[rank][c]) * inv % p);

    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const long long f = m[r][col];
      for (std::size_t c = col; c < n; ++c)
        if (m[rank][c] != 0) m[r][c] = mod_p(m[r][c] - f * m[rank][c], p);
    }
    out.pivots_.push_back(col);
    ++rank;
  }
  m.resize(rank);
  out.basis_ = std::move(m);
  return out;
}

Subspace sum(const Subspace& s, const Subspace& t) {
  check_same_space(s, t);
  std::vector<Vector> rows = s.basis();
  rows.insert(rows.end(), t.basis().begin(), t.basis().end());
  return rref(rows, s.prime(), s.ambient_dim());
}

Subspace extend(const Subspace& s, std::span<const Vector> extra) {
  std::vector<Vector> rows = s.basis();
  rows.insert(rows.end(), extra.begin(), extra.end());
  return rref(rows, s.prime(), s.ambient_dim());
}

// Zassenhaus block elimination: rows (s | s) and (t | 0); after reduction the
// rows whose left block vanishes carry a basis of s ∩ t in the right block.
Subspace intersect(const Subspace& s, const Subspace& t) {
  check_same_space(s, t);
  const std::size_t n = s.ambient_dim();
  std::vector<Vector> rows;
  for (const auto& b : s.basis()) {
    Vector r(2 * n);
    std::copy(b.begin(), b.end(), r.begin());
    std::copy(b.begin(), b.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
    rows.push_back(std::move(r));
  }
  for (const auto& b : t.basis()) {
    Vector r(2 * n, 0);
    std::copy(b.begin(), b.end(), r.begin());
    rows.push_back(std::move(r));
  }
  const Subspace block = rref(rows, s.prime(), 2 * n);
  std::vector<Vector> meet;
  for (std::size_t r = 0; r < block.dim(); ++r) {
    if (block.pivots()[r] < n) continue;
    const auto& row = block.basis()[r];
    meet.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return rref(meet, s.prime(), n);
}

std::size_t quotient_logorder(const Subspace& s, const Subspace& t) {
  check_same_space(s, t);
  if (!t.is_subspace_of(s))
    throw ContainmentError("quotient_logorder: T is not contained in S");
  return s.dim() - t.dim();
}

std::vector<Vector> complement_basis(const Subspace& s, const Subspace& t) {
  check_same_space(s, t);
  std::vector<Vector> out;
  Subspace acc = t;
  for (const auto& b : s.basis()) {
    if (acc.contains(b)) continue;
    out.push_back(b);
    acc = extend(acc, std::span<const Vector>(&b, 1));
  }
  return out;
}

}  // namespace hspec
