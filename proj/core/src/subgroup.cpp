#include "hspec/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <string>

#include "hspec/errors.hpp"

namespace hspec {

NormalSubgroup trusted_normal(const Subgroup& s);

namespace {

long long ipow(int base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int p_valuation(int a, int p, int cap) {
  int v = 0;
  while (v < cap && a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

// Inverse of a unit modulo m (m a power of p), by extended Euclid.
long long unit_inverse(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, a1 = a % m;
  if (a1 < 0) a1 += m;
  while (a1 != 0) {
    const long long q = g / a1;
    std::tie(g, a1) = std::make_tuple(a1, g - q * a1);
    std::tie(x, x1) = std::make_tuple(x1, x - q * x1);
  }
  if (g != 1) throw ParameterError("not a unit");
  return (x % m + m) % m;
}

Element h_part(const Element& g) { return Element(g.params(), 0, g.base(), g.central()); }

Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim, 0);
  v[i] = 1;
  return v;
}

}  // namespace

Subgroup::Subgroup(const GroupParams& P, int top_index, Subspace lie)
    : params_(P), top_(top_index), lie_(std::move(lie)) {
  if (top_ < 0 || top_ > P.k) throw ParameterError("top index out of range");
  if (lie_.prime() != P.p || lie_.ambient_dim() != P.lie_dim())
    throw DimensionMismatch("Lie subspace does not match the group parameters");
  const auto& basis = lie_.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!lie_.contains(lie_bracket(P, basis[i], basis[j])))
        throw ParameterError("subspace is not closed under the bracket");
  if (has_top()) {
    const long long step = ipow(P.p, top_);
    for (const auto& b : basis)
      if (!lie_.contains(lie_shift(P, b, step)))
        throw ParameterError("subspace is not invariant under the top generator");
  }
}

Subgroup Subgroup::trivial(const GroupParams& P) {
  return Subgroup(Trusted{}, P, P.k, Subspace(P.p, P.lie_dim()));
}

Subgroup Subgroup::whole(const GroupParams& P) {
  return Subgroup(Trusted{}, P, 0, Subspace::full(P.p, P.lie_dim()));
}

Subspace Subgroup::base_image() const {
  const auto n = static_cast<std::size_t>(params_.n);
  std::vector<Vector> rows;
  for (const auto& b : lie_.basis()) rows.emplace_back(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n));
  return rref(rows, params_.p, n);
}

Subspace Subgroup::central_part() const {
  const auto n = static_cast<std::size_t>(params_.n);
  std::vector<Vector> zrows;
  for (std::size_t i = n; i < params_.lie_dim(); ++i) zrows.push_back(unit_vector(params_.lie_dim(), i));
  const Subspace meet = intersect(lie_, rref(zrows, params_.p, params_.lie_dim()));
  std::vector<Vector> rows;
  for (const auto& b : meet.basis()) rows.emplace_back(b.begin() + static_cast<std::ptrdiff_t>(n), b.end());
  return rref(rows, params_.p, static_cast<std::size_t>(params_.zdim));
}

bool Subgroup::contains(const Element& g) const {
  if (!(g.params() == params_)) throw ParameterError("element from a different group");
  if (g.top() != 0) {
    if (!has_top()) return false;
    if (g.top() % ipow(params_.p, top_) != 0) return false;
  }
  return lie_.contains(to_lie(h_part(g)));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!(params_ == other.params_)) throw ParameterError("subgroups of different groups");
  return top_ >= other.top_ && lie_.is_subspace_of(other.lie_);
}

bool Subgroup::is_normal() const {
  const Vector e0 = to_lie(y_gen(params_));
  for (const auto& b : lie_.basis()) {
    if (!lie_.contains(lie_shift(params_, b, 1))) return false;
    if (!lie_.contains(lie_bracket(params_, b, e0))) return false;
  }
  if (has_top()) {
    const Element t = x_pow_p(params_, top_);
    if (!lie_.contains(to_lie(commutator(t, y_gen(params_))))) return false;
  }
  return true;
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> out;
  if (has_top()) out.push_back(x_pow_p(params_, top_));
  for (const auto& b : lie_.basis()) out.push_back(from_lie(params_, b));
  return out;
}

NormalSubgroup::NormalSubgroup(const Subgroup& s)
    : Subgroup(Trusted{}, s.params(), s.top_index(), s.lie()) {
  if (!is_normal()) throw ParameterError("subgroup is not normal in G_k");
}

NormalSubgroup NormalSubgroup::trivial(const GroupParams& P) {
  return trusted_normal(Subgroup::trivial(P));
}

NormalSubgroup NormalSubgroup::whole(const GroupParams& P) {
  return trusted_normal(Subgroup::whole(P));
}

NormalSubgroup trusted_normal(const Subgroup& s) { return NormalSubgroup(Subgroup::Trusted{}, s); }

Element x_pow_p(const GroupParams& P, int e) {
  if (e >= P.k) return identity(P);
  return x_power(P, ipow(P.p, e));
}

Subgroup close_split(std::span<const Element> gens, const GroupParams& P, bool normal) {
  // Top part: the smallest p-valuation among the top exponents.
  int m = P.k;
  const Element* lead = nullptr;
  for (const auto& g : gens) {
    if (!(g.params() == P)) throw ParameterError("generator from a different group");
    if (g.top() == 0) continue;
    const int v = p_valuation(g.top(), P.p, P.k);
    if (v < m) {
      m = v;
      lead = &g;
    }
  }

  std::vector<Element> seeds;
  Element t = identity(P);
  if (lead != nullptr) {
    const long long step = ipow(P.p, m);
    const long long modulus = ipow(P.p, P.k - m);
    t = power(*lead, unit_inverse(lead->top() / step, modulus));
    const Element t_inv = inverse(t);
    for (const auto& g : gens) {
      const long long coeff = g.top() / step;
      seeds.push_back(multiply(g, power(t_inv, coeff)));
    }
    seeds.push_back(power(t, modulus));
    if (normal) {
      seeds.push_back(commutator(t, x_gen(P)));
      seeds.push_back(commutator(t, y_gen(P)));
    }
  } else {
    seeds.assign(gens.begin(), gens.end());
  }

  std::vector<Vector> rows;
  for (const auto& h : seeds) {
    if (!h.in_base()) throw SplitFormError("closure seed left H_k");
    rows.push_back(to_lie(h));
  }
  Subspace lie = rref(rows, P.p, P.lie_dim());

  const Vector e0 = to_lie(y_gen(P));
  const bool pure_top = lead == nullptr || is_zero(t.base());
  const Element t_inv = inverse(t);
  auto conj_t = [&](const Vector& X) -> Vector {
    if (pure_top) return lie_shift(P, X, t.top());
    return to_lie(multiply(multiply(t_inv, from_lie(P, X)), t));
  };

  // Worklist fixed point: everything ever added to lie is processed once.
  std::deque<Vector> work(lie.basis().begin(), lie.basis().end());
  std::vector<Vector> processed;
  auto offer = [&](const Vector& v) {
    if (lie.contains(v)) return;
    lie = extend(lie, std::span<const Vector>(&v, 1));
    work.push_back(v);
  };
  while (!work.empty()) {
    const Vector X = std::move(work.front());
    work.pop_front();
    if (normal) {
      offer(lie_shift(P, X, 1));
      offer(lie_bracket(P, X, e0));
    } else {
      if (lead != nullptr) offer(conj_t(X));
      for (const auto& Y : processed) offer(lie_bracket(P, X, Y));
    }
    processed.push_back(X);
  }

  if (lead != nullptr) {
    // x^(p^m) belongs to the closure iff the H-part of t does.
    if (!lie.contains(to_lie(h_part(t))))
      throw SplitFormError("closure contains x^(p^" + std::to_string(m) +
                           ")h but not x^(p^" + std::to_string(m) + ")");
  }
  return Subgroup(Subgroup::Trusted{}, P, m, std::move(lie));
}

Subgroup subgroup_generated(std::span<const Element> gens, const GroupParams& P) {
  return close_split(gens, P, false);
}

NormalSubgroup normal_closure(std::span<const Element> gens, const GroupParams& P) {
  return trusted_normal(close_split(gens, P, true));
}

NormalSubgroup base_subgroup(const GroupParams& P) {
  const Element y = y_gen(P);
  return normal_closure(std::span<const Element>(&y, 1), P);
}

NormalSubgroup center_subgroup(const GroupParams& P) {
  std::vector<Element> gens;
  for (int i = 0; i < P.n; ++i)
    for (int j = i + 1; j < P.n; ++j) gens.push_back(central_generator(P, i, j));
  return normal_closure(gens, P);
}

NormalSubgroup product(const NormalSubgroup& a, const NormalSubgroup& b) {
  if (!(a.params() == b.params())) throw ParameterError("subgroups of different groups");
  return trusted_normal(Subgroup(a.params(), std::min(a.top_index(), b.top_index()),
                                 sum(a.lie(), b.lie())));
}

NormalSubgroup intersect(const NormalSubgroup& a, const NormalSubgroup& b) {
  if (!(a.params() == b.params())) throw ParameterError("subgroups of different groups");
  return trusted_normal(Subgroup(a.params(), std::max(a.top_index(), b.top_index()),
                                 intersect(a.lie(), b.lie())));
}

NormalSubgroup commutator_subgroup(const NormalSubgroup& a, const NormalSubgroup& b) {
  if (!(a.params() == b.params())) throw ParameterError("subgroups of different groups");
  const auto ga = a.generators();
  const auto gb = b.generators();
  std::vector<Element> comms;
  comms.reserve(ga.size() * gb.size());
  for (const auto& g : ga)
    for (const auto& h : gb) {
      Element c = commutator(g, h);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(comms, a.params());
}

Subgroup with_top(int m, const Subgroup& s) {
  std::vector<Element> gens = s.generators();
  gens.push_back(x_pow_p(s.params(), m));
  return subgroup_generated(gens, s.params());
}

std::vector<Element> enumerate_elements(const Subgroup& s) {
  const GroupParams& P = s.params();
  const auto& basis = s.lie().basis();
  std::vector<Element> hs;
  std::vector<int> coeff(basis.size(), 0);
  while (true) {
    Vector lie(P.lie_dim(), 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (coeff[b] != 0)
        for (std::size_t i = 0; i < lie.size(); ++i)
          lie[i] = mod_p(lie[i] + static_cast<long long>(coeff[b]) * basis[b][i], P.p);
    hs.push_back(from_lie(P, lie));
    std::size_t pos = 0;
    while (pos < coeff.size() && ++coeff[pos] == P.p) coeff[pos++] = 0;
    if (pos == coeff.size()) break;
  }
  std::vector<Element> out;
  const long long step = s.has_top() ? ipow(P.p, s.top_index()) : P.n;
  for (long long a = 0; a < P.n; a += step)
    for (const auto& h : hs) out.emplace_back(P, static_cast<int>(a), h.base(), h.central());
  return out;
}

NormalSubgroup power_subgroup(const NormalSubgroup& N, int e, const PowerOptions& opts) {
  const GroupParams& P = N.params();
  if (e < 0) throw ParameterError("power exponent must be non-negative");
  if (e == 0) return N;
  const long long q = ipow(P.p, e);

  long long order = 1;
  for (int t = 0; t < N.log_order() && order <= opts.exact_limit; ++t) order *= P.p;
  if (order <= opts.exact_limit) {
    std::set<Element> powers;
    for (const auto& g : enumerate_elements(N)) {
      Element w = power(g, q);
      if (!w.is_identity()) powers.insert(std::move(w));
    }
    return normal_closure(std::vector<Element>(powers.begin(), powers.end()), P);
  }

  std::vector<Element> slate = N.generators();
  const std::size_t base_count = slate.size();
  for (std::size_t i = 0; i < base_count; ++i)
    for (std::size_t j = i; j < base_count; ++j) slate.push_back(multiply(slate[i], slate[j]));

  std::vector<Element> gens;
  for (const auto& g : slate) {
    Element w = power(g, q);
    if (!w.is_identity()) gens.push_back(std::move(w));
  }
  NormalSubgroup K = normal_closure(gens, P);

  std::mt19937_64 rng(opts.seed);
  const int batch = opts.batch > 0 ? opts.batch : 2 * (N.log_order() + 1);
  int quiet = 0;
  while (quiet < opts.confirm_rounds) {
    std::vector<Element> fresh;
    for (int i = 0; i < batch; ++i) {
      Element w = power(random_element(N, rng), q);
      if (!K.contains(w)) fresh.push_back(std::move(w));
    }
    if (fresh.empty()) {
      ++quiet;
      continue;
    }
    quiet = 0;
    std::vector<Element> all = K.generators();
    all.insert(all.end(), fresh.begin(), fresh.end());
    K = normal_closure(all, P);
  }
  return K;
}

}  // namespace hspec
