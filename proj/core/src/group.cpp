#include "hspec/group.hpp"

#include <cctype>
#include <string>
#include <tuple>

#include <nlohmann/json.hpp>

#include "hspec/errors.hpp"

namespace hspec {

GroupParams GroupParams::make(int p, int k) {
  if (!is_odd_prime(p))
    throw ParameterError("p = " + std::to_string(p) + " is not an odd prime");
  if (k < 1) throw ParameterError("k must be at least 1");
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > 4096) throw ParameterError("p^k is too large for this engine");
  }
  GroupParams P;
  P.p = p;
  P.k = k;
  P.n = static_cast<int>(n);
  P.zdim = static_cast<int>(n * (n - 1) / 2);
  return P;
}

namespace {

void check_same(const GroupParams& a, const GroupParams& b) {
  if (!(a == b)) throw ParameterError("elements belong to different groups");
}

int half(int p) { return (p + 1) / 2; }

int mod_n(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

Element::Element(const GroupParams& params)
    : params_(params),
      v_(static_cast<std::size_t>(params.n), 0),
      m_(static_cast<std::size_t>(params.zdim), 0) {}

Element::Element(const GroupParams& params, int a, Vector v, Vector m)
    : params_(params), a_(mod_n(a, params.n)), v_(std::move(v)), m_(std::move(m)) {
  if (v_.size() != static_cast<std::size_t>(params.n) ||
      m_.size() != static_cast<std::size_t>(params.zdim))
    throw DimensionMismatch("element vectors do not match the group parameters");
  for (auto& e : v_) e = mod_p(e, params.p);
  for (auto& e : m_) e = mod_p(e, params.p);
}

bool Element::is_identity() const { return a_ == 0 && is_zero(v_) && is_zero(m_); }

bool Element::in_center() const { return a_ == 0 && is_zero(v_); }

bool operator<(const Element& g, const Element& h) {
  return std::tie(g.a_, g.v_, g.m_) < std::tie(h.a_, h.v_, h.m_);
}

Element identity(const GroupParams& P) { return Element(P); }

Element x_gen(const GroupParams& P) {
  return Element(P, 1, Vector(static_cast<std::size_t>(P.n), 0),
                 Vector(static_cast<std::size_t>(P.zdim), 0));
}

Element y_gen(const GroupParams& P) { return base_generator(P, 0); }

Element base_generator(const GroupParams& P, int i) {
  if (i < 0 || i >= P.n) throw ParameterError("base generator index out of range");
  Vector v(static_cast<std::size_t>(P.n), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return Element(P, 0, std::move(v), Vector(static_cast<std::size_t>(P.zdim), 0));
}

Element central_generator(const GroupParams& P, int i, int j) {
  if (i < 0 || j < 0 || i >= P.n || j >= P.n || i == j)
    throw ParameterError("central generator needs two distinct base indices");
  Vector m(static_cast<std::size_t>(P.zdim), 0);
  if (i < j)
    m[P.pair_index(i, j)] = 1;
  else
    m[P.pair_index(j, i)] = P.p - 1;
  return Element(P, 0, Vector(static_cast<std::size_t>(P.n), 0), std::move(m));
}

Element x_power(const GroupParams& P, long long e) {
  return Element(P, mod_n(e, P.n), Vector(static_cast<std::size_t>(P.n), 0),
                 Vector(static_cast<std::size_t>(P.zdim), 0));
}

Element conjugate_by_x_power(const Element& g, long long e) {
  const GroupParams& P = g.params_;
  const int n = P.n, p = P.p;
  const int s = mod_n(e, n);
  if (s == 0) return g;

  Element out(P);
  out.a_ = g.a_;
  auto sigma = [&](int i) { return (i + s) % n; };
  for (int i = 0; i < n; ++i) out.v_[static_cast<std::size_t>(sigma(i))] = g.v_[static_cast<std::size_t>(i)];

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int si = sigma(i), sj = sigma(j);
      const int cij = g.m_[P.pair_index(i, j)];
      const long long vivj = static_cast<long long>(g.v_[static_cast<std::size_t>(i)]) *
                             g.v_[static_cast<std::size_t>(j)];
      if (si < sj) {
        auto& slot = out.m_[P.pair_index(si, sj)];
        slot = mod_p(slot + cij, p);
      } else {
        // [b_i,b_j] -> [b_si,b_sj] = [b_sj,b_si]^-1, and b_sj must move left
        // past b_si in the base product.
        auto& slot = out.m_[P.pair_index(sj, si)];
        slot = mod_p(slot - cij - vivj, p);
      }
    }
  }
  return out;
}

Element multiply(const Element& g, const Element& h) {
  check_same(g.params_, h.params_);
  const GroupParams& P = g.params_;
  const int n = P.n, p = P.p;

  // (x^a u)(x^b w) = x^{a+b} u^{x^b} w.
  Element u = conjugate_by_x_power(g, h.a_);
  Element out(P);
  out.a_ = mod_n(static_cast<long long>(g.a_) + h.a_, n);
  for (std::size_t i = 0; i < out.v_.size(); ++i) out.v_[i] = mod_p(u.v_[i] + h.v_[i], p);
  for (std::size_t i = 0; i < out.m_.size(); ++i) out.m_[i] = mod_p(u.m_[i] + h.m_[i], p);
  // Collect b_l^{u_l} past b_j^{w_j} for j < l: contributes [b_j,b_l]^{-u_l w_j}.
  for (int j = 0; j < n; ++j) {
    const int wj = h.v_[static_cast<std::size_t>(j)];
    if (wj == 0) continue;
    for (int l = j + 1; l < n; ++l) {
      const int ul = u.v_[static_cast<std::size_t>(l)];
      if (ul == 0) continue;
      auto& slot = out.m_[P.pair_index(j, l)];
      slot = mod_p(slot - static_cast<long long>(ul) * wj, p);
    }
  }
  return out;
}

Element inverse(const Element& g) {
  const GroupParams& P = g.params_;
  const int n = P.n, p = P.p;
  // (u, C)^-1 = (-u, -C - q(u)) with q(u)_{ij} = u_i u_j, then shift by -a.
  Element h(P);
  for (std::size_t i = 0; i < h.v_.size(); ++i) h.v_[i] = mod_p(-g.v_[i], p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::size_t idx = P.pair_index(i, j);
      h.m_[idx] = mod_p(-static_cast<long long>(g.m_[idx]) -
                            static_cast<long long>(g.v_[static_cast<std::size_t>(i)]) *
                                g.v_[static_cast<std::size_t>(j)],
                        p);
    }
  }
  Element out = conjugate_by_x_power(h, -static_cast<long long>(g.a_));
  out.a_ = mod_n(-static_cast<long long>(g.a_), n);
  return out;
}

Element power(const Element& g, long long e) {
  Element base = e < 0 ? inverse(g) : g;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Element result = identity(g.params());
  while (k > 0) {
    if (k & 1ULL) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

Element commutator(const Element& g, const Element& h) {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

Element iterated_commutator(const Element& g, const Element& h, int times) {
  Element out = g;
  for (int i = 0; i < times && !out.is_identity(); ++i) out = commutator(out, h);
  return out;
}

Element conjugate(const Element& g, const Element& h) {
  return multiply(multiply(inverse(h), g), h);
}

Vector to_lie(const Element& h) {
  if (!h.in_base()) throw ParameterError("Lie coordinates exist only on H_k");
  const GroupParams& P = h.params();
  const int n = P.n, p = P.p;
  const long long inv2 = half(p);
  Vector out(P.lie_dim());
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = h.base()[static_cast<std::size_t>(i)];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::size_t idx = P.pair_index(i, j);
      const long long q = static_cast<long long>(h.base()[static_cast<std::size_t>(i)]) *
                          h.base()[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(n) + idx] = mod_p(h.central()[idx] + inv2 * q, p);
    }
  return out;
}

Element from_lie(const GroupParams& P, const Vector& lie) {
  if (lie.size() != P.lie_dim()) throw DimensionMismatch("Lie vector has the wrong length");
  const int n = P.n, p = P.p;
  const long long inv2 = half(p);
  Vector v(lie.begin(), lie.begin() + n);
  Vector m(static_cast<std::size_t>(P.zdim));
  for (auto& e : v) e = mod_p(e, p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::size_t idx = P.pair_index(i, j);
      const long long q = static_cast<long long>(v[static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(j)];
      m[idx] = mod_p(lie[static_cast<std::size_t>(n) + idx] - inv2 * q, p);
    }
  return Element(P, 0, std::move(v), std::move(m));
}

Vector lie_bracket(const GroupParams& P, const Vector& X, const Vector& Y) {
  if (X.size() != P.lie_dim() || Y.size() != P.lie_dim())
    throw DimensionMismatch("Lie vector has the wrong length");
  const int n = P.n, p = P.p;
  Vector out(P.lie_dim(), 0);
  for (int i = 0; i < n; ++i) {
    const long long xi = X[static_cast<std::size_t>(i)], yi = Y[static_cast<std::size_t>(i)];
    if (xi == 0 && yi == 0) continue;
    for (int j = i + 1; j < n; ++j) {
      const long long v = xi * Y[static_cast<std::size_t>(j)] - X[static_cast<std::size_t>(j)] * yi;
      if (v != 0) out[static_cast<std::size_t>(n) + P.pair_index(i, j)] = mod_p(v, p);
    }
  }
  return out;
}

Vector lie_shift(const GroupParams& P, const Vector& X, long long e) {
  if (X.size() != P.lie_dim()) throw DimensionMismatch("Lie vector has the wrong length");
  const int n = P.n, p = P.p;
  const int s = mod_n(e, n);
  if (s == 0) return X;
  Vector out(P.lie_dim(), 0);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>((i + s) % n)] = X[static_cast<std::size_t>(i)];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int coeff = X[static_cast<std::size_t>(n) + P.pair_index(i, j)];
      if (coeff == 0) continue;
      const int si = (i + s) % n, sj = (j + s) % n;
      if (si < sj)
        out[static_cast<std::size_t>(n) + P.pair_index(si, sj)] = coeff;
      else
        out[static_cast<std::size_t>(n) + P.pair_index(sj, si)] = mod_p(-coeff, p);
    }
  return out;
}

Element c(int i, const GroupParams& P) {
  if (i < 1) throw ParameterError("c_i needs i >= 1");
  Element out = y_gen(P);
  const Element x = x_gen(P);
  for (int t = 1; t < i; ++t) out = commutator(out, x);
  return out;
}

Element c2(int i, int j, const GroupParams& P) {
  if (i < 1 || j < 1) throw ParameterError("c_{i,j} needs i, j >= 1");
  Element out = commutator(c(i, P), y_gen(P));
  return iterated_commutator(out, x_gen(P), j - 1);
}

Element zgen(int i, int j, const GroupParams& P) {
  if (i < 1 || j < 1) throw ParameterError("z_{i,j} needs i, j >= 1");
  if (i <= j) return identity(P);
  return commutator(c(i, P), c(j, P));
}

Element z_pair(int i, int j, const GroupParams& P) {
  if (i < 1 || j < 1) return identity(P);
  return commutator(c(i, P), c(j, P));
}

NamedElements::NamedElements(const GroupParams& P) : params_(P) { c_.push_back(y_gen(P)); }

const Element& NamedElements::c(int i) {
  if (i < 1) throw ParameterError("c_i needs i >= 1");
  const Element x = x_gen(params_);
  while (static_cast<int>(c_.size()) < i) {
    // Once c_i is trivial every later c_j is too.
    if (c_.back().is_identity()) return c_.back();
    c_.push_back(commutator(c_.back(), x));
  }
  return c_[static_cast<std::size_t>(i - 1)];
}

Element NamedElements::z_pair(int i, int j) {
  if (i < 1 || j < 1) return identity(params_);
  const Element ci = c(i);
  return commutator(ci, c(j));
}

Word Word::parse(std::string_view text) {
  Word w;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    Letter letter;
    switch (ch) {
      case 'x': letter = Letter::x; break;
      case 'X': letter = Letter::x_inv; break;
      case 'y': letter = Letter::y; break;
      case 'Y': letter = Letter::y_inv; break;
      default:
        throw ParameterError(std::string("unexpected character in word: ") + ch);
    }
    if (text.substr(pos + 1, 3) == "^-1") {
      letter = letter == Letter::x ? Letter::x_inv
             : letter == Letter::y ? Letter::y_inv
                                   : throw ParameterError("cannot invert an inverse letter");
      pos += 3;
    }
    w.letters.push_back(letter);
  }
  return w;
}

Word Word::operator+(const Word& other) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
  return w;
}

Element evaluate_word(const Word& w, const GroupParams& P) {
  const Element x = x_gen(P), y = y_gen(P);
  const Element xi = inverse(x), yi = inverse(y);
  Element out = identity(P);
  for (Letter l : w.letters) {
    switch (l) {
      case Letter::x: out = multiply(out, x); break;
      case Letter::x_inv: out = multiply(out, xi); break;
      case Letter::y: out = multiply(out, y); break;
      case Letter::y_inv: out = multiply(out, yi); break;
    }
  }
  return out;
}

nlohmann::json to_json(const Element& g) {
  return nlohmann::json{{"a", g.top()}, {"v", g.base()}, {"M", g.central()}};
}

Element element_from_json(const GroupParams& P, const nlohmann::json& j) {
  try {
    const int a = j.at("a").get<int>();
    Vector v = j.at("v").get<Vector>();
    Vector m = j.at("M").get<Vector>();
    if (a < 0 || a >= P.n) throw ParameterError("top exponent out of range");
    for (int e : v)
      if (e < 0 || e >= P.p) throw ParameterError("base entry out of range");
    for (int e : m)
      if (e < 0 || e >= P.p) throw ParameterError("central entry out of range");
    return Element(P, a, std::move(v), std::move(m));
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed element JSON: ") + e.what());
  }
}

}  // namespace hspec
