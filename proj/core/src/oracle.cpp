#include "hspec/oracle.hpp"

#include <algorithm>
#include <deque>

#include "hspec/errors.hpp"

namespace hspec {

namespace {

constexpr int kMaxOrder = 4096;

// a, then u_0..u_{n-1}, then the wedge coordinates w_{ij} (i < j) in pair order.
struct Coords {
  int a = 0;
  std::vector<int> lie;
};

class Codec {
 public:
  explicit Codec(const GroupParams& P) : P_(P), len_(1 + P.n + P.zdim) {}

  int encode(const Coords& c) const {
    int code = 0;
    for (int t = static_cast<int>(c.lie.size()) - 1; t >= 0; --t) code = code * P_.p + c.lie[t];
    return code * P_.n + c.a;
  }

  Coords decode(int code) const {
    Coords c;
    c.a = code % P_.n;
    code /= P_.n;
    c.lie.resize(len_ - 1);
    for (auto& d : c.lie) {
      d = code % P_.p;
      code /= P_.p;
    }
    return c;
  }

  // Image of a Lie vector under conjugation by x^s: e_i -> e_{i+s}.
  std::vector<int> shift(const std::vector<int>& X, int s) const {
    const int n = P_.n;
    std::vector<int> out(X.size(), 0);
    for (int i = 0; i < n; ++i) out[(i + s) % n] = X[i];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int w = X[n + P_.pair_index(i, j)];
        if (w == 0) continue;
        const int si = (i + s) % n, sj = (j + s) % n;
        if (si < sj)
          out[n + P_.pair_index(si, sj)] = w;
        else
          out[n + P_.pair_index(sj, si)] = mod_p(-w, P_.p);
      }
    return out;
  }

  // X + Y + (1/2)[X, Y] with [X, Y]_{ij} = X_i Y_j - X_j Y_i.
  std::vector<int> bch(const std::vector<int>& X, const std::vector<int>& Y) const {
    const int n = P_.n, p = P_.p;
    const int half = (p + 1) / 2;
    std::vector<int> out(X.size());
    for (std::size_t t = 0; t < X.size(); ++t) out[t] = (X[t] + Y[t]) % p;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const long long br = static_cast<long long>(X[i]) * Y[j] - static_cast<long long>(X[j]) * Y[i];
        int& w = out[n + P_.pair_index(i, j)];
        w = mod_p(w + half * br, p);
      }
    return out;
  }

  Coords multiply(const Coords& g, const Coords& h) const {
    // (x^a X)(x^b Y) = x^(a+b) X^(x^b) Y
    return {(g.a + h.a) % P_.n, bch(shift(g.lie, h.a), h.lie)};
  }

 private:
  GroupParams P_;
  int len_;
};

}  // namespace

OracleGroup::OracleGroup(const GroupParams& P) : params_(P) {
  long long order = 1;
  for (int t = 0; t < P.log_order(); ++t) {
    order *= P.p;
    if (order > kMaxOrder) throw OracleError("group too large for the enumeration oracle");
  }
  size_ = static_cast<int>(order);
  const Codec codec(P);

  std::vector<Coords> all(size_);
  for (int g = 0; g < size_; ++g) all[g] = codec.decode(g);

  table_.resize(static_cast<std::size_t>(size_) * size_);
  for (int g = 0; g < size_; ++g)
    for (int h = 0; h < size_; ++h)
      table_[static_cast<std::size_t>(g) * size_ + h] =
          static_cast<std::uint16_t>(codec.encode(codec.multiply(all[g], all[h])));

  inverse_.assign(size_, -1);
  for (int g = 0; g < size_; ++g)
    for (int h = 0; h < size_; ++h)
      if (mul(g, h) == 0) {
        inverse_[g] = h;
        break;
      }
  if (std::find(inverse_.begin(), inverse_.end(), -1) != inverse_.end())
    throw OracleError("multiplication table has no inverses");

  Coords cx{1, std::vector<int>(P.lie_dim(), 0)};
  Coords cy{0, std::vector<int>(P.lie_dim(), 0)};
  cy.lie[0] = 1;
  x_ = codec.encode(cx);
  y_ = codec.encode(cy);
}

int OracleGroup::pow(int g, long long e) const {
  if (e < 0) return pow(inv(g), -e);
  int out = 0;
  for (long long t = 0; t < e; ++t) out = mul(out, g);
  return out;
}

Element OracleGroup::to_element(int g) const {
  const Coords c = Codec(params_).decode(g);
  return multiply(x_power(params_, c.a), from_lie(params_, Vector(c.lie.begin(), c.lie.end())));
}

OracleGroup::Set OracleGroup::trivial() const {
  Set s(size_, false);
  s[0] = true;
  return s;
}

int OracleGroup::count(const Set& s) { return static_cast<int>(std::count(s.begin(), s.end(), true)); }

OracleGroup::Set OracleGroup::generated_by_xy() const { return closure({x_, y_}); }

bool OracleGroup::light_associative() const {
  for (int s : {x_, y_})
    for (int g = 0; g < size_; ++g) {
      const int gs = mul(g, s);
      for (int h = 0; h < size_; ++h)
        if (mul(gs, h) != mul(g, mul(s, h))) return false;
    }
  return true;
}

bool OracleGroup::matches_engine_on_generators() const {
  std::vector<Element> elems;
  elems.reserve(size_);
  for (int g = 0; g < size_; ++g) elems.push_back(to_element(g));
  for (int s : {x_, y_})
    for (int g = 0; g < size_; ++g)
      if (!(multiply(elems[g], elems[s]) == elems[mul(g, s)])) return false;
  return true;
}

OracleGroup::Set OracleGroup::closure(const std::vector<int>& gens) const {
  Set seen = trivial();
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    for (int s : gens) {
      const int h = mul(g, s);
      if (!seen[h]) {
        seen[h] = true;
        queue.push_back(h);
      }
    }
  }
  return seen;
}

OracleGroup::Set OracleGroup::normal_closure(std::vector<int> gens) const {
  while (true) {
    const Set s = closure(gens);
    bool grown = false;
    const std::vector<int> current = gens;
    for (int g : current)
      for (int t : {x_, y_}) {
        const int c = mul(mul(inv(t), g), t);
        if (!s[c]) {
          gens.push_back(c);
          grown = true;
        }
      }
    if (!grown) return s;
  }
}

std::vector<int> OracleGroup::small_generating_set(const Set& s) const {
  std::vector<int> gens;
  Set reached = trivial();
  for (int g = 0; g < size_; ++g)
    if (s[g] && !reached[g]) {
      gens.push_back(g);
      reached = closure(gens);
    }
  return gens;
}

OracleGroup::Set OracleGroup::product(const Set& a, const Set& b) const {
  std::vector<int> gens = small_generating_set(a);
  const std::vector<int> gb = small_generating_set(b);
  gens.insert(gens.end(), gb.begin(), gb.end());
  return closure(gens);
}

OracleGroup::Set OracleGroup::commutator(const Set& a, const Set& b) const {
  // For normal a, b: the normal closure of commutators of generators.
  std::vector<int> gens;
  for (int g : small_generating_set(a))
    for (int h : small_generating_set(b)) gens.push_back(comm(g, h));
  return normal_closure(gens);
}

OracleGroup::Set OracleGroup::power(const Set& a, int e) const {
  long long q = 1;
  for (int t = 0; t < e; ++t) q *= params_.p;
  Set powers(size_, false);
  std::vector<int> gens;
  for (int g = 0; g < size_; ++g)
    if (a[g]) {
      const int h = pow(g, q);
      if (!powers[h]) {
        powers[h] = true;
        gens.push_back(h);
      }
    }
  return closure(gens);
}

std::vector<OracleGroup::Set> OracleGroup::series(SeriesKind kind) const {
  const int guard = 4 * params_.log_order() + 8;
  const Set G = whole();
  std::vector<Set> terms{G};
  auto done = [&] { return count(terms.back()) == 1; };
  auto at = [&](int i) -> const Set& { return terms[i - first_index(kind)]; };
  const int p = params_.p;

  for (int i = first_index(kind) + 1; !done(); ++i) {
    if (static_cast<int>(terms.size()) > guard) throw OracleError("oracle series did not terminate");
    Set next;
    switch (kind) {
      case SeriesKind::gamma:
        next = commutator(at(i - 1), G);
        break;
      case SeriesKind::L:
        next = product(power(at(i - 1), 1), commutator(at(i - 1), G));
        break;
      case SeriesKind::D: {
        next = power(at((i + p - 1) / p), 1);
        for (int j = 1; j < i; ++j) next = product(next, commutator(at(j), at(i - j)));
        break;
      }
      case SeriesKind::P:
        next = power(G, i);
        break;
      case SeriesKind::Pstar:
        next = power(at(i - 1), 1);
        break;
      case SeriesKind::F:
        next = product(power(at(i - 1), 1), commutator(at(i - 1), at(i - 1)));
        break;
    }
    terms.push_back(std::move(next));
  }
  return terms;
}

bool same_subgroup(const OracleGroup& oracle, const OracleGroup::Set& s, const Subgroup& engine) {
  if (!(oracle.params() == engine.params())) return false;
  long long engine_order = 1;
  for (int t = 0; t < engine.log_order(); ++t) engine_order *= oracle.params().p;
  if (engine_order != OracleGroup::count(s)) return false;
  for (int g = 0; g < oracle.size(); ++g)
    if (s[g] && !engine.contains(oracle.to_element(g))) return false;
  return true;
}

}  // namespace hspec
