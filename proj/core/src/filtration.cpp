#include "hspec/filtration.hpp"

#include <map>
#include <string>

#include "hspec/errors.hpp"

namespace hspec {

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::gamma: return "gamma";
    case SeriesKind::L: return "L";
    case SeriesKind::D: return "D";
    case SeriesKind::P: return "P";
    case SeriesKind::Pstar: return "Pstar";
    case SeriesKind::F: return "F";
  }
  return "?";
}

SeriesKind parse_series_kind(std::string_view name) {
  for (SeriesKind k : kAllSeriesKinds)
    if (to_string(k) == name) return k;
  throw ParameterError("unknown series kind '" + std::string(name) + "'");
}

int first_index(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::gamma:
    case SeriesKind::L:
    case SeriesKind::D: return 1;
    default: return 0;
  }
}

FiltrationSeries::FiltrationSeries(SeriesKind kind, const GroupParams& P,
                                   std::vector<NormalSubgroup> terms)
    : kind_(kind),
      params_(P),
      first_(hspec::first_index(kind)),
      terms_(std::move(terms)),
      whole_(NormalSubgroup::whole(P)) {
  if (terms_.empty() || !terms_.back().is_trivial())
    throw ParameterError("a filtration series must end in the trivial group");
}

const NormalSubgroup& FiltrationSeries::term(int i) const {
  if (i < first_) return whole_;
  if (i > last_index()) return terms_.back();
  return terms_[static_cast<std::size_t>(i - first_)];
}

namespace {

class SeriesBuilder {
 public:
  SeriesBuilder(const GroupParams& P, const SeriesOptions& opts)
      : P_(P), opts_(opts), G_(NormalSubgroup::whole(P)) {
    limit_ = opts.max_terms > 0 ? opts.max_terms : 4 * P.log_order() + 8;
  }

  FiltrationSeries build(SeriesKind kind) {
    std::vector<NormalSubgroup> terms{G_};
    auto push = [&](NormalSubgroup next) {
      if (static_cast<int>(terms.size()) >= limit_)
        throw BudgetError("series " + std::string(to_string(kind)) + " did not reach the trivial group");
      terms.push_back(std::move(next));
    };

    switch (kind) {
      case SeriesKind::gamma:
        while (!terms.back().is_trivial()) push(commutator_subgroup(terms.back(), G_));
        break;
      case SeriesKind::L:
        while (!terms.back().is_trivial())
          push(product(power(terms.back(), 1), commutator_subgroup(terms.back(), G_)));
        break;
      case SeriesKind::D:
        // terms[i-1] holds D_i.
        for (int i = 2; !terms.back().is_trivial(); ++i) {
          const int up = (i + P_.p - 1) / P_.p;
          NormalSubgroup next = power(terms[static_cast<std::size_t>(up - 1)], 1);
          for (int j = 1; 2 * j <= i; ++j)
            next = product(next, commutator_subgroup(terms[static_cast<std::size_t>(j - 1)],
                                                     terms[static_cast<std::size_t>(i - j - 1)]));
          push(std::move(next));
        }
        break;
      case SeriesKind::P:
        for (int i = 1; !terms.back().is_trivial(); ++i) push(power(G_, i));
        break;
      case SeriesKind::Pstar:
        while (!terms.back().is_trivial()) push(power(terms.back(), 1));
        break;
      case SeriesKind::F:
        while (!terms.back().is_trivial())
          push(product(power(terms.back(), 1), commutator_subgroup(terms.back(), terms.back())));
        break;
    }
    return FiltrationSeries(kind, P_, std::move(terms));
  }

 private:
  // Power subgroups are memoised; the D recursion asks for the same ones again.
  NormalSubgroup power(const NormalSubgroup& N, int e) {
    auto key = std::make_pair(std::make_pair(N.top_index(), N.lie().basis()), e);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    NormalSubgroup result = power_subgroup(N, e, opts_.power);
    cache_.emplace(std::move(key), result);
    return result;
  }

  GroupParams P_;
  SeriesOptions opts_;
  NormalSubgroup G_;
  int limit_;
  std::map<std::pair<std::pair<int, std::vector<Vector>>, int>, NormalSubgroup> cache_;
};

}  // namespace

FiltrationSeries series(SeriesKind kind, const GroupParams& P, const SeriesOptions& opts) {
  return SeriesBuilder(P, opts).build(kind);
}

}  // namespace hspec
