#include "monocone/cone_vectors.hpp"

#include <map>
#include <tuple>

namespace monocone {

int s2_dimension(int n) { return n * (n - 1); }

int s2_index(int n, int from, int to) {
  check_internal(from != to && from >= 0 && to >= 0 && from < n && to < n, "bad S2 pair");
  return from * (n - 1) + (to < from ? to : to - 1);
}

std::pair<int, int> s2_pair(int n, int k) {
  int from = k / (n - 1), off = k % (n - 1);
  return {from, off < from ? off : off + 1};
}

RateVector RateVector::zero(const Poset& p) {
  return RateVector{QVec(s2_dimension(p.size()), Rat(0))};
}

RateVector RateVector::from_rates(
    const Poset& p, const std::vector<std::tuple<std::string, std::string, Rat>>& rates) {
  RateVector L = zero(p);
  const int n = p.size();
  for (const auto& [from, to, rate] : rates) {
    int x = p.index_of(from), y = p.index_of(to);
    if (x == y)
      throw Error(ErrorKind::ValidationError, "diagonal rate (" + from + "," + to + ")");
    if (rate < 0)
      throw Error(ErrorKind::ValidationError, "negative rate on (" + from + "," + to + ")");
    L.entries[s2_index(n, x, y)] += rate;
  }
  return L;
}

std::uint64_t RateVector::support() const {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entries[k] != 0) mask |= 1ull << k;
  return mask;
}

std::vector<InequalityVector> build_monotonicity_inequalities(const Poset& p) {
  const int n = p.size();
  const int dim = s2_dimension(n);
  std::vector<InequalityVector> out;
  std::map<std::vector<signed char>, bool> seen;

  // For each up-set and each ordered pair, at most one of the two cases of
  // the normal applies; incomparable pairs, x = y, and the trivial up-sets
  // all produce the zero vector and are dropped here.
  for (const UpSet& gamma : enumerate_upsets(p)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        std::vector<signed char> w(dim, 0);
        if (p.leq(x, y) && !gamma.contains(y)) {
          for (int z = 0; z < n; ++z)
            if (gamma.contains(z)) {
              w[s2_index(n, y, z)] = 1;
              w[s2_index(n, x, z)] = -1;
            }
        } else if (p.leq(y, x) && gamma.contains(y)) {
          // y in the up-set forces x in as well, so z runs outside both.
          for (int z = 0; z < n; ++z)
            if (!gamma.contains(z)) {
              w[s2_index(n, y, z)] = 1;
              w[s2_index(n, x, z)] = -1;
            }
        }
        bool zero = true;
        for (signed char c : w)
          if (c != 0) {
            zero = false;
            break;
          }
        if (zero) continue;
        if (!seen.emplace(w, true).second) continue;
        out.push_back(InequalityVector{std::move(w), gamma, x, y});
      }
  }
  return out;
}

std::vector<IndicatorRay> build_increasing_indicators(const Poset& p) {
  const int n = p.size();
  const int dim = s2_dimension(n);
  std::vector<IndicatorRay> out;
  for (IncreasingMap& f : enumerate_increasing_maps(p)) {
    if (f.is_identity()) continue;
    IndicatorRay ray;
    ray.entries.assign(dim, 0);
    for (int x = 0; x < n; ++x)
      if (f.table[x] != x) {
        int k = s2_index(n, x, f.table[x]);
        ray.entries[k] = 1;
        ray.support |= 1ull << k;
      }
    ray.map = std::move(f);
    out.push_back(std::move(ray));
  }
  return out;
}

MonotonicityVerdict is_monotone(const Poset& p, const RateVector& L) {
  return is_monotone(p, L, build_monotonicity_inequalities(p));
}

MonotonicityVerdict is_monotone(const Poset& p, const RateVector& L,
                                const std::vector<InequalityVector>& inequalities) {
  if (L.dimension() != s2_dimension(p.size()))
    throw Error(ErrorKind::IndexMismatch, "rate vector dimension does not match poset");
  for (const InequalityVector& w : inequalities) {
    Rat v = dot(L.entries, w.coeffs);
    if (v < 0) return {false, MonotonicityWitness{w.gamma, w.x, w.y, v}};
  }
  return {true, std::nullopt};
}

std::vector<InnerProductEntry> monotonicity_proof(
    const Poset& p, const RateVector& L, const std::vector<InequalityVector>& inequalities) {
  if (L.dimension() != s2_dimension(p.size()))
    throw Error(ErrorKind::IndexMismatch, "rate vector dimension does not match poset");
  std::vector<InnerProductEntry> out;
  out.reserve(inequalities.size());
  for (const InequalityVector& w : inequalities)
    out.push_back({w.gamma, w.x, w.y, dot(L.entries, w.coeffs)});
  return out;
}

}  // namespace monocone
