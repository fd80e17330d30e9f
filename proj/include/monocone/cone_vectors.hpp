#pragma once

// Cone algebra over a fixed poset: the half-space normals cutting out the
// monotone-generator cone, the indicator rays spanning the completely
// monotone one, and direct monotonicity testing of a rate vector.

#include <optional>
#include <string>
#include <vector>

#include "monocone/poset.hpp"
#include "monocone/rational.hpp"

namespace monocone {

// Coordinates run over S2 = S x S minus the diagonal, ordered
// lexicographically by (index(from), index(to)). Every vector in the repo
// uses this one ordering.
int s2_dimension(int n);
int s2_index(int n, int from, int to);
std::pair<int, int> s2_pair(int n, int k);

// Off-diagonal entries of a generator: nonnegative jump rates, dense over S2.
// Diagonal entries are determined by the rows summing to zero and never stored.
struct RateVector {
  QVec entries;

  static RateVector zero(const Poset& p);
  static RateVector from_rates(
      const Poset& p,
      const std::vector<std::tuple<std::string, std::string, Rat>>& rates);

  int dimension() const { return static_cast<int>(entries.size()); }
  // Bitmask of coordinates with nonzero rate (dimension <= 42 fits in 64 bits).
  std::uint64_t support() const;
};

// One half-space normal of the monotone cone, with its provenance triple.
// Coefficients are -1/0/+1 by construction.
struct InequalityVector {
  std::vector<signed char> coeffs;
  UpSet gamma;
  int x, y;
};

// Indicator vector of a non-identity increasing map: entry (v, f(v)) is 1
// for every non-fixed point v.
struct IndicatorRay {
  std::vector<signed char> entries;
  IncreasingMap map;
  std::uint64_t support = 0;
};

// All nonzero normals, duplicates removed, ordered by (up-set, x, y) in
// enumeration order.
std::vector<InequalityVector> build_monotonicity_inequalities(const Poset& p);

// One ray per non-identity increasing map, in map enumeration order.
std::vector<IndicatorRay> build_increasing_indicators(const Poset& p);

struct MonotonicityWitness {
  UpSet gamma;
  int x, y;
  Rat value;  // the negative inner product
};

struct MonotonicityVerdict {
  bool monotone;
  std::optional<MonotonicityWitness> violation;
};

// Evaluates every inequality against L; returns the first violation in the
// deterministic inequality order, if any.
MonotonicityVerdict is_monotone(const Poset& p, const RateVector& L);
MonotonicityVerdict is_monotone(const Poset& p, const RateVector& L,
                                const std::vector<InequalityVector>& inequalities);

struct InnerProductEntry {
  UpSet gamma;
  int x, y;
  Rat value;
};

// Inner products of L with every inequality, in order; the serialized
// monotonicity proof for reports.
std::vector<InnerProductEntry> monotonicity_proof(const Poset& p, const RateVector& L,
                                                  const std::vector<InequalityVector>& inequalities);

}  // namespace monocone
