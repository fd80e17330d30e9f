#pragma once

// Small dense exact-rational linear algebra used by the polyhedral engine:
// rank tracking, inversion, linear solves, null spaces. Dimensions stay tiny
// (<= 42), so plain Gauss-Jordan over mpq is the right tool.

#include <optional>
#include <vector>

#include "monocone/rational.hpp"

namespace monocone {

// Incremental row space: try_add reduces the row against the current basis
// and keeps it when independent.
class RowBasis {
public:
  explicit RowBasis(int dim) : dim_(dim) {}

  bool try_add(QVec row);
  int rank() const { return static_cast<int>(rows_.size()); }

private:
  int dim_;
  std::vector<QVec> rows_;       // echelon rows, pivot normalized to 1
  std::vector<int> pivot_cols_;
};

int rank_of(const std::vector<QVec>& rows, int dim);
int rank_of(const std::vector<ZVec>& rows, int dim);

// Inverse of a square matrix; Internal error when singular.
std::vector<QVec> invert(const std::vector<QVec>& m);

// Unique solution of a square nonsingular system.
QVec solve(const std::vector<QVec>& m, const QVec& rhs);

// Basis of { y : <row, y> = 0 for all rows }, deterministic echelon order,
// entries integer-normalized with the first nonzero coordinate positive.
std::vector<ZVec> null_space(const std::vector<QVec>& rows, int dim);

}  // namespace monocone
