#include "monocone/linalg.hpp"

#include <algorithm>

namespace monocone {

bool RowBasis::try_add(QVec row) {
  check_internal(static_cast<int>(row.size()) == dim_, "RowBasis: dimension mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rat& factor = row[pivot_cols_[k]];
    if (factor != 0) {
      Rat f = factor;  // row[pivot] mutates below
      for (int j = 0; j < dim_; ++j) row[j] -= f * rows_[k][j];
    }
  }
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (row[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Rat inv = 1 / row[pivot];
  for (int j = 0; j < dim_; ++j) row[j] *= inv;
  rows_.push_back(std::move(row));
  pivot_cols_.push_back(pivot);
  return true;
}

int rank_of(const std::vector<QVec>& rows, int dim) {
  RowBasis b(dim);
  for (const QVec& r : rows) b.try_add(r);
  return b.rank();
}

int rank_of(const std::vector<ZVec>& rows, int dim) {
  RowBasis b(dim);
  for (const ZVec& r : rows) b.try_add(to_rational(r));
  return b.rank();
}

std::vector<QVec> invert(const std::vector<QVec>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<QVec> a = m;
  std::vector<QVec> inv(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    check_internal(static_cast<int>(m[i].size()) == n, "invert: not square");
    inv[i][i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    check_internal(pivot >= 0, "invert: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    Rat scale = 1 / a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

QVec solve(const std::vector<QVec>& m, const QVec& rhs) {
  const int n = static_cast<int>(m.size());
  check_internal(static_cast<int>(rhs.size()) == n, "solve: size mismatch");
  std::vector<QVec> a = m;
  QVec b = rhs;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    check_internal(pivot >= 0, "solve: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    Rat scale = 1 / a[col][col];
    for (int j = 0; j < n; ++j) a[col][j] *= scale;
    b[col] *= scale;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::vector<ZVec> null_space(const std::vector<QVec>& rows, int dim) {
  // Reduce to RREF, then read one basis vector per free column.
  std::vector<QVec> rref;
  std::vector<int> pivot_cols;
  {
    int pivot_row = 0;
    std::vector<QVec> a = rows;
    for (int col = 0; col < dim && pivot_row < static_cast<int>(a.size()); ++col) {
      int pr = -1;
      for (int r = pivot_row; r < static_cast<int>(a.size()); ++r)
        if (a[r][col] != 0) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(a[pivot_row], a[pr]);
      Rat scale = 1 / a[pivot_row][col];
      for (int j = 0; j < dim; ++j) a[pivot_row][j] *= scale;
      for (int r = 0; r < static_cast<int>(a.size()); ++r) {
        if (r == pivot_row || a[r][col] == 0) continue;
        Rat f = a[r][col];
        for (int j = 0; j < dim; ++j) a[r][j] -= f * a[pivot_row][j];
      }
      rref.push_back(a[pivot_row]);
      pivot_cols.push_back(col);
      ++pivot_row;
    }
  }

  std::vector<char> is_pivot(dim, 0);
  for (int c : pivot_cols) is_pivot[c] = 1;
  std::vector<ZVec> out;
  for (int free_col = 0; free_col < dim; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(dim, Rat(0));
    v[free_col] = 1;
    for (std::size_t k = 0; k < rref.size(); ++k) v[pivot_cols[k]] = -rref[k][free_col];
    ZVec z = normalize_ray(v);
    // Orientation is a free choice here; fix it for canonical output.
    for (const Int& e : z) {
      if (e == 0) continue;
      if (e < 0)
        for (Int& w : z) w = -w;
      break;
    }
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace monocone
