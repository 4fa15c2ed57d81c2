#pragma once

#include <vector>

#include "error.hpp"
#include "partition.hpp"

namespace w2b {

/// Matrix whose rows and columns are indexed by partitions.
template <class T>
struct LabeledMatrix {
  std::vector<Partition> rows, cols;
  std::vector<std::vector<T>> a;

  LabeledMatrix() = default;
  LabeledMatrix(std::vector<Partition> r, std::vector<Partition> c)
      : rows(std::move(r)), cols(std::move(c)),
        a(rows.size(), std::vector<T>(cols.size(), T{})) {}

  T& at(int i, int j) { return a[i][j]; }
  const T& at(int i, int j) const { return a[i][j]; }
  int n_rows() const { return static_cast<int>(rows.size()); }
  int n_cols() const { return static_cast<int>(cols.size()); }

  bool operator==(const LabeledMatrix&) const = default;
};

template <class T>
LabeledMatrix<T> matmul(const LabeledMatrix<T>& x, const LabeledMatrix<T>& y) {
  require(x.n_cols() == y.n_rows(), errc::invalid_argument, "matmul: shape mismatch");
  LabeledMatrix<T> z(x.rows, y.cols);
  for (int i = 0; i < x.n_rows(); ++i)
    for (int k = 0; k < x.n_cols(); ++k) {
      if (x.at(i, k) == T{}) continue;
      for (int j = 0; j < y.n_cols(); ++j) z.at(i, j) = z.at(i, j) + x.at(i, k) * y.at(k, j);
    }
  return z;
}

template <class T>
LabeledMatrix<T> transpose(const LabeledMatrix<T>& x) {
  LabeledMatrix<T> z(x.cols, x.rows);
  for (int i = 0; i < x.n_rows(); ++i)
    for (int j = 0; j < x.n_cols(); ++j) z.at(j, i) = x.at(i, j);
  return z;
}

template <class T>
bool is_identity(const LabeledMatrix<T>& x) {
  if (x.n_rows() != x.n_cols()) return false;
  for (int i = 0; i < x.n_rows(); ++i)
    for (int j = 0; j < x.n_cols(); ++j)
      if (x.at(i, j) != (i == j ? T{1} : T{})) return false;
  return true;
}

/// Exact inverse of a lower unitriangular matrix by back substitution.
/// Works over any ring type with +, *, unary -, T{} and T{1}.
template <class T>
LabeledMatrix<T> invert_unitriangular(const LabeledMatrix<T>& m) {
  require(m.n_rows() == m.n_cols(), errc::invalid_argument, "inversion needs a square matrix");
  int n = m.n_rows();
  for (int i = 0; i < n; ++i) {
    require(m.at(i, i) == T{1}, errc::invalid_argument, "matrix is not unitriangular");
    for (int j = i + 1; j < n; ++j)
      require(m.at(i, j) == T{}, errc::invalid_argument, "matrix is not lower triangular");
  }
  LabeledMatrix<T> x(m.rows, m.cols);
  for (int i = 0; i < n; ++i) {
    x.at(i, i) = T{1};
    for (int j = i - 1; j >= 0; --j) {
      T acc{};
      for (int k = j; k < i; ++k) acc = acc + m.at(i, k) * x.at(k, j);
      x.at(i, j) = -acc;
    }
  }
  return x;
}

}  // namespace w2b
