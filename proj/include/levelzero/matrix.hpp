// levelzero: dense matrices templated on an exact scalar (integer or
// rational), with free-function linear algebra. Everything is exact:
// determinants use fraction-free (Bareiss) elimination, solving and rank use
// rational Gaussian elimination. Sizes in this project are tiny (rank <= 8),
// so the quadratic/cubic costs are irrelevant; determinism and exactness are
// what matter.
#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "levelzero/errors.hpp"
#include "levelzero/numeric.hpp"

namespace levelzero {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
      assert(static_cast<int>(row.size()) == cols_);
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  // Lexicographic order on (shape, entries); used for deterministic keying.
  bool operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t k = 0; k < data_.size(); ++k)
      if (data_[k] != o.data_[k]) return data_[k] < o.data_[k];
    return false;
  }

  const std::vector<T>& flat() const { return data_; }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  assert(a.cols() == b.rows());
  Matrix<T> r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  assert(a.cols() == static_cast<int>(x.size()));
  std::vector<T> r(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
  return r;
}

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Matrix<T> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Matrix<T> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

template <typename T>
Matrix<T> operator*(const T& c, const Matrix<T>& a) {
  Matrix<T> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

// Determinant by fraction-free Bareiss elimination; exact for integer T.
inline Int det(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// Row-reduce in place (Gauss-Jordan over Q); returns the rank and records
// pivot columns. Pivot choice is the first nonzero entry in column order, so
// the result is deterministic.
inline int row_reduce(RatMatrix& a, std::vector<int>* pivot_cols = nullptr) {
  int rank = 0;
  for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(rank, j), a(piv, j));
    Rat inv = 1 / a(rank, col);
    for (int j = 0; j < a.cols(); ++j) a(rank, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == rank || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

inline int rank_rational(const IntMatrix& m) {
  RatMatrix a = to_rational(m);
  return row_reduce(a);
}

// Solve m * x = b over Q; throws SingularMatrix if m is not invertible.
inline RatVec solve_rational(const IntMatrix& m, const RatVec& b) {
  assert(m.rows() == m.cols());
  assert(m.rows() == static_cast<int>(b.size()));
  int n = m.rows();
  RatMatrix a(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Rat(m(i, j));
    a(i, n) = b[i];
  }
  int rank = row_reduce(a);
  if (rank < n) throw SingularMatrix("solve_rational: singular matrix");
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = a(i, n);
  return x;
}

// Inverse over Q; throws SingularMatrix.
inline RatMatrix inverse_rational(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  RatMatrix a(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Rat(m(i, j));
    a(i, n + i) = 1;
  }
  int rank = row_reduce(a);
  if (rank < n) throw SingularMatrix("inverse_rational: singular matrix");
  RatMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = a(i, n + j);
  return r;
}

// Inverse of a unimodular integer matrix (|det| = 1), exact over Z.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  Int d = det(m);
  if (d != 1 && d != -1)
    throw SingularMatrix("inverse_unimodular: determinant is not a unit");
  RatMatrix inv = inverse_rational(m);
  IntMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      assert(inv(i, j).get_den() == 1);
      r(i, j) = inv(i, j).get_num();
    }
  return r;
}

// Contragredient action: the transpose of the inverse. For a finite-order
// automorphism of a lattice this is the induced action on the dual lattice.
inline IntMatrix dual_action(const IntMatrix& m) {
  return transpose(inverse_unimodular(m));
}

// Horizontal concatenation [a | b].
inline IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  assert(a.rows() == b.rows());
  IntMatrix r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

// Matrix whose columns are the given vectors (all of dimension dim).
inline IntMatrix columns_matrix(int dim, const std::vector<IntVec>& cols) {
  IntMatrix r(dim, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    assert(static_cast<int>(cols[j].size()) == dim);
    for (int i = 0; i < dim; ++i) r(i, static_cast<int>(j)) = cols[j][i];
  }
  return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace levelzero
