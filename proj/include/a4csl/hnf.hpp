#pragma once

// Dense exact matrices, column Hermite normal forms and lattice duality.

#include "a4csl/golden.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace a4csl {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& data() const { return data_; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix p(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += x(i, k) * y(k, j);
      }
    return p;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }
  friend bool operator<(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_) return x.rows_ < y.rows_;
    if (x.cols_ != y.cols_) return x.cols_ < y.cols_;
    return x.data_ < y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

/// Lower-triangular column HNF of the lattice spanned by the columns of
/// `gens` (n x k, rank n): positive diagonal, entries left of the diagonal
/// reduced into [0, diagonal). Throws DomainError if rank < n.
IntMatrix hnf_columns(const IntMatrix& gens);
/// Product of the diagonal of a square triangular matrix.
Int triangular_determinant(const IntMatrix& h);

RatMatrix to_rational(const IntMatrix& m);
/// Throws DomainError if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);
Rational determinant(const RatMatrix& m);

/// Full-rank lattice spanned by rational columns, stored as hnf / scale.
struct RationalLattice {
  IntMatrix hnf;
  Int scale = 1;

  RatMatrix basis() const;
  friend bool operator==(const RationalLattice&, const RationalLattice&) = default;
};
RationalLattice rational_hnf(const RatMatrix& gens);
/// Dual w.r.t. the coordinate dot product: basis B -> B^{-T}.
RationalLattice dual(const RationalLattice& l);
/// Intersection via (A* + B*)*.
RationalLattice intersect(const RationalLattice& a, const RationalLattice& b);

std::string to_string(const IntMatrix& m);

}  // namespace a4csl
