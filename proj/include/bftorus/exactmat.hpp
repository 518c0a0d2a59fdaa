#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "bftorus/errors.hpp"
#include "bftorus/polyring.hpp"

namespace bftorus {

// Dense row-major matrix over an exact ring. Matrices act on column vectors
// from the left. Most of the library works with square matrices; lattice
// code also needs rectangular generator matrices, so shape is not fixed.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }
  explicit Matrix(const std::vector<std::vector<T>>& rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& v : r.data_) v *= s;
    return r;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
    std::vector<T> r(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * x[j];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  // row_i += q * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const T& q) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += q * (*this)(j, c);
  }
  // col_i += q * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const T& q) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += q * (*this)(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }
  void negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// U * A * V = D, D diagonal with d_1 | d_2 | ... and d_i >= 0, U and V unimodular.
struct SmithDecomposition {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  std::vector<Integer> diagonal() const;
};

// A * T = H with T unimodular. The first cols - rank columns of H are zero;
// the remaining rank columns are in column Hermite form: each pivot is
// positive and sits below every other nonzero entry of its column, pivot rows
// strictly increase from left to right, and the entries to the right of a
// pivot in its row lie in [0, pivot). For a nonsingular square A, H is upper
// triangular with H(i, i) > 0 and 0 <= H(i, j) < H(i, i) for j > i.
struct HermiteBasis {
  IntMatrix H;
  IntMatrix T;
  std::size_t rank = 0;
};

RatMatrix to_rational(const IntMatrix& a);
// Throws NonIntegralResult if an entry is not an integer.
IntMatrix to_integer(const RatMatrix& a);

Integer determinant(const IntMatrix& a);
Rational determinant(const RatMatrix& a);
Integer trace(const IntMatrix& a);

// det(xI - A); monic of degree n.
IntPoly char_poly(const IntMatrix& a);
RatPoly char_poly(const RatMatrix& a);

// g(A) computed exactly over Q. Throws NonIntegralResult if an entry of the
// result is not an integer.
IntMatrix eval_poly_at_matrix(const RatPoly& g, const IntMatrix& a);
RatMatrix eval_poly_at_matrix_rational(const RatPoly& g, const RatMatrix& a);

SmithDecomposition smith_normal_form(const IntMatrix& a);
HermiteBasis hermite_normal_form(const IntMatrix& a);

// Throws SingularMatrix when det = 0.
RatMatrix rational_inverse(const IntMatrix& a);
RatMatrix rational_inverse(const RatMatrix& a);

// Columns form a Z-basis of {x in Z^cols : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);
// Columns generate {x in (Z/m)^cols : A x = 0 mod m}, entries reduced into
// [0, m), zero columns dropped. For prime m this is a basis over Z/m.
IntMatrix kernel_mod_m(const IntMatrix& a, const Integer& m);

// Matrix text format: first token n, then n*n integers, row by row.
// The JSON form {"n":3,"rows":[[...],...]} is also accepted; integers may be
// JSON numbers or decimal strings. Throws ParseError.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix_text(const IntMatrix& a);
std::string format_matrix_json(const IntMatrix& a);

}  // namespace bftorus
