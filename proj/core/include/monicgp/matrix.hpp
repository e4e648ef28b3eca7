#pragma once

#include <cstddef>
#include <vector>

#include "monicgp/field.hpp"

namespace monicgp {

using Vec = std::vector<Scalar>;

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix column(const Vec& v);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec col(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_col(std::size_t c, const Vec& v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  bool is_identity() const;

  Vec operator*(const Vec& v) const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  /// this += s * o.
  void add_scaled(const Scalar& s, const Matrix& o);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);
Matrix block_diag(const std::vector<Matrix>& parts);
/// Kronecker product, index (i, j) -> i * b.rows() + j.
Matrix kron(const Matrix& a, const Matrix& b);

Vec add(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
/// v += s * w.
void axpy(Vec& v, const Scalar& s, const Vec& w);
Vec concat(const std::vector<Vec>& parts);

}  // namespace monicgp
