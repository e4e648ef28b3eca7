#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "monicgp/matrix.hpp"

namespace monicgp {

class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Largest module/algebra dimension the library will build (default 512).
std::size_t dimension_cap();
void set_dimension_cap(std::size_t cap);
/// Throws CapExceeded when n is over the cap.
void enforce_cap(std::size_t n, const char* what);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of {v : m v = 0}.
Matrix kernel(const Matrix& m);
/// X with m X = rhs; throws InconsistentSystem when there is none.
Matrix solve(const Matrix& m, const Matrix& rhs);
std::optional<Matrix> try_solve(const Matrix& m, const Matrix& rhs);
/// Inverse of a square matrix; throws when singular.
Matrix inverse(const Matrix& m);
/// Linearly independent columns of m (the pivot columns), in order.
Matrix column_basis(const Matrix& m);

struct LinearReport {
  std::size_t rank = 0;
  std::vector<Vec> kernel_basis;
  std::optional<Vec> particular_solution;
  Matrix rref;
};

/// One-stop report; rhs is a single column when present.
LinearReport linear_toolkit(const Matrix& m, const std::optional<Matrix>& rhs = std::nullopt);

/// Incrementally grown subspace of k^n kept in reduced echelon form.
class EchelonBasis {
 public:
  EchelonBasis(const Field& f, std::size_t n) : field_(f), n_(n) {}
  /// Adds v to the span; returns false when v was already in it.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  Vec reduce(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  /// Basis vectors as columns.
  Matrix basis() const;

 private:
  Field field_;
  std::size_t n_;
  std::map<std::size_t, Vec> rows_;  // pivot -> row with 1 at pivot, 0 at other pivots
};

/// Coordinates with respect to a basis given by linearly independent columns.
class CoordinateMap {
 public:
  CoordinateMap() = default;
  explicit CoordinateMap(const Matrix& basis);
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  /// Throws when v lies outside the span.
  Vec coords(const Vec& v) const;
  std::optional<Vec> try_coords(const Vec& v) const;
  bool contains(const Vec& v) const { return try_coords(v).has_value(); }
  /// Coordinates of every column of m.
  Matrix coords(const Matrix& m) const;

 private:
  Matrix basis_;
  std::vector<std::size_t> rows_;
  Matrix inv_;
};

/// k^n / span(sub): proj (q x n) kills sub, section (n x q) with proj*section = I.
struct Quotient {
  Matrix proj;
  Matrix section;
};
Quotient quotient(const Field& f, std::size_t n, const Matrix& sub);

}  // namespace monicgp
