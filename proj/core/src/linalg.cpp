#include "monicgp/linalg.hpp"

#include <atomic>
#include <string>
#include <utility>

namespace monicgp {

namespace {

std::atomic<std::size_t> g_cap{512};

// Reduces a in place; pivots are searched only in columns < limit.
std::vector<std::size_t> reduce_in_place(Matrix& a, std::size_t limit) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (a(r, j).is_zero()) continue;
      a(r, j) *= inv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j : nz) a(i, j).sub_mul(f, a(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t dimension_cap() { return g_cap.load(); }

void set_dimension_cap(std::size_t cap) {
  if (cap < 1) throw Error("dimension cap must be at least 1");
  g_cap.store(cap);
}

void enforce_cap(std::size_t n, const char* what) {
  if (n > dimension_cap())
    throw CapExceeded(std::string(what) + " of dimension " + std::to_string(n) +
                      " exceeds the dimension cap " + std::to_string(dimension_cap()));
}

Rref rref(const Matrix& m) {
  Rref out{m, {}};
  out.pivots = reduce_in_place(out.reduced, m.cols());
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() < m.cols()) return rref(m.transpose()).pivots.size();
  return rref(m).pivots.size();
}

Matrix kernel(const Matrix& m) {
  Rref r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_piv(n, false);
  for (auto p : r.pivots) is_piv[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec v = unit_vec(m.field(), n, f);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.field(), n, basis);
}

std::optional<Matrix> try_solve(const Matrix& m, const Matrix& rhs) {
  if (rhs.rows() != m.rows()) throw DimensionMismatch("right-hand side row count differs");
  Matrix aug = hstack({m, rhs});
  if (m.rows() == 0) aug = Matrix(m.field(), 0, m.cols() + rhs.cols());
  auto pivots = reduce_in_place(aug, m.cols());
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    for (std::size_t j = m.cols(); j < aug.cols(); ++j)
      if (!aug(i, j).is_zero()) return std::nullopt;
  Matrix x(m.field(), m.cols(), rhs.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(pivots[k], j) = aug(k, m.cols() + j);
  return x;
}

Matrix solve(const Matrix& m, const Matrix& rhs) {
  auto x = try_solve(m, rhs);
  if (!x) throw InconsistentSystem("linear system has no solution");
  return *x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  Matrix aug = hstack({m, Matrix::identity(m.field(), m.rows())});
  if (m.rows() == 0) return Matrix(m.field(), 0, 0);
  auto pivots = reduce_in_place(aug, m.cols());
  if (pivots.size() != m.rows()) throw Error("matrix is singular");
  return aug.block(0, m.cols(), m.rows(), m.rows());
}

Matrix column_basis(const Matrix& m) {
  Rref r = rref(m);
  return m.select_cols(r.pivots);
}

LinearReport linear_toolkit(const Matrix& m, const std::optional<Matrix>& rhs) {
  LinearReport rep;
  Rref r = rref(m);
  rep.rank = r.pivots.size();
  rep.rref = r.reduced;
  Matrix k = kernel(m);
  for (std::size_t j = 0; j < k.cols(); ++j) rep.kernel_basis.push_back(k.col(j));
  if (rhs) {
    if (rhs->field() != m.field()) throw FieldMismatch("right-hand side over a different field");
    if (rhs->cols() != 1) throw DimensionMismatch("right-hand side must be a single column");
    rep.particular_solution = solve(m, *rhs).col(0);
  }
  return rep;
}

Vec EchelonBasis::reduce(Vec v) const {
  if (v.size() != n_) throw DimensionMismatch("vector length differs from ambient dimension");
  for (const auto& [p, row] : rows_) {
    if (v[p].is_zero()) continue;
    Scalar f = v[p];
    for (std::size_t j = 0; j < n_; ++j)
      if (!row[j].is_zero()) v[j].sub_mul(f, row[j]);
  }
  return v;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vec& v) {
  Vec w = reduce(v);
  std::size_t p = n_;
  for (std::size_t j = 0; j < n_; ++j)
    if (!w[j].is_zero()) {
      p = j;
      break;
    }
  if (p == n_) return false;
  Scalar inv = w[p].inverse();
  for (auto& x : w) x *= inv;
  for (auto& [q, row] : rows_) {
    if (row[p].is_zero()) continue;
    Scalar f = row[p];
    for (std::size_t j = 0; j < n_; ++j)
      if (!w[j].is_zero()) row[j].sub_mul(f, w[j]);
  }
  rows_.emplace(p, std::move(w));
  return true;
}

Matrix EchelonBasis::basis() const {
  std::vector<Vec> cols;
  for (const auto& [p, row] : rows_) cols.push_back(row);
  return Matrix::from_columns(field_, n_, cols);
}

CoordinateMap::CoordinateMap(const Matrix& basis) : basis_(basis) {
  Rref r = rref(basis.transpose());
  if (r.pivots.size() != basis.cols()) throw Error("coordinate basis is linearly dependent");
  rows_ = r.pivots;
  inv_ = inverse(basis.select_rows(rows_));
}

std::optional<Vec> CoordinateMap::try_coords(const Vec& v) const {
  if (v.size() != basis_.rows()) throw DimensionMismatch("vector length differs from basis");
  Vec sub;
  sub.reserve(rows_.size());
  for (auto r : rows_) sub.push_back(v[r]);
  Vec c = rows_.empty() ? Vec{} : inv_ * sub;
  Vec back = basis_.cols() ? basis_ * c : zero_vec(basis_.field(), basis_.rows());
  if (back != v) return std::nullopt;
  return c;
}

Vec CoordinateMap::coords(const Vec& v) const {
  auto c = try_coords(v);
  if (!c) throw InconsistentSystem("vector lies outside the span of the basis");
  return *c;
}

Matrix CoordinateMap::coords(const Matrix& m) const {
  Matrix out(m.field(), dim(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out.set_col(j, coords(m.col(j)));
  return out;
}

Quotient quotient(const Field& f, std::size_t n, const Matrix& sub) {
  Rref r = sub.cols() ? rref(sub.transpose()) : Rref{Matrix(f, 0, n), {}};
  std::vector<bool> is_piv(n, false);
  for (auto p : r.pivots) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  Quotient q{Matrix(f, free.size(), n), Matrix(f, n, free.size())};
  for (std::size_t t = 0; t < free.size(); ++t) {
    q.proj(t, free[t]) = Scalar(f, 1);
    q.section(free[t], t) = Scalar(f, 1);
  }
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    for (std::size_t t = 0; t < free.size(); ++t) q.proj(t, r.pivots[k]) = -r.reduced(k, free[t]);
  return q;
}

}  // namespace monicgp
