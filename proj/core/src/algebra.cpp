#include "monicgp/algebra.hpp"

#include <string>

namespace monicgp {

namespace {

std::string idx3(std::size_t i, std::size_t j, std::size_t l) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(l) + ")";
}

Matrix span_of(const Field& f, std::size_t n, const std::vector<Vec>& vecs) {
  EchelonBasis eb(f, n);
  for (const auto& v : vecs) eb.insert(v);
  return eb.basis();
}

}  // namespace

AlgebraPtr Algebra::validate(const AlgebraPresentation& p) {
  using K = AlgebraError::Kind;
  const std::size_t n = p.dim;
  if (n == 0) throw AlgebraError(K::Malformed, {}, "algebra dimension must be positive");
  enforce_cap(n, "algebra");
  if (p.labels.size() != n) throw AlgebraError(K::Malformed, {}, "label count differs from dim");
  if (p.unit.size() != n) throw AlgebraError(K::Malformed, {}, "unit length differs from dim");
  for (const auto& c : p.struct_consts) {
    if (c.i >= n || c.j >= n || c.k >= n)
      throw AlgebraError(K::Malformed, {c.i, c.j, c.k}, "structure constant index out of range");
    if (c.value.field() != p.field)
      throw AlgebraError(K::Malformed, {c.i, c.j, c.k}, "structure constant over a different field");
  }
  std::shared_ptr<Algebra> a(new Algebra());
  a->p_ = p;
  a->build_tables();

  for (std::size_t i = 0; i < n; ++i) {
    Vec bi = a->basis(i);
    if (a->multiply(p.unit, bi) != bi || a->multiply(bi, p.unit) != bi)
      throw AlgebraError(K::UnitLaw, {i}, "unit law fails on basis element " + p.labels[i]);
  }
  // (b_i b_j) b_l = b_i (b_j b_l), all triples.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = a->multiply(a->basis(i), a->basis(j));
      for (std::size_t l = 0; l < n; ++l) {
        Vec lhs = a->multiply(ij, a->basis(l));
        Vec rhs = a->multiply(a->basis(i), a->multiply(a->basis(j), a->basis(l)));
        if (lhs != rhs)
          throw AlgebraError(K::NonAssociative, {i, j, l},
                             "associativity fails on basis triple " + idx3(i, j, l) + " = (" +
                                 p.labels[i] + ", " + p.labels[j] + ", " + p.labels[l] + ")");
      }
    }
  if (p.idempotents) {
    const auto& es = *p.idempotents;
    if (es.empty()) throw AlgebraError(K::BadIdempotents, {}, "empty idempotent list");
    Vec sum = a->zero();
    for (std::size_t s = 0; s < es.size(); ++s) {
      if (es[s].size() != n) throw AlgebraError(K::Malformed, {s}, "idempotent length differs");
      if (is_zero(es[s])) throw AlgebraError(K::BadIdempotents, {s, s}, "zero idempotent");
      sum = add(sum, es[s]);
      for (std::size_t t = 0; t < es.size(); ++t) {
        Vec prod = a->multiply(es[s], es[t]);
        bool ok = s == t ? prod == es[s] : is_zero(prod);
        if (!ok)
          throw AlgebraError(K::BadIdempotents, {s, t},
                             "idempotents " + std::to_string(s) + ", " + std::to_string(t) +
                                 (s == t ? " not idempotent" : " not orthogonal"));
      }
    }
    if (sum != p.unit) throw AlgebraError(K::BadIdempotents, {}, "idempotents do not sum to unit");
  }
  if (p.radical_basis) {
    // Two-sided ideal, nilpotent; semisimplicity of the quotient is checked by
    // the trace form when the characteristic allows it.
    std::vector<Vec> rb = *p.radical_basis;
    for (const auto& v : rb)
      if (v.size() != n) throw AlgebraError(K::Malformed, {}, "radical vector length differs");
    Matrix J = span_of(p.field, n, rb);
    CoordinateMap cm(J);
    for (std::size_t t = 0; t < J.cols(); ++t)
      for (std::size_t i = 0; i < n; ++i) {
        Vec v = J.col(t);
        if (!cm.contains(a->multiply(a->basis(i), v)) || !cm.contains(a->multiply(v, a->basis(i))))
          throw AlgebraError(K::BadRadical, {t, i}, "declared radical is not a two-sided ideal");
      }
    a->radical_ = J;
    auto powers = radical_powers(*a);
    if (powers.empty() || powers.back().cols() != 0)
      throw AlgebraError(K::BadRadical, {}, "declared radical is not nilpotent");
    std::uint32_t ch = p.field.characteristic();
    if (ch == 0 || ch > n) {
      // A/J semisimple iff the trace form of L on A has radical exactly J.
      a->radical_.reset();
      const Matrix& tr = a->radical();
      if (tr.cols() != J.cols())
        throw AlgebraError(K::BadRadical, {}, "quotient by declared radical is not semisimple");
      a->radical_ = J;
    }
  }
  return a;
}

void Algebra::build_tables() {
  const std::size_t n = p_.dim;
  const Field& f = p_.field;
  table_.assign(n * n, {});
  std::vector<Vec> dense(n * n, zero_vec(f, n));
  for (const auto& c : p_.struct_consts) dense[c.i * n + c.j][c.k] += c.value;
  for (std::size_t ij = 0; ij < n * n; ++ij)
    for (std::size_t k = 0; k < n; ++k)
      if (!dense[ij][k].is_zero()) table_[ij].emplace_back(k, dense[ij][k]);
  left_.assign(n, Matrix(f, n, n));
  right_.assign(n, Matrix(f, n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : product(i, j)) {
        left_[i](k, j) = c;   // b_i b_j
        right_[j](k, i) = c;  // b_i b_j = (b_i) * b_j
      }
    }
}

std::vector<Vec> Algebra::idempotents_or_unit() const {
  if (p_.idempotents) return *p_.idempotents;
  return {p_.unit};
}

std::optional<std::size_t> Algebra::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < p_.labels.size(); ++i)
    if (p_.labels[i] == label) return i;
  return std::nullopt;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != p_.dim || b.size() != p_.dim) throw DimensionMismatch("element length mismatch");
  Vec out = zero();
  for (std::size_t i = 0; i < p_.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < p_.dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, c] : product(i, j)) out[k].add_mul(ab, c);
    }
  }
  return out;
}

Matrix Algebra::left_mult(const Vec& a) const {
  Matrix m(p_.field, p_.dim, p_.dim);
  for (std::size_t i = 0; i < p_.dim; ++i) m.add_scaled(a[i], left_[i]);
  return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
  Matrix m(p_.field, p_.dim, p_.dim);
  for (std::size_t i = 0; i < p_.dim; ++i) m.add_scaled(a[i], right_[i]);
  return m;
}

AlgebraPtr Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(lazy_);
  if (auto back = op_weak_.lock()) return back;
  if (op_strong_) return op_strong_;
  AlgebraPresentation q = p_;
  for (auto& c : q.struct_consts) std::swap(c.i, c.j);
  std::shared_ptr<Algebra> op(new Algebra());
  op->p_ = std::move(q);
  op->build_tables();
  if (radical_) op->radical_ = radical_;
  op->op_weak_ = weak_from_this();
  op_strong_ = op;
  return op;
}

bool Algebra::has_radical() const {
  try {
    radical();
    return true;
  } catch (const UnsupportedCharacteristic&) {
    return false;
  }
}

const Matrix& Algebra::radical() const {
  std::lock_guard<std::mutex> lock(lazy_);
  if (radical_) return *radical_;
  if (radical_error_) throw UnsupportedCharacteristic(*radical_error_);
  const std::size_t n = p_.dim;
  std::uint32_t ch = p_.field.characteristic();
  if (ch != 0 && ch <= n) {
    radical_error_ = "radical needs char 0, char > dim, or a declared radical basis";
    throw UnsupportedCharacteristic(*radical_error_);
  }
  // Gram matrix of (a, b) -> tr(L_{ab}).
  Vec traces = zero();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t t = 0; t < n; ++t) traces[k] += left_[k](t, t);
  Matrix g(p_.field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : product(i, j)) g(i, j).add_mul(c, traces[k]);
  radical_ = kernel(g);
  return *radical_;
}

const std::vector<std::size_t>& Algebra::generators() const {
  {
    std::lock_guard<std::mutex> lock(lazy_);
    if (generators_) return *generators_;
  }
  const std::size_t n = p_.dim;
  std::vector<std::size_t> gens;
  EchelonBasis span(p_.field, n);
  span.insert(p_.unit);
  std::vector<Vec> members{p_.unit};
  auto close = [&]() {
    // Left-multiply every known word by every generator until stable.
    std::vector<Vec> todo = members;
    while (!todo.empty()) {
      std::vector<Vec> next;
      for (const auto& w : todo) {
        for (std::size_t h : gens) {
          Vec v = left_[h] * w;
          if (span.insert(v)) {
            members.push_back(v);
            next.push_back(v);
          }
        }
      }
      todo = std::move(next);
    }
  };
  for (std::size_t i = 0; i < n && span.dim() < n; ++i) {
    if (span.contains(basis(i))) continue;
    gens.push_back(i);
    close();
  }
  std::lock_guard<std::mutex> lock(lazy_);
  generators_ = gens;
  return *generators_;
}

bool Algebra::same_structure(const Algebra& o) const {
  if (this == &o) return true;
  if (p_.field != o.p_.field || p_.dim != o.p_.dim || p_.unit != o.p_.unit) return false;
  for (std::size_t ij = 0; ij < p_.dim * p_.dim; ++ij) {
    const auto& a = table_[ij];
    const auto& b = o.table_[ij];
    if (a.size() != b.size()) return false;
    for (std::size_t t = 0; t < a.size(); ++t)
      if (a[t].first != b[t].first || a[t].second != b[t].second) return false;
  }
  return true;
}

Element multiply(const Element& a, const Element& b) {
  if (!same_algebra(a.algebra, b.algebra)) throw Error("elements belong to different algebras");
  return {a.algebra, a.algebra->multiply(a.coeffs, b.coeffs)};
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b);
}

std::vector<Matrix> radical_powers(const Algebra& a) {
  std::vector<Matrix> out;
  Matrix cur = a.radical();
  const std::size_t n = a.dim();
  out.push_back(cur);
  for (std::size_t step = 0; step <= n && cur.cols() > 0; ++step) {
    // J^{k+1} = J * J^k, spanned by products of basis vectors.
    EchelonBasis eb(a.field(), n);
    const Matrix& J = out.front();
    for (std::size_t s = 0; s < J.cols(); ++s) {
      Matrix L = a.left_mult(J.col(s));
      for (std::size_t t = 0; t < cur.cols(); ++t) eb.insert(L * cur.col(t));
    }
    cur = eb.basis();
    out.push_back(cur);
  }
  return out;
}

}  // namespace monicgp
