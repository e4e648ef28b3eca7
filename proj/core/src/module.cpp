#include "monicgp/module.hpp"

#include <map>
#include <mutex>
#include <random>
#include <string>

namespace monicgp {

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

AlgebraPtr Module::effective() const {
  return d_->side == Side::Left ? d_->algebra : d_->algebra->opposite();
}

Module Module::trusted(AlgebraPtr algebra, Side side, std::vector<Matrix> actions,
                       std::string label) {
  if (!algebra) throw Error("module without algebra");
  if (actions.size() != algebra->dim())
    throw ModuleError({}, "expected " + std::to_string(algebra->dim()) + " action matrices, got " +
                              std::to_string(actions.size()));
  auto d = std::make_shared<Data>();
  d->dim = actions.empty() ? 0 : actions[0].rows();
  enforce_cap(d->dim, "module");
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const Matrix& m = actions[i];
    if (m.rows() != d->dim || m.cols() != d->dim)
      throw ModuleError({i}, "action matrix " + std::to_string(i) + " is not " +
                                 std::to_string(d->dim) + "x" + std::to_string(d->dim));
    if (d->dim && m.field() != algebra->field())
      throw ModuleError({i}, "action matrix over a different field");
  }
  d->algebra = std::move(algebra);
  d->side = side;
  d->actions = std::move(actions);
  // Normalise the field of empty matrices.
  if (d->dim == 0)
    for (auto& m : d->actions) m = Matrix(d->algebra->field(), 0, 0);
  d->label = std::move(label);
  Module out;
  out.d_ = std::move(d);
  return out;
}

Module Module::validate(AlgebraPtr algebra, Side side, std::vector<Matrix> actions,
                        std::string label) {
  Module m = trusted(std::move(algebra), side, std::move(actions), std::move(label));
  m.check_laws();
  return m;
}

Module Module::zero(AlgebraPtr algebra, Side side) {
  std::vector<Matrix> acts(algebra->dim(), Matrix(algebra->field(), 0, 0));
  return trusted(std::move(algebra), side, std::move(acts));
}

Matrix Module::action(const Vec& a) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < a.size(); ++i) m.add_scaled(a[i], d_->actions[i]);
  return m;
}

Module Module::relabel(std::string label) const {
  auto d = std::make_shared<Data>(*d_);
  d->label = std::move(label);
  Module out;
  out.d_ = std::move(d);
  return out;
}

void Module::check_laws() const {
  AlgebraPtr e = effective();
  const std::size_t n = e->dim();
  if (action(e->unit()) != Matrix::identity(field(), dim()))
    throw ModuleError({}, "unit does not act as the identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = action(i) * action(j);
      Matrix rhs(field(), dim(), dim());
      for (const auto& [k, c] : e->product(i, j)) rhs.add_scaled(c, action(k));
      if (lhs != rhs)
        throw ModuleError({i, j}, "action law fails on basis pair (" + e->labels()[i] + ", " +
                                      e->labels()[j] + ")");
    }
}

bool same_category(const Module& a, const Module& b) {
  return a.side() == b.side() && same_algebra(a.algebra(), b.algebra());
}

bool equal_modules(const Module& a, const Module& b) {
  return same_category(a, b) && a.dim() == b.dim() && a.actions() == b.actions();
}

bool intertwines(const Module& s, const Module& t, const Matrix& f) {
  if (f.rows() != t.dim() || f.cols() != s.dim()) return false;
  for (std::size_t i = 0; i < s.actions().size(); ++i)
    if (f * s.action(i) != t.action(i) * f) return false;
  return true;
}

ModuleMap ModuleMap::make(Module source, Module target, Matrix matrix) {
  if (!same_category(source, target)) throw Error("module map between different categories");
  if (!intertwines(source, target, matrix)) throw Error("matrix is not a module map");
  return {std::move(source), std::move(target), std::move(matrix)};
}

ModuleMap ModuleMap::identity(const Module& m) {
  return {m, m, Matrix::identity(m.field(), m.dim())};
}

ModuleMap ModuleMap::zero(const Module& s, const Module& t) {
  return {s, t, Matrix(s.field(), t.dim(), s.dim())};
}

bool ModuleMap::is_intertwining() const { return intertwines(source, target, matrix); }

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (g.source.dim() != f.target.dim()) throw DimensionMismatch("composition of unmatched maps");
  return {f.source, g.target, g.matrix * f.matrix};
}

AlgebraPtr ground_algebra(const Field& f) {
  static std::mutex mu;
  static std::map<std::uint32_t, AlgebraPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(f.characteristic());
  if (it != cache.end()) return it->second;
  AlgebraPresentation p;
  p.field = f;
  p.dim = 1;
  p.labels = {"1"};
  p.unit = {Scalar(f, 1)};
  p.struct_consts = {{0, 0, 0, Scalar(f, 1)}};
  auto a = Algebra::validate(p);
  cache.emplace(f.characteristic(), a);
  return a;
}

Module ground_module(const Field& f, std::size_t dim) {
  return Module::trusted(ground_algebra(f), Side::Left, {Matrix::identity(f, dim)});
}

Module regular(const AlgebraPtr& a, Side side) {
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < a->dim(); ++i)
    acts.push_back(side == Side::Left ? a->left_mult(i) : a->right_mult(i));
  return Module::trusted(a, side, std::move(acts), side == Side::Left ? "_AA" : "A_A");
}

std::pair<Module, Module> regular_modules(const AlgebraPtr& a) {
  return {regular(a, Side::Left), regular(a, Side::Right)};
}

DirectSum direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw Error("direct sum of nothing");
  const Module& first = parts[0];
  for (const auto& p : parts)
    if (!same_category(first, p)) throw Error("direct sum across categories");
  const Field& f = first.field();
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < first.actions().size(); ++i) {
    Matrix m(f, total, total);
    std::size_t off = 0;
    for (const auto& p : parts) {
      m.set_block(off, off, p.action(i));
      off += p.dim();
    }
    acts.push_back(std::move(m));
  }
  DirectSum out{Module::trusted(first.algebra(), first.side(), std::move(acts)), {}, {}};
  std::size_t off = 0;
  for (const auto& p : parts) {
    Matrix inc(f, total, p.dim()), pr(f, p.dim(), total);
    for (std::size_t r = 0; r < p.dim(); ++r) {
      inc(off + r, r) = Scalar(f, 1);
      pr(r, off + r) = Scalar(f, 1);
    }
    out.inclusions.push_back(std::move(inc));
    out.projections.push_back(std::move(pr));
    off += p.dim();
  }
  return out;
}

Submodule restrict_to(const Module& m, const Matrix& basis) {
  std::vector<Matrix> acts;
  if (basis.cols() == 0) {
    return {Module::zero(m.algebra(), m.side()), Matrix(m.field(), m.dim(), 0)};
  }
  CoordinateMap cm(basis);
  for (const auto& a : m.actions()) acts.push_back(cm.coords(a * basis));
  return {Module::trusted(m.algebra(), m.side(), std::move(acts)), basis};
}

Submodule generated_submodule(const Module& m, const std::vector<Vec>& vecs) {
  EchelonBasis eb(m.field(), m.dim());
  for (const auto& v : vecs)
    for (const auto& a : m.actions()) eb.insert(a * v);
  return restrict_to(m, eb.basis());
}

QuotientModule quotient_module(const Module& m, const Matrix& sub) {
  Quotient q = quotient(m.field(), m.dim(), sub);
  std::vector<Matrix> acts;
  for (const auto& a : m.actions()) acts.push_back(q.proj * a * q.section);
  if (q.proj.rows() == 0) acts.assign(m.actions().size(), Matrix(m.field(), 0, 0));
  return {Module::trusted(m.algebra(), m.side(), std::move(acts)), q.proj, q.section};
}

Matrix radical_of(const Module& m) {
  AlgebraPtr e = m.effective();
  const Matrix& J = e->radical();
  EchelonBasis eb(m.field(), m.dim());
  for (std::size_t s = 0; s < J.cols(); ++s) {
    Matrix a = m.action(J.col(s));
    for (std::size_t c = 0; c < a.cols(); ++c) eb.insert(a.col(c));
  }
  return eb.basis();
}

Matrix socle_of(const Module& m) {
  AlgebraPtr e = m.effective();
  const Matrix& J = e->radical();
  if (J.cols() == 0 || m.dim() == 0) return Matrix::identity(m.field(), m.dim());
  std::vector<Matrix> stack;
  for (std::size_t s = 0; s < J.cols(); ++s) stack.push_back(m.action(J.col(s)));
  return kernel(vstack(stack));
}

RadicalSocle radical_and_socle(const AlgebraPtr& a, const Module* m) {
  RadicalSocle out;
  out.radical_basis = a->radical();
  out.socle_basis = m ? socle_of(*m) : socle_of(regular(a, Side::Left));
  return out;
}

std::vector<Vec> module_generators(const Module& m) {
  AlgebraPtr e = m.effective();
  EchelonBasis w(m.field(), m.dim());
  if (e->has_radical()) {
    Matrix jm = radical_of(m);
    for (std::size_t c = 0; c < jm.cols(); ++c) w.insert(jm.col(c));
  }
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Vec v = unit_vec(m.field(), m.dim(), r);
    if (w.contains(v)) continue;
    gens.push_back(v);
    for (const auto& a : m.actions()) w.insert(a * v);
  }
  return gens;
}

HomSpace::HomSpace(Module source, Module target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!same_category(source_, target_)) throw Error("Hom between modules of different categories");
  const Field& f = source_.field();
  AlgebraPtr e = source_.effective();
  const std::size_t de = e->dim(), dm = source_.dim(), dn = target_.dim();
  gens_ = module_generators(source_);
  const std::size_t t = gens_.size();
  if (t == 0 || dn == 0) {
    images_ = CoordinateMap(Matrix(f, t * dn, 0));
    return;
  }
  // pi: E^t -> M, (a_j) -> sum a_j g_j; column (j, i) is b_i g_j.
  Matrix pi(f, dm, t * de);
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i = 0; i < de; ++i) pi.set_col(j * de + i, source_.action(i) * gens_[j]);
  Matrix rel = kernel(pi);
  // Module generators of the relation module inside E^t.
  EchelonBasis seen(f, t * de);
  std::vector<Vec> relgens;
  for (std::size_t c = 0; c < rel.cols(); ++c) {
    Vec v = rel.col(c);
    if (seen.contains(v)) continue;
    relgens.push_back(v);
    for (std::size_t b = 0; b < de; ++b) {
      const Matrix& L = e->left_mult(b);
      std::vector<Vec> blocks;
      for (std::size_t j = 0; j < t; ++j)
        blocks.push_back(L * Vec(v.begin() + static_cast<std::ptrdiff_t>(j * de),
                                 v.begin() + static_cast<std::ptrdiff_t>((j + 1) * de)));
      seen.insert(concat(blocks));
    }
  }
  // Unknowns (n_1..n_t) in N^t; each relation r gives sum_j rho_N(r_j) n_j = 0.
  Matrix eq(f, relgens.size() * dn, t * dn);
  for (std::size_t s = 0; s < relgens.size(); ++s)
    for (std::size_t j = 0; j < t; ++j) {
      Vec rj(relgens[s].begin() + static_cast<std::ptrdiff_t>(j * de),
             relgens[s].begin() + static_cast<std::ptrdiff_t>((j + 1) * de));
      eq.set_block(s * dn, j * dn, target_.action(rj));
    }
  Matrix sol = relgens.empty() ? Matrix::identity(f, t * dn) : kernel(eq);
  images_ = CoordinateMap(sol);
  Matrix section = solve(pi, Matrix::identity(f, dm));
  for (std::size_t z = 0; z < sol.cols(); ++z) {
    Matrix F(f, dn, dm);
    for (std::size_t j = 0; j < t; ++j) {
      Vec nj(dn, Scalar(f, 0));
      bool nonzero = false;
      for (std::size_t r = 0; r < dn; ++r) {
        nj[r] = sol(j * dn + r, z);
        nonzero = nonzero || !nj[r].is_zero();
      }
      if (!nonzero) continue;
      for (std::size_t i = 0; i < de; ++i) {
        Vec w = target_.action(i) * nj;
        if (is_zero(w)) continue;
        for (std::size_t r = 0; r < dm; ++r) {
          const Scalar& s = section(j * de + i, r);
          if (s.is_zero()) continue;
          for (std::size_t q = 0; q < dn; ++q)
            if (!w[q].is_zero()) F(q, r).add_mul(s, w[q]);
        }
      }
    }
    basis_.push_back(std::move(F));
  }
}

Vec HomSpace::stacked(const Matrix& f) const {
  std::vector<Vec> parts;
  for (const auto& g : gens_) parts.push_back(f * g);
  return concat(parts);
}

Vec HomSpace::coords(const Matrix& f) const {
  if (f.rows() != target_.dim() || f.cols() != source_.dim())
    throw DimensionMismatch("map has the wrong shape for this Hom space");
  return images_.coords(stacked(f));
}

bool HomSpace::contains(const Matrix& f) const {
  if (f.rows() != target_.dim() || f.cols() != source_.dim()) return false;
  return intertwines(source_, target_, f);
}

Matrix HomSpace::map(const Vec& c) const {
  Matrix m(source_.field(), target_.dim(), source_.dim());
  for (std::size_t k = 0; k < basis_.size(); ++k) m.add_scaled(c[k], basis_[k]);
  return m;
}

std::vector<ModuleMap> hom_space(const Module& m, const Module& n) {
  HomSpace h(m, n);
  std::vector<ModuleMap> out;
  for (const auto& b : h.basis()) out.push_back({m, n, b});
  return out;
}

Subquotient subquotient(const ModuleMap& f) {
  Subquotient s;
  s.kernel = restrict_to(f.source, kernel(f.matrix));
  s.image = restrict_to(f.target, column_basis(f.matrix));
  s.cokernel = quotient_module(f.target, f.matrix);
  return s;
}

namespace {

TensorProduct tensor_core(const Module& u, const Module& y) {
  if (u.side() != Side::Right || y.side() != Side::Left)
    throw Error("tensor product needs a right module and a left module");
  if (!same_algebra(u.algebra(), y.algebra())) throw Error("tensor factors over different algebras");
  const Field& f = u.field();
  const std::size_t du = u.dim(), dy = y.dim(), n = du * dy;
  TensorProduct tp;
  std::vector<Matrix> rels;
  for (std::size_t g : y.algebra()->generators())
    rels.push_back(kron(u.action(g), Matrix::identity(f, dy)) -
                   kron(Matrix::identity(f, du), y.action(g)));
  Matrix sub = rels.empty() || n == 0 ? Matrix(f, n, 0) : hstack(rels);
  Quotient q = quotient(f, n, sub);
  tp.proj = q.proj;
  tp.section = q.section;
  for (std::size_t i = 0; i < du; ++i) tp.pure.push_back(q.proj.block(0, i * dy, q.proj.rows(), dy));
  return tp;
}

}  // namespace

TensorProduct tensor_over(const Module& u, const Module& y) {
  TensorProduct tp = tensor_core(u, y);
  tp.result = ground_module(u.field(), tp.proj.rows());
  return tp;
}

TensorProduct tensor_over(const Bimodule& u, const Module& y) {
  TensorProduct tp = tensor_core(u.right, y);
  const Field& f = y.field();
  std::vector<Matrix> acts;
  for (const auto& a : u.left.actions())
    acts.push_back(tp.proj * kron(a, Matrix::identity(f, y.dim())) * tp.section);
  if (tp.proj.rows() == 0) acts.assign(u.left.actions().size(), Matrix(f, 0, 0));
  tp.result = Module::trusted(u.left.algebra(), Side::Left, std::move(acts));
  return tp;
}

Bimodule Bimodule::make(Module left, Module right) {
  if (left.side() != Side::Left || right.side() != Side::Right)
    throw Error("bimodule needs a left and a right structure");
  if (left.dim() != right.dim()) throw Error("bimodule structures on different spaces");
  for (std::size_t i = 0; i < left.actions().size(); ++i)
    for (std::size_t j = 0; j < right.actions().size(); ++j)
      if (left.action(i) * right.action(j) != right.action(j) * left.action(i))
        throw ModuleError({i, j}, "left and right actions do not commute");
  return {std::move(left), std::move(right)};
}

Bimodule Bimodule::regular(const AlgebraPtr& a) {
  return {monicgp::regular(a, Side::Left), monicgp::regular(a, Side::Right)};
}

Module k_dual(const Module& m) {
  std::vector<Matrix> acts;
  for (const auto& a : m.actions()) acts.push_back(a.transpose());
  return Module::trusted(m.algebra(), flip(m.side()), std::move(acts),
                         m.label().empty() ? "" : "D(" + m.label() + ")");
}

Verdict is_isomorphic(const Module& m, const Module& n, std::uint64_t seed, int trials) {
  if (!same_category(m, n)) throw Error("isomorphism test across categories");
  const Field& f = m.field();
  if (m.dim() != n.dim())
    return Verdict::fails(std::nullopt, "dimensions differ: " + std::to_string(m.dim()) + " vs " +
                                            std::to_string(n.dim()));
  if (m.dim() == 0) return Verdict::holds({"isomorphism", {}, Matrix(f, 0, 0)}, "zero modules");
  if (m.actions() == n.actions())
    return Verdict::holds({"isomorphism", {}, Matrix::identity(f, m.dim())}, "identical actions");
  HomSpace h(m, n);
  HomSpace hb(n, m);
  if (h.dim() == 0 || hb.dim() == 0) return Verdict::fails(std::nullopt, "a Hom space vanishes");
  HomSpace em(m, m), en(n, n);
  if (h.dim() != hb.dim() || h.dim() != em.dim() || h.dim() != en.dim())
    return Verdict::fails(std::nullopt, "Hom dimensions disagree: Hom(m,n)=" +
                                            std::to_string(h.dim()) + ", Hom(n,m)=" +
                                            std::to_string(hb.dim()) + ", End(m)=" +
                                            std::to_string(em.dim()) + ", End(n)=" +
                                            std::to_string(en.dim()));
  const std::size_t d = h.dim();
  auto invertible = [&](const Matrix& x) { return rank(x) == m.dim(); };
  std::uint32_t p = f.characteristic();
  if (p) {
    // Exhaustive when p^d <= 10^4.
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t k = 0; k < d && small; ++k) {
      total *= p;
      small = total <= 10000;
    }
    if (small) {
      for (std::uint64_t code = 1; code < total; ++code) {
        Vec c;
        std::uint64_t x = code;
        for (std::size_t k = 0; k < d; ++k) {
          c.push_back(Scalar(f, static_cast<long>(x % p)));
          x /= p;
        }
        Matrix cand = h.map(c);
        if (invertible(cand))
          return Verdict::holds({"isomorphism", {}, cand}, "exhaustive search");
      }
      return Verdict::fails(std::nullopt, "no invertible map among all " + std::to_string(total) +
                                              " elements of Hom");
    }
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Vec c;
    for (std::size_t k = 0; k < d; ++k) {
      long v = static_cast<long>(rng() % 33) - 16;
      c.push_back(Scalar(f, v));
    }
    if (t == 0) c.assign(d, Scalar(f, 1));
    Matrix cand = h.map(c);
    if (invertible(cand)) return Verdict::holds({"isomorphism", {}, cand}, "randomized search");
  }
  return Verdict::unknown(trials, "no invertible element found in randomized search");
}

SimplesAndProjectives simples_and_projectives(const AlgebraPtr& a, Side side) {
  AlgebraPtr e = side == Side::Left ? a : a->opposite();
  const Matrix& J = e->radical();
  SimplesAndProjectives out;
  for (const auto& idem : a->idempotents_or_unit()) {
    Matrix basis = column_basis(e->right_mult(idem));
    CoordinateMap cm(basis);
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < e->dim(); ++i) acts.push_back(cm.coords(e->left_mult(i) * basis));
    Module p = Module::trusted(a, side, std::move(acts), "P");
    // J e inside E e.
    Matrix je = e->right_mult(idem) * J;
    Matrix sub = cm.coords(je.cols() ? je : Matrix(a->field(), e->dim(), 0));
    QuotientModule s = quotient_module(p, sub);
    out.projectives.push_back({p, idem, basis});
    out.simples.push_back(s.module.relabel("S"));
  }
  return out;
}

}  // namespace monicgp
