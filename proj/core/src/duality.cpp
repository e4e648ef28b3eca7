#include "monicgp/duality.hpp"

#include "monicgp/linalg.hpp"

namespace monicgp {

const Matrix& outer_mult(const Module& m, std::size_t i) {
  // f -> f.a for left m, a.f for right m
  return m.side() == Side::Left ? m.algebra()->right_mult(i) : m.algebra()->left_mult(i);
}

Vec DualData::evaluate(const Vec& f, const Vec& v) const {
  const AlgebraPtr& a = module.algebra();
  Vec out = a->zero();
  for (std::size_t k = 0; k < f.size(); ++k)
    if (!f[k].is_zero()) axpy(out, f[k], hom->basis()[k] * v);
  return out;
}

DualData a_dual(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  DualData d;
  d.module = m;
  d.hom = std::make_shared<const HomSpace>(m, regular(a, m.side()));
  const auto& basis = d.hom->basis();
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix act(m.field(), basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) act.set_col(k, d.hom->coords(outer_mult(m, i) * basis[k]));
    acts.push_back(std::move(act));
  }
  d.dual = Module::trusted(a, flip(m.side()), std::move(acts),
                           m.label().empty() ? "" : m.label() + "*");
  return d;
}

Matrix canonical_matrix(const DualData& first, const DualData& second) {
  const Module& m = first.module;
  const Field& f = m.field();
  const auto& fb = first.hom->basis();
  Matrix phi(f, second.dual.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Vec v = unit_vec(f, m.dim(), r);
    // the functional f -> f(v) on M*
    Matrix ev(f, m.algebra()->dim(), fb.size());
    for (std::size_t k = 0; k < fb.size(); ++k) ev.set_col(k, fb[k] * v);
    phi.set_col(r, second.hom->coords(ev));
  }
  return phi;
}

DoubleDual double_dual(const Module& m) {
  DoubleDual out;
  out.first = a_dual(m);
  out.second = a_dual(out.first.dual);
  out.phi = {m, out.second.dual, canonical_matrix(out.first, out.second)};
  return out;
}

ModuleMap canonical_map(const Module& m) { return double_dual(m).phi; }

Matrix dual_map(const DualData& dm, const DualData& dn, const Matrix& f) {
  const auto& nb = dn.hom->basis();
  Matrix out(dm.module.field(), dm.dual.dim(), nb.size());
  for (std::size_t k = 0; k < nb.size(); ++k) out.set_col(k, dm.hom->coords(nb[k] * f));
  return out;
}

PhiShape shape(const Matrix& f) {
  PhiShape s;
  s.rank = f.rows() && f.cols() ? rank(f) : 0;
  s.kernel_dim = f.cols() - s.rank;
  s.cokernel_dim = f.rows() - s.rank;
  return s;
}

bool is_torsionless(const Module& m) { return shape(canonical_map(m).matrix).mono(); }

bool is_reflexive(const Module& m) {
  PhiShape s = shape(canonical_map(m).matrix);
  return s.mono() && s.epi();
}

ClassificationReport classify(const Module& m, std::size_t bound, std::uint64_t seed) {
  if (bound < 1) throw Error("classification bound must be at least 1");
  DoubleDual dd = double_dual(m);
  PhiShape s = shape(dd.phi.matrix);
  ClassificationReport r;
  r.phi_rank = s.rank;
  r.phi_kernel_dim = s.kernel_dim;
  r.phi_cokernel_dim = s.cokernel_dim;
  r.torsionless = s.mono();
  r.reflexive = s.mono() && s.epi();
  r.semi_gp = is_semi_gp(m, bound, seed);
  r.dual_semi_gp = is_semi_gp(dd.first.dual, bound, seed);
  r.double_semi_gp = conjunction({r.semi_gp, r.dual_semi_gp}, "M and M* semi-Gorenstein-projective");
  if (!r.reflexive)
    r.gp = Verdict::fails(std::nullopt, r.torsionless ? "not reflexive" : "not torsionless");
  else if (r.semi_gp.is_fails() || r.dual_semi_gp.is_fails())
    r.gp = Verdict::fails(r.semi_gp.is_fails() ? r.semi_gp.witness : r.dual_semi_gp.witness,
                          r.semi_gp.is_fails() ? "M not semi-Gorenstein-projective"
                                               : "M* not semi-Gorenstein-projective");
  else if (r.semi_gp.is_holds() && r.dual_semi_gp.is_holds())
    r.gp = Verdict::holds({"reflexive+double-semi-gp", {}, std::nullopt}, "Gorenstein-projective");
  else
    r.gp = Verdict::unknown(static_cast<long>(bound), "reflexive; semi-GP undecided past the bound",
                            r.semi_gp.complete && r.dual_semi_gp.complete);
  return r;
}

Approximation left_add_approximation(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  const Field& f = m.field();
  DualData d = a_dual(m);
  Approximation out;
  out.minimal = d.dual.effective()->has_radical();
  out.components = module_generators(d.dual);
  const std::size_t t = out.components.size();
  std::vector<Module> copies(t, regular(a, m.side()));
  Module target = t ? direct_sum(copies).sum : Module::zero(a, m.side());
  std::vector<Matrix> rows;
  for (const auto& g : out.components) rows.push_back(d.hom->map(g));
  Matrix phi = t ? vstack(rows) : Matrix(f, 0, m.dim());
  // Every f in M* must be a combination of g_j . b_i (factorisation through phi).
  if (d.dual.dim()) {
    Matrix span(f, d.dual.dim(), t * a->dim());
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t i = 0; i < a->dim(); ++i)
        span.set_col(j * a->dim() + i, d.dual.action(i) * out.components[j]);
    if (!try_solve(span, Matrix::identity(f, d.dual.dim())))
      throw Error("approximation components do not generate the dual");
  }
  out.map = {m, target, std::move(phi)};
  return out;
}

}  // namespace monicgp
