#include "monicgp/triangular.hpp"

#include <algorithm>

#include "monicgp/linalg.hpp"

namespace monicgp {

namespace {

// Declared idempotents, or {1} for a local algebra; nullopt when neither.
std::optional<std::vector<Vec>> primitive_idempotents(const Algebra& a) {
  if (a.idempotents()) return a.idempotents();
  if (a.has_radical() && a.dim() == a.radical().cols() + 1) return std::vector<Vec>{a.unit()};
  return std::nullopt;
}

Vec embed(const Vec& v, std::size_t offset, std::size_t n) {
  Vec out = zero_vec(v.empty() ? Field() : v[0].field(), n);
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

Verdict structural(bool ok, const std::string& what, std::size_t rank_value) {
  if (ok) return Verdict::holds({"rank", {static_cast<long>(rank_value)}, std::nullopt}, what);
  return Verdict::fails(std::nullopt, "not: " + what);
}

std::string name_of(std::size_t i, const std::vector<std::string>& labels) {
  return i < labels.size() && !labels[i].empty() ? labels[i] : std::to_string(i);
}

}  // namespace

Vec TriangularAlgebra::e1() const {
  return embed(A->unit(), a_offset(), flat->dim());
}

Vec TriangularAlgebra::e2() const {
  return embed(B->unit(), b_offset(), flat->dim());
}

TriangularPtr build_triangular(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& m) {
  if (!a || !b) throw Error("triangular algebra needs two algebras");
  if (a->field() != b->field()) throw FieldMismatch("triangular algebra over two fields");
  if (!same_algebra(m.left.algebra(), a) || m.left.side() != Side::Left)
    throw Error("bimodule is not a left module over A");
  if (!same_algebra(m.right.algebra(), b) || m.right.side() != Side::Right)
    throw Error("bimodule is not a right module over B");
  const Field& f = a->field();
  const std::size_t da = a->dim(), dm = m.dim(), db = b->dim(), n = da + dm + db;
  enforce_cap(n, "triangular algebra");

  AlgebraPresentation p;
  p.field = f;
  p.dim = n;
  for (std::size_t i = 0; i < da; ++i) p.labels.push_back("11:" + name_of(i, a->labels()));
  for (std::size_t i = 0; i < dm; ++i) p.labels.push_back("12:m" + std::to_string(i));
  for (std::size_t i = 0; i < db; ++i) p.labels.push_back("22:" + name_of(i, b->labels()));
  p.unit = concat({a->unit(), zero_vec(f, dm), b->unit()});

  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (const auto& [k, v] : a->product(i, j)) p.struct_consts.push_back({i, j, k, v});
  // a_i m_j and m_i b_j
  for (std::size_t i = 0; i < da; ++i) {
    const Matrix& act = m.left.action(i);
    for (std::size_t j = 0; j < dm; ++j)
      for (std::size_t r = 0; r < dm; ++r)
        if (!act(r, j).is_zero()) p.struct_consts.push_back({i, da + j, da + r, act(r, j)});
  }
  for (std::size_t j = 0; j < db; ++j) {
    const Matrix& act = m.right.action(j);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t r = 0; r < dm; ++r)
        if (!act(r, i).is_zero()) p.struct_consts.push_back({da + i, da + dm + j, da + r, act(r, i)});
  }
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (const auto& [k, v] : b->product(i, j))
        p.struct_consts.push_back({da + dm + i, da + dm + j, da + dm + k, v});

  auto ia = primitive_idempotents(*a), ib = primitive_idempotents(*b);
  if (ia && ib) {
    std::vector<Vec> ids;
    for (const auto& e : *ia) ids.push_back(embed(e, 0, n));
    for (const auto& e : *ib) ids.push_back(embed(e, da + dm, n));
    p.idempotents = std::move(ids);
  }
  if (a->has_radical() && b->has_radical()) {
    std::vector<Vec> rad;
    const Matrix& ja = a->radical();
    for (std::size_t c = 0; c < ja.cols(); ++c) rad.push_back(embed(ja.col(c), 0, n));
    for (std::size_t i = 0; i < dm; ++i) rad.push_back(unit_vec(f, n, da + i));
    const Matrix& jb = b->radical();
    for (std::size_t c = 0; c < jb.cols(); ++c) rad.push_back(embed(jb.col(c), da + dm, n));
    p.radical_basis = std::move(rad);
  }

  auto t = std::make_shared<TriangularAlgebra>();
  t->A = a;
  t->B = b;
  t->M = m;
  t->flat = Algebra::validate(p);
  return t;
}

TriangularPtr build_t2(const AlgebraPtr& a) {
  auto base = build_triangular(a, a, Bimodule::regular(a));
  auto t = std::make_shared<TriangularAlgebra>(*base);
  t->t2 = true;
  return t;
}

MTensor m_tensor(const TriangularAlgebra& t, const Module& y) {
  const Field& f = y.field();
  MTensor out;
  if (t.t2) {
    // A (x)_A Y = Y via a (x) y -> a y
    const std::size_t da = t.A->dim(), dy = y.dim();
    out.result = y;
    out.pure = y.actions();
    out.proj = Matrix(f, dy, da * dy);
    for (std::size_t i = 0; i < da; ++i) out.proj.set_block(0, i * dy, y.action(i));
    out.section = Matrix(f, da * dy, dy);
    const Vec& u = t.A->unit();
    for (std::size_t i = 0; i < da; ++i)
      if (!u[i].is_zero()) {
        Matrix s = Matrix::identity(f, dy);
        s *= u[i];
        out.section.set_block(i * dy, 0, s);
      }
    return out;
  }
  TensorProduct tp = tensor_over(t.M, y);
  out.result = tp.result;
  out.pure = tp.pure;
  out.proj = tp.proj;
  out.section = tp.section;
  return out;
}

TripleModule TripleModule::make(TriangularPtr parent, Module x, Module y, Matrix phi) {
  if (!parent) throw Error("triple without a parent algebra");
  if (!same_algebra(x.algebra(), parent->A) || x.side() != Side::Left)
    throw Error("X is not a left A-module");
  if (!same_algebra(y.algebra(), parent->B) || y.side() != Side::Left)
    throw Error("Y is not a left B-module");
  auto mt = std::make_shared<const MTensor>(m_tensor(*parent, y));
  if (phi.rows() != x.dim() || phi.cols() != mt->result.dim())
    throw DimensionMismatch("phi must be dim X x dim (M (x) Y)");
  if (!intertwines(mt->result, x, phi)) throw Error("phi is not a left A-map M (x) Y -> X");
  TripleModule t;
  t.parent = std::move(parent);
  t.X = std::move(x);
  t.Y = std::move(y);
  t.phi = std::move(phi);
  t.tensor = std::move(mt);
  return t;
}

Module triple_to_module(const TripleModule& t) {
  const TriangularAlgebra& p = *t.parent;
  const Field& f = p.flat->field();
  const std::size_t dx = t.X.dim(), dy = t.Y.dim(), n = dx + dy;
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < p.A->dim(); ++i) {
    Matrix a(f, n, n);
    if (dx) a.set_block(0, 0, t.X.action(i));
    acts.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < p.M.dim(); ++i) {
    Matrix a(f, n, n);
    if (dx && dy) a.set_block(0, dx, t.phi * t.tensor->pure[i]);
    acts.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < p.B->dim(); ++i) {
    Matrix a(f, n, n);
    if (dy) a.set_block(dx, dx, t.Y.action(i));
    acts.push_back(std::move(a));
  }
  return Module::trusted(p.flat, Side::Left, std::move(acts));
}

TripleModule module_to_triple(const TriangularPtr& parent, const Module& m) {
  const TriangularAlgebra& p = *parent;
  if (!same_algebra(m.algebra(), p.flat) || m.side() != Side::Left)
    throw Error("module is not a left module over the triangular algebra");
  const Field& f = m.field();
  Matrix xb = column_basis(m.action(p.e1())), yb = column_basis(m.action(p.e2()));
  if (xb.cols() == 0) xb = Matrix(f, m.dim(), 0);
  if (yb.cols() == 0) yb = Matrix(f, m.dim(), 0);
  CoordinateMap xc(xb), yc(yb);
  const std::size_t dx = xb.cols(), dy = yb.cols();
  std::vector<Matrix> xa, ya;
  for (std::size_t i = 0; i < p.A->dim(); ++i)
    xa.push_back(dx ? xc.coords(Matrix(m.action(p.a_offset() + i) * xb)) : Matrix(f, 0, 0));
  for (std::size_t i = 0; i < p.B->dim(); ++i)
    ya.push_back(dy ? yc.coords(Matrix(m.action(p.b_offset() + i) * yb)) : Matrix(f, 0, 0));
  Module x = Module::trusted(p.A, Side::Left, std::move(xa));
  Module y = Module::trusted(p.B, Side::Left, std::move(ya));
  MTensor mt = m_tensor(p, y);
  // phi on M (x)_k Y first, then through the section
  const std::size_t dm = p.M.dim();
  Matrix full(f, dx, dm * dy);
  if (dx && dy)
    for (std::size_t i = 0; i < dm; ++i)
      full.set_block(0, i * dy, xc.coords(Matrix(m.action(p.m_offset() + i) * yb)));
  Matrix phi = full * mt.section;
  return TripleModule::make(parent, std::move(x), std::move(y), std::move(phi));
}

MonicResult is_monic_bimodule(const TripleModule& t) {
  MonicResult r;
  if (t.phi.cols() == 0) {
    r.monic = true;
    return r;
  }
  Matrix k = t.phi.rows() ? kernel(t.phi) : Matrix::identity(t.phi.field(), t.phi.cols());
  r.monic = k.cols() == 0;
  if (!r.monic) r.kernel_vector = k.col(0);
  return r;
}

Module right_pair_module(const TriangularAlgebra& t, const Module& u, const Module& v,
                         const Matrix& psi) {
  if (!t.t2) throw Error("right pair modules are only formed over T2(A)");
  for (const Module* m : {&u, &v})
    if (!same_algebra(m->algebra(), t.A) || m->side() != Side::Right)
      throw Error("pair components must be right A-modules");
  if (psi.rows() != v.dim() || psi.cols() != u.dim()) throw DimensionMismatch("psi must be V x U");
  const Field& f = t.flat->field();
  const std::size_t du = u.dim(), dv = v.dim(), n = du + dv, da = t.A->dim();
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < da; ++i) {
    Matrix a(f, n, n);
    if (du) a.set_block(0, 0, u.action(i));
    acts.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < da; ++i) {
    Matrix a(f, n, n);
    if (du && dv) a.set_block(du, 0, v.action(i) * psi);
    acts.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < da; ++i) {
    Matrix a(f, n, n);
    if (dv) a.set_block(du, du, v.action(i));
    acts.push_back(std::move(a));
  }
  return Module::validate(t.flat, Side::Right, std::move(acts));
}

T2DualBundle t2_dual_bundle(const TripleModule& t) {
  if (!t.parent || !t.parent->t2) throw Error("dual bundle needs a T2(A) parent");
  const TriangularAlgebra& p = *t.parent;
  const AlgebraPtr& A = p.A;
  const Field& f = A->field();
  const std::size_t da = A->dim(), dl = p.flat->dim();
  const std::size_t dx = t.X.dim();

  T2DualBundle b;
  b.input = t;
  Matrix im = t.phi.cols() && dx ? column_basis(t.phi) : Matrix(f, dx, 0);
  if (im.cols() == 0) im = Matrix(f, dx, 0);
  b.coker = quotient_module(t.X, im);
  b.dx = a_dual(t.X);
  b.dy = a_dual(t.Y);
  b.dc = a_dual(b.coker.module);
  b.pi_star = dual_map(b.dx, b.dc, b.coker.proj);
  b.phi_star = dual_map(b.dy, b.dx, t.phi);

  const std::size_t dxs = b.dx.dual.dim(), dcs = b.dc.dual.dim();
  Matrix pis = dcs ? column_basis(b.pi_star) : Matrix(f, dxs, 0);
  if (pis.cols() == 0) pis = Matrix(f, dxs, 0);
  b.coker_pi_star = quotient_module(b.dx.dual, pis);
  const Matrix& pmap = b.coker_pi_star.proj;
  b.beta = b.phi_star * b.coker_pi_star.section;
  b.phi_star_factors = b.beta * pmap == b.phi_star;

  const PhiShape spi = shape(b.pi_star), sphi = shape(b.phi_star);
  b.rows_exact = spi.mono() && sphi.rank + dcs == dxs && shape(pmap).epi();

  b.dual_triple = right_pair_module(p, b.dc.dual, b.dx.dual, b.pi_star);

  b.dxx = a_dual(b.dx.dual);
  b.dq = a_dual(b.coker_pi_star.module);
  b.dyy = a_dual(b.dy.dual);
  b.p_star = dual_map(b.dxx, b.dq, pmap);
  b.beta_star = dual_map(b.dq, b.dyy, b.beta);
  b.double_dual_triple = TripleModule::make(t.parent, b.dxx.dual, b.dq.dual, b.p_star);
  b.phi_x = canonical_matrix(b.dx, b.dxx);
  b.phi_y = canonical_matrix(b.dy, b.dyy);
  b.beta_star_phi_y = b.beta_star * b.phi_y;

  // generic side
  b.flat = triple_to_module(t);
  b.flat_dual = a_dual(b.flat);
  b.flat_double = a_dual(b.flat_dual.dual);
  b.phi_flat = canonical_matrix(b.flat_dual, b.flat_double);

  // h: f -> (g, alpha2) with f(x, 0) = (g pi(x), alpha2(x), 0)
  const auto& fb = b.flat_dual.pairing();
  const std::size_t dfs = fb.size();
  b.h = Matrix(f, dcs + dxs, dfs);
  for (std::size_t k = 0; k < dfs; ++k) {
    Matrix onx = dx ? fb[k].block(0, 0, dl, dx) : Matrix(f, dl, 0);
    Matrix a1 = onx.block(p.a_offset(), 0, da, dx);
    Matrix a2 = onx.block(p.m_offset(), 0, da, dx);
    Vec g = dcs ? b.dc.hom->coords(Matrix(a1 * b.coker.section)) : Vec{};
    Vec x2 = dxs ? b.dx.hom->coords(a2) : Vec{};
    b.h.set_col(k, concat({g, x2}));
  }
  b.h_iso = b.h.rows() == b.h.cols() && shape(b.h).mono() &&
            intertwines(b.flat_dual.dual, b.dual_triple, b.h);

  // Xi(xi, eta)(u, v) = (xi(pi* u), xi(v), eta(p v)), pulled back along h
  const std::size_t dxx = b.dxx.dual.dim(), dqs = b.dq.dual.dim();
  const Module dd_flat = triple_to_module(b.double_dual_triple);
  b.tilde_h = Matrix(f, b.flat_double.dual.dim(), dxx + dqs);
  for (std::size_t w = 0; w < dxx + dqs; ++w) {
    Matrix xi(f, dl, dcs + dxs);
    for (std::size_t c = 0; c < dcs + dxs; ++c) {
      Vec col = zero_vec(f, dl);
      if (c >= dcs) {
        Vec v = unit_vec(f, dxs, c - dcs);
        if (w < dxx) {
          Vec e = b.dxx.evaluate(unit_vec(f, dxx, w), v);
          for (std::size_t r = 0; r < da; ++r) col[p.m_offset() + r] = e[r];
        } else {
          Vec e = b.dq.evaluate(unit_vec(f, dqs, w - dxx), pmap * v);
          for (std::size_t r = 0; r < da; ++r) col[p.b_offset() + r] = e[r];
        }
      } else if (w < dxx) {
        Vec e = b.dxx.evaluate(unit_vec(f, dxx, w), b.pi_star.col(c));
        for (std::size_t r = 0; r < da; ++r) col[p.a_offset() + r] = e[r];
      }
      xi.set_col(c, col);
    }
    b.tilde_h.set_col(w, b.flat_double.hom->coords(Matrix(xi * b.h)));
  }
  b.tilde_h_iso = b.tilde_h.rows() == b.tilde_h.cols() && shape(b.tilde_h).mono() &&
                  intertwines(dd_flat, b.flat_double.dual, b.tilde_h);
  b.canonical_agrees = b.phi_flat == b.tilde_h * block_diag({b.phi_x, b.beta_star_phi_y});
  if (!b.phi_star_factors || !b.rows_exact)
    throw Error("dual bundle: phi* = beta p or row exactness failed");
  return b;
}

Verdict in_perp_regular(const Module& m, std::size_t bound) {
  return ext_vanishing(m, regular(m.algebra(), m.side()), bound);
}

namespace {

// Ext^i(X, A) -> Ext^i(M (x) Y, A) induced by phi, 1 <= i <= bound.
Verdict ext_comparison(const Module& mty, const Module& x, const Matrix& phi, std::size_t bound) {
  std::shared_ptr<const ProjResolution> rs, rt;
  std::size_t reach = 0;
  std::string capped;
  for (std::size_t k = 1; k <= bound; ++k) {
    try {
      auto s = cached_resolution(mty, k + 1, true);
      auto t = cached_resolution(x, k + 1, true);
      rs = s;
      rt = t;
      reach = k;
    } catch (const CapExceeded& e) {
      capped = e.what();
      break;
    }
  }
  if (!rs) return Verdict::unknown(0, "dimension cap: " + capped, false);
  const Module reg = regular(x.algebra(), Side::Left);
  std::vector<Matrix> chain = lift_chain_map(*rs, *rt, phi, reach);
  for (std::size_t i = 1; i <= reach; ++i) {
    InducedExt ie = induced_on_ext(*rs, *rt, chain, reg, i);
    if (!ie.iso())
      return Verdict::fails(static_cast<long>(i),
                            "Ext^" + std::to_string(i) + ": map of rank " + std::to_string(ie.rank) +
                                " between dimensions " + std::to_string(ie.source_dim) + " and " +
                                std::to_string(ie.target_dim));
  }
  if (rs->complete && rt->complete && std::max(rs->computed(), rt->computed()) <= reach + 1)
    return Verdict::holds({"finite-projective-dimension",
                           {static_cast<long>(std::max(rs->computed(), rt->computed())) - 1},
                           std::nullopt},
                          "both resolutions finished");
  if (reach < bound)
    return Verdict::unknown(static_cast<long>(reach), "dimension cap: " + capped, false);
  return Verdict::unknown(static_cast<long>(bound), "isomorphisms in degrees 1.." + std::to_string(bound));
}

// a Fails at degree d against a bounded-ok b at bound N with d + margin <= N.
bool refutes(const Verdict& a, const Verdict& b, long margin) {
  if (!a.is_fails()) return false;
  if (b.is_holds()) return true;
  if (!b.is_unknown() || !b.complete || !b.bound) return false;
  return a.witness.value_or(1) + margin <= *b.bound;
}

void agree(TripleReport& r, const std::string& name, const Verdict& a, const Verdict& b, long margin) {
  if (refutes(a, b, margin) || refutes(b, a, margin))
    r.disagreements.push_back(name + ": " + to_string(a.status) + " vs " + to_string(b.status));
}

void agree(TripleReport& r, const std::string& name, bool a, bool b) {
  if (a != b)
    r.disagreements.push_back(name + ": " + (a ? "true" : "false") + " vs " + (b ? "true" : "false"));
}

Verdict from_bool(bool ok, const std::string& what) {
  return ok ? Verdict::holds({"exact", {}, std::nullopt}, what) : Verdict::fails(std::nullopt, "not: " + what);
}

}  // namespace

TripleReport classify_triple(const TripleModule& t, std::size_t bound, std::uint64_t seed) {
  if (bound < 1) throw Error("classification bound must be at least 1");
  const TriangularAlgebra& p = *t.parent;
  TripleReport r;
  r.bound = bound;
  r.t2 = p.t2;
  r.monic = is_monic_bimodule(t);
  const Module& mty = t.tensor->result;

  Verdict y_perp = in_perp_regular(t.Y, bound);
  Verdict comparison = ext_comparison(mty, t.X, t.phi, bound);
  DualData dx = a_dual(t.X), dmy = a_dual(mty);
  PhiShape sphi = shape(dual_map(dmy, dx, t.phi));
  Verdict onto = structural(sphi.epi(), "phi* onto", sphi.rank);
  r.ext_comparison = {{"Y in perp(B)", y_perp}, {"Ext comparison isomorphisms", comparison},
                      {"phi* epi", onto}};
  r.perp_components = conjunction({y_perp, comparison, onto}, "perp components");
  if (!p.t2)
    r.notes.push_back("hypotheses pd(M_A) finite and D(M_B) in perp(B)-perp are assumed, not checked");

  Matrix im = t.phi.cols() && t.X.dim() ? column_basis(t.phi) : Matrix(t.X.field(), t.X.dim(), 0);
  if (im.cols() == 0) im = Matrix(t.X.field(), t.X.dim(), 0);
  Module coker = quotient_module(t.X, im).module;
  ClassificationReport cc = classify(coker, bound, seed);
  ClassificationReport cy = classify(t.Y, bound, seed);
  Verdict monic_v = from_bool(r.monic.monic, "monic");
  r.gp_components = conjunction({monic_v, cc.gp, cy.gp}, "monic with Coker phi and Y Gorenstein-projective");
  if (!p.t2) r.notes.push_back("bimodule compatibility is assumed for the Gorenstein-projective criterion");

  Module flat = triple_to_module(t);
  r.flat = classify(flat, bound, seed);
  agree(r, "semi-GP", r.flat.semi_gp, r.perp_components, 1);
  agree(r, "Gorenstein-projective", r.flat.gp, r.gp_components, 1);

  if (!p.t2) {
    r.notes.push_back("T2 formulas skipped for a general bimodule");
    return r;
  }

  T2DualBundle b = t2_dual_bundle(t);
  if (!b.all_invariants()) r.disagreements.push_back("dual bundle identifications failed");
  ClassificationReport cx = classify(t.X, bound, seed);
  DualData dcc = a_dual(b.dc.dual);
  PhiShape pss = shape(dual_map(dcc, b.dxx, b.pi_star));
  PhiShape sbeta = shape(b.beta);
  r.phi_star_onto = shape(b.phi_star).epi();
  r.beta_invertible = sbeta.mono() && sbeta.epi();

  r.conditions = {
      {"(1) X in perp(A)", cx.semi_gp},
      {"(2) Y in perp(A)", cy.semi_gp},
      {"(3) phi* epi", structural(r.phi_star_onto, "phi* onto", shape(b.phi_star).rank)},
      {"(4) (Coker phi)* in perp(A)", cc.dual_semi_gp},
      {"(5) X* in perp(A)", cx.dual_semi_gp},
      {"(6) pi** epi", structural(pss.epi(), "pi** onto", pss.rank)},
      {"(7) Y* in perp(A)", cy.dual_semi_gp},
      {"(8) beta iso", structural(r.beta_invertible, "beta invertible", sbeta.rank)},
  };
  std::vector<Verdict> v16, v78;
  for (std::size_t i = 0; i < 8; ++i) (i < 6 ? v16 : v78).push_back(r.conditions[i].verdict);
  r.cond_1_6 = conjunction(v16, "conditions (1)-(6)");
  r.cond_7_8 = conjunction(v78, "conditions (7)-(8)");

  PhiShape sx = shape(b.phi_x), sy = shape(b.phi_y), sby = shape(b.beta_star_phi_y);
  r.torsionless_components = r.monic.monic && cx.torsionless && cy.torsionless;
  r.epi_components = sx.epi() && sby.epi();
  r.reflexive_components = r.monic.monic && cx.reflexive && sby.mono() && sby.epi();

  r.torsionless_dsgp = conjunction({monic_v, cx.double_semi_gp, cy.double_semi_gp, cc.double_semi_gp,
                             from_bool(cx.torsionless && cy.torsionless, "X and Y torsionless")},
                            "monic, X, Y, Coker phi double semi-GP, X and Y torsionless");
  r.dsgp_phi_epi = conjunction(
      {r.conditions[2].verdict, cx.semi_gp, cy.semi_gp, cx.dual_semi_gp, cy.dual_semi_gp,
       cc.dual_semi_gp, from_bool(sx.epi() && sy.epi(), "phi_X and phi_Y onto")},
      "phi* epi, X, Y, X*, Y*, (Coker phi)* semi-GP, phi_X and phi_Y onto");

  PhiShape sf = shape(b.phi_flat);
  r.flat_phi_epi = sf.epi();
  agree(r, "torsionless", r.flat.torsionless, r.torsionless_components);
  agree(r, "phi epi", r.flat_phi_epi, r.epi_components);
  agree(r, "reflexive", r.flat.reflexive, r.reflexive_components);
  agree(r, "beta invertible vs phi* onto", r.beta_invertible, r.phi_star_onto);
  agree(r, "semi-GP vs (1)-(3)", r.flat.semi_gp, conjunction({v16[0], v16[1], v16[2]}), 1);
  agree(r, "double semi-GP vs (1)-(6)", r.flat.double_semi_gp, r.cond_1_6, 1);
  if (refutes(r.cond_7_8, r.cond_1_6, 0))
    r.disagreements.push_back("conditions (1)-(6) hold but (7)-(8) fail");
  Verdict flat_i = r.flat.torsionless ? r.flat.double_semi_gp : from_bool(false, "torsionless");
  Verdict flat_ii = r.flat_phi_epi ? r.flat.double_semi_gp : from_bool(false, "phi epi");
  agree(r, "torsionless and double semi-GP", flat_i, r.torsionless_dsgp, 1);
  agree(r, "double semi-GP with phi epi", flat_ii, r.dsgp_phi_epi, 1);
  return r;
}

TripleModule approximation_triple(const TriangularPtr& t2, const Module& y) {
  if (!t2 || !t2->t2) throw Error("approximation triples live over T2(A)");
  if (y.side() != Side::Left) throw Error("approximation triple needs a left module");
  Approximation ap = left_add_approximation(y);
  return TripleModule::make(t2, ap.map.target, y, ap.map.matrix);
}

}  // namespace monicgp
