#include "monicgp/tensor_quiver.hpp"

#include <algorithm>
#include <deque>

#include "monicgp/linalg.hpp"

namespace monicgp {

std::size_t Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  throw Error("unknown vertex '" + name + "'");
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  throw Error("unknown arrow '" + name + "'");
}

bool Quiver::acyclic() const {
  // Kahn
  std::vector<std::size_t> indeg(vertices.size(), 0);
  for (const auto& a : arrows) ++indeg[a.target];
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (!indeg[v]) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    ++seen;
    for (const auto& a : arrows)
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
  }
  return seen == vertices.size();
}

std::vector<std::vector<std::size_t>> Quiver::relation_indices() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& rel : relations) {
    if (rel.size() < 2) throw Error("relations must have length at least 2");
    std::vector<std::size_t> idx;
    for (const auto& n : rel) idx.push_back(arrow_index(n));
    for (std::size_t k = 0; k + 1 < idx.size(); ++k)
      if (arrows[idx[k]].source != arrows[idx[k + 1]].target)
        throw Error("relation is not a composable path");
    out.push_back(std::move(idx));
  }
  return out;
}

std::size_t PathAlgebra::trivial(std::size_t vertex) const { return vertex; }

std::size_t PathAlgebra::arrow(std::size_t a) const {
  auto i = find({a});
  if (!i) throw Error("arrow is zero in the path algebra");
  return *i;
}

std::optional<std::size_t> PathAlgebra::find(const std::vector<std::size_t>& arrows) const {
  auto it = index_.find(arrows);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool contains_relation(const std::vector<std::size_t>& p, const std::vector<std::vector<std::size_t>>& rels) {
  for (const auto& r : rels)
    if (std::search(p.begin(), p.end(), r.begin(), r.end()) != p.end()) return true;
  return false;
}

constexpr std::size_t kMaxPathLength = 64;

}  // namespace

PathAlgebra path_algebra(const Field& f, const Quiver& q, bool allow_cycles) {
  for (const auto& a : q.arrows)
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      throw Error("arrow '" + a.name + "' has an unknown endpoint");
  for (std::size_t i = 0; i < q.arrows.size(); ++i)
    for (std::size_t j = i + 1; j < q.arrows.size(); ++j)
      if (q.arrows[i].name == q.arrows[j].name) throw Error("duplicate arrow name '" + q.arrows[i].name + "'");
  if (!allow_cycles && !q.acyclic()) throw Error("quiver has an oriented cycle");
  auto rels = q.relation_indices();
  PathAlgebra pa;
  pa.quiver = q;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) pa.paths.push_back({{}, v, v});
  // breadth-first by length; the new arrow goes on the left
  std::vector<Path> layer(pa.paths.begin(), pa.paths.end());
  for (std::size_t len = 1; !layer.empty(); ++len) {
    if (len > kMaxPathLength) throw Error("path algebra is infinite-dimensional");
    std::vector<Path> next;
    for (const auto& p : layer)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != p.target) continue;
        Path np;
        np.arrows.push_back(a);
        np.arrows.insert(np.arrows.end(), p.arrows.begin(), p.arrows.end());
        np.source = p.source;
        np.target = q.arrows[a].target;
        if (contains_relation(np.arrows, rels)) continue;
        next.push_back(std::move(np));
      }
    auto names = [&](const Path& p) {
      std::vector<std::string> n;
      for (auto a : p.arrows) n.push_back(q.arrows[a].name);
      return n;
    };
    std::sort(next.begin(), next.end(), [&](const Path& x, const Path& y) { return names(x) < names(y); });
    pa.paths.insert(pa.paths.end(), next.begin(), next.end());
    enforce_cap(pa.paths.size(), "path algebra");
    layer = std::move(next);
  }
  for (std::size_t i = q.vertices.size(); i < pa.paths.size(); ++i) pa.index_[pa.paths[i].arrows] = i;

  bool short_names = std::all_of(q.arrows.begin(), q.arrows.end(), [](const Arrow& a) { return a.name.size() == 1; });
  AlgebraPresentation p;
  p.field = f;
  p.dim = pa.paths.size();
  for (const auto& path : pa.paths) {
    if (path.trivial()) {
      p.labels.push_back("e" + q.vertices[path.source]);
      continue;
    }
    std::string l;
    for (std::size_t k = 0; k < path.arrows.size(); ++k) {
      if (k && !short_names) l += ".";
      l += q.arrows[path.arrows[k]].name;
    }
    p.labels.push_back(l);
  }
  p.unit = zero_vec(f, p.dim);
  for (std::size_t v = 0; v < q.vertices.size(); ++v) p.unit[v] = Scalar(f, 1);
  for (std::size_t i = 0; i < p.dim; ++i)
    for (std::size_t j = 0; j < p.dim; ++j) {
      const Path &x = pa.paths[i], &y = pa.paths[j];
      if (x.source != y.target) continue;
      std::optional<std::size_t> k;
      if (x.trivial()) k = j;
      else if (y.trivial()) k = i;
      else {
        std::vector<std::size_t> c = x.arrows;
        c.insert(c.end(), y.arrows.begin(), y.arrows.end());
        k = pa.find(c);
      }
      if (k) p.struct_consts.push_back({i, j, *k, Scalar(f, 1)});
    }
  std::vector<Vec> idem, rad;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) idem.push_back(unit_vec(f, p.dim, v));
  for (std::size_t i = q.vertices.size(); i < p.dim; ++i) rad.push_back(unit_vec(f, p.dim, i));
  p.idempotents = idem;
  p.radical_basis = rad;
  pa.algebra = Algebra::validate(p);
  return pa;
}

Vec TensorAlgebra::unit_times(std::size_t path) const {
  Vec v = flat->zero();
  const Vec& u = A->unit();
  for (std::size_t i = 0; i < u.size(); ++i) v[index(i, path)] = u[i];
  return v;
}

TensorPtr build_tensor(const AlgebraPtr& a, const Quiver& q) {
  auto t = std::make_shared<TensorAlgebra>();
  t->A = a;
  t->B = path_algebra(a->field(), q, false);
  const Field& f = a->field();
  const AlgebraPtr& b = t->B.algebra;
  const std::size_t da = a->dim(), db = b->dim();
  enforce_cap(da * db, "tensor algebra");
  AlgebraPresentation p;
  p.field = f;
  p.dim = da * db;
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t i = 0; i < da; ++i) p.labels.push_back(a->labels()[i] + "(x)" + b->labels()[j]);
  p.unit = zero_vec(f, p.dim);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t i = 0; i < da; ++i)
      if (!a->unit()[i].is_zero() && !b->unit()[j].is_zero()) p.unit[t->index(i, j)] = a->unit()[i] * b->unit()[j];
  for (std::size_t j1 = 0; j1 < db; ++j1)
    for (std::size_t j2 = 0; j2 < db; ++j2) {
      const auto& pb = b->product(j1, j2);
      if (pb.empty()) continue;
      for (std::size_t i1 = 0; i1 < da; ++i1)
        for (std::size_t i2 = 0; i2 < da; ++i2)
          for (const auto& [ka, va] : a->product(i1, i2))
            for (const auto& [kb, vb] : pb)
              p.struct_consts.push_back({t->index(i1, j1), t->index(i2, j2), t->index(ka, kb), va * vb});
    }
  std::vector<Vec> idem;
  for (const auto& e : a->idempotents_or_unit())
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      Vec x = zero_vec(f, p.dim);
      for (std::size_t i = 0; i < da; ++i) x[t->index(i, v)] = e[i];
      idem.push_back(std::move(x));
    }
  p.idempotents = idem;
  if (a->has_radical()) {
    // J_A (x) B + A (x) J_B
    std::vector<Vec> rad;
    const Matrix& ja = a->radical();
    for (std::size_t j = 0; j < db; ++j) {
      if (!t->B.paths[j].trivial()) {
        for (std::size_t i = 0; i < da; ++i) rad.push_back(unit_vec(f, p.dim, t->index(i, j)));
        continue;
      }
      for (std::size_t c = 0; c < ja.cols(); ++c) {
        Vec x = zero_vec(f, p.dim);
        for (std::size_t i = 0; i < da; ++i) x[t->index(i, j)] = ja(i, c);
        rad.push_back(std::move(x));
      }
    }
    p.radical_basis = rad;
  }
  t->flat = Algebra::validate(p);
  return t;
}

Matrix QuiverRep::path_map(const Path& p) const {
  if (p.trivial()) return Matrix::identity(vertex[p.source].field(), vertex[p.source].dim());
  Matrix m = arrow[p.arrows.back()];
  for (std::size_t k = p.arrows.size() - 1; k-- > 0;) m = arrow[p.arrows[k]] * m;
  return m;
}

std::size_t QuiverRep::dim() const {
  std::size_t d = 0;
  for (const auto& v : vertex) d += v.dim();
  return d;
}

std::vector<std::size_t> QuiverRep::offsets() const {
  std::vector<std::size_t> o;
  std::size_t d = 0;
  for (const auto& v : vertex) {
    o.push_back(d);
    d += v.dim();
  }
  return o;
}

QuiverRep QuiverRep::make(TensorPtr parent, std::vector<Module> vertex, std::vector<Matrix> arrow) {
  const Quiver& q = parent->B.quiver;
  if (vertex.size() != q.vertices.size() || arrow.size() != q.arrows.size())
    throw Error("representation does not match the quiver");
  for (std::size_t v = 0; v < vertex.size(); ++v)
    if (vertex[v].side() != Side::Left || !same_algebra(vertex[v].algebra(), parent->A))
      throw Error("vertex module " + q.vertices[v] + " is not a left module over A");
  for (std::size_t a = 0; a < arrow.size(); ++a) {
    const auto& ar = q.arrows[a];
    const Matrix& m = arrow[a];
    if (m.rows() != vertex[ar.target].dim() || m.cols() != vertex[ar.source].dim())
      throw Error("arrow map " + ar.name + " has the wrong shape");
    if (!intertwines(vertex[ar.source], vertex[ar.target], m))
      throw Error("arrow map " + ar.name + " is not A-linear");
  }
  QuiverRep r{std::move(parent), std::move(vertex), std::move(arrow)};
  for (const auto& rel : q.relation_indices()) {
    Path p{rel, q.arrows[rel.back()].source, q.arrows[rel.front()].target};
    if (!r.path_map(p).is_zero()) throw Error("representation violates a relation");
  }
  return r;
}

Module rep_to_module(const QuiverRep& r) {
  const TensorAlgebra& t = *r.parent;
  const Field& f = t.A->field();
  const std::size_t n = r.dim(), da = t.A->dim();
  auto off = r.offsets();
  std::vector<Matrix> acts(t.flat->dim(), Matrix(f, n, n));
  for (std::size_t j = 0; j < t.B.paths.size(); ++j) {
    const Path& p = t.B.paths[j];
    const Module& src = r.vertex[p.source];
    const Module& tgt = r.vertex[p.target];
    if (!src.dim() || !tgt.dim()) continue;
    Matrix xp = r.path_map(p);
    for (std::size_t i = 0; i < da; ++i) acts[t.index(i, j)].set_block(off[p.target], off[p.source], tgt.action(i) * xp);
  }
  return Module::trusted(t.flat, Side::Left, std::move(acts), "rep");
}

QuiverRep module_to_rep(const TensorPtr& t, const Module& m) {
  if (m.side() != Side::Left || !same_algebra(m.algebra(), t->flat))
    throw Error("module is not a left module over the tensor algebra");
  const Field& f = m.field();
  const Quiver& q = t->B.quiver;
  std::vector<Matrix> bases;
  std::vector<CoordinateMap> coords;
  std::vector<Module> vert;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    Matrix b = column_basis(m.action(t->unit_times(t->B.trivial(v))));
    if (b.cols() == 0) b = Matrix(f, m.dim(), 0);
    CoordinateMap cm(b);
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < t->A->dim(); ++i)
      acts.push_back(b.cols() ? cm.coords(m.action(t->index(i, t->B.trivial(v))) * b) : Matrix(f, 0, 0));
    vert.push_back(b.cols() ? Module::trusted(t->A, Side::Left, std::move(acts), q.vertices[v])
                            : Module::zero(t->A, Side::Left));
    bases.push_back(std::move(b));
    coords.push_back(std::move(cm));
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    const Matrix& bs = bases[ar.source];
    const Matrix& bt = bases[ar.target];
    if (!bs.cols() || !bt.cols()) {
      arrows.emplace_back(f, bt.cols(), bs.cols());
      continue;
    }
    arrows.push_back(coords[ar.target].coords(m.action(t->unit_times(t->B.arrow(a))) * bs));
  }
  return QuiverRep::make(t, std::move(vert), std::move(arrows));
}

Matrix gathered_map(const QuiverRep& r, std::size_t vertex) {
  const Field& f = r.parent->A->field();
  std::vector<Matrix> parts;
  for (std::size_t a = 0; a < r.arrow.size(); ++a)
    if (r.parent->B.quiver.arrows[a].target == vertex) parts.push_back(r.arrow[a]);
  if (parts.empty()) return Matrix(f, r.vertex[vertex].dim(), 0);
  return hstack(parts);
}

namespace {

std::size_t rank0(const Matrix& m) { return m.rows() && m.cols() ? rank(m) : 0; }

}  // namespace

Verdict monic_combinatorial(const QuiverRep& r) {
  const Quiver& q = r.parent->B.quiver;
  auto rels = q.relation_indices();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    std::size_t ker = r.vertex[ar.source].dim() - rank0(r.arrow[a]);
    std::vector<Matrix> images;
    for (const auto& rel : rels) {
      if (rel.front() != a) continue;
      std::vector<std::size_t> rest(rel.begin() + 1, rel.end());
      Path p{rest, q.arrows[rest.back()].source, q.arrows[rest.front()].target};
      images.push_back(r.path_map(p));
    }
    std::size_t sum = images.empty() ? 0 : rank0(hstack(images));
    if (sum != ker)
      return Verdict::fails(static_cast<long>(ar.target),
                            "kernel of " + ar.name + " has dimension " + std::to_string(ker) +
                                ", relations account for " + std::to_string(sum));
  }
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    std::size_t separate = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].target == v) separate += rank0(r.arrow[a]);
    if (separate != rank0(gathered_map(r, v)))
      return Verdict::fails(static_cast<long>(v), "images into vertex " + q.vertices[v] + " are not independent");
  }
  return Verdict::holds({"combinatorial-monic", {}, std::nullopt}, "monic");
}

Module vertex_simple(const PathAlgebra& b, std::size_t vertex, Side side) {
  const Field& f = b.algebra->field();
  std::vector<Matrix> acts;
  for (std::size_t j = 0; j < b.paths.size(); ++j) {
    Matrix m(f, 1, 1);
    if (j == b.trivial(vertex)) m(0, 0) = Scalar(f, 1);
    acts.push_back(std::move(m));
  }
  return Module::trusted(b.algebra, side, std::move(acts), "S" + b.quiver.vertices[vertex]);
}

Module outer_tensor(const TensorPtr& t, const Module& u, const Module& v) {
  if (u.side() != v.side()) throw Error("outer tensor needs modules on the same side");
  if (!same_algebra(u.algebra(), t->A) || !same_algebra(v.algebra(), t->B.algebra))
    throw Error("outer tensor factors are not over A and B");
  enforce_cap(u.dim() * v.dim(), "outer tensor");
  std::vector<Matrix> acts(t->flat->dim());
  for (std::size_t j = 0; j < t->B.paths.size(); ++j)
    for (std::size_t i = 0; i < t->A->dim(); ++i) acts[t->index(i, j)] = kron(u.action(i), v.action(j));
  return Module::trusted(t->flat, u.side(), std::move(acts));
}

Verdict monic_homological(const TensorPtr& t, const Module& x, std::size_t bound) {
  Module ar = regular(t->A, Side::Right);
  bool all_within = true;
  for (std::size_t v = 0; v < t->B.quiver.vertices.size(); ++v) {
    Module ds = vertex_simple(t->B, v, Side::Right);
    auto dims = tor_dims(outer_tensor(t, ar, ds), x, bound);
    for (std::size_t i = 1; i <= bound; ++i)
      if (dims[i])
        return Verdict::fails(static_cast<long>(i), "Tor_" + std::to_string(i) + " against D(S" +
                                                        t->B.quiver.vertices[v] + ") is nonzero");
    // A (x) P(D(S)) resolves A (x) D(S): Tor vanishes past pd D(S).
    auto r = cached_resolution(ds, bound + 1, true);
    all_within = all_within && r->complete && r->computed() <= bound + 1;
  }
  if (all_within)
    return Verdict::holds({"tor-vanishing-through-pd", {static_cast<long>(bound)}, std::nullopt},
                          "Tor vanishes through the projective dimension of every D(S)");
  return Verdict::unknown(static_cast<long>(bound), "Tor vanishes in degrees 1.." + std::to_string(bound));
}

Verdict monic_perp_form(const TensorPtr& t, const Module& x, std::size_t bound) {
  Module target = outer_tensor(t, k_dual(regular(t->A, Side::Right)), regular(t->B.algebra, Side::Left));
  return ext_vanishing(x, target, bound);
}

Verdict monic_check(const TensorPtr& t, const Module& x, MonicMode mode, std::size_t bound) {
  if (mode == MonicMode::Combinatorial) return monic_combinatorial(module_to_rep(t, x));
  return monic_homological(t, x, bound);
}

Module vertex_tensor(const TensorPtr& t, const Module& x, std::size_t vertex) {
  Module left = regular(t->A, Side::Left);
  Module right = outer_tensor(t, regular(t->A, Side::Right), vertex_simple(t->B, vertex, Side::Right));
  return tensor_over(Bimodule::make(left, right), x).result;
}

Verdict mon_membership(const TensorPtr& t, const Module& x, const ModulePredicate& in_c, MembershipForm form) {
  QuiverRep r = module_to_rep(t, x);
  Verdict monic = monic_combinatorial(r);
  if (!monic.is_holds()) throw Error("module is not monic: " + monic.detail);
  const Quiver& q = t->B.quiver;
  std::vector<Verdict> parts;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    Module c;
    if (form == MembershipForm::Tensor) {
      c = vertex_tensor(t, x, v);
    } else {
      Matrix g = gathered_map(r, v);
      Matrix img = g.cols() && g.rows() ? column_basis(g) : Matrix(x.field(), r.vertex[v].dim(), 0);
      c = img.cols() ? quotient_module(r.vertex[v], img).module : r.vertex[v];
    }
    Verdict p = in_c(c);
    if (p.is_fails()) {
      p.witness = static_cast<long>(v);
      p.detail = "vertex " + q.vertices[v] + ": " + p.detail;
      return p;
    }
    parts.push_back(std::move(p));
  }
  return conjunction(parts, "vertex modules in C");
}

}  // namespace monicgp
