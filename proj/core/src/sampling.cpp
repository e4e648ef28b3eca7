#include "monicgp/sampling.hpp"

#include "monicgp/linalg.hpp"

namespace monicgp {

Scalar Sampler::scalar(const Field& f, bool nonzero) {
  std::uniform_int_distribution<long> d(-2, 2);
  long v = 0;
  do v = d(rng_);
  while (nonzero && Scalar(f, v).is_zero());
  return Scalar(f, v);
}

Vec Sampler::vec(const Field& f, std::size_t n, double density) {
  Vec v = zero_vec(f, n);
  for (auto& x : v)
    if (coin(density)) x = scalar(f, true);
  return v;
}

std::size_t Sampler::below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Module Sampler::leaf(const AlgebraPtr& a, Side side, std::size_t max_dim) {
  const Field& f = a->field();
  Module reg = regular(a, side);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Module m;
    switch (below(4)) {
      case 0: {  // A / A v
        auto sub = generated_submodule(reg, {vec(f, a->dim())});
        m = quotient_module(reg, sub.inclusion).module;
        break;
      }
      case 1: {  // A w inside A^2
        Module free2 = direct_sum({reg, reg}).sum;
        m = generated_submodule(free2, {vec(f, free2.dim())}).module;
        break;
      }
      case 2: {
        auto sp = simples_and_projectives(a, side);
        m = sp.projectives[below(sp.projectives.size())].module;
        break;
      }
      default: {
        auto sp = simples_and_projectives(a, side);
        m = sp.simples[below(sp.simples.size())];
        break;
      }
    }
    if (m.dim() >= 1 && m.dim() <= max_dim) return m;
  }
  return simples_and_projectives(a, side).simples[0];
}

Module Sampler::module(const AlgebraPtr& a, Side side, std::size_t max_dim) {
  Module m = leaf(a, side, max_dim);
  if (m.dim() < max_dim && coin(0.3)) {
    Module n = leaf(a, side, max_dim - m.dim());
    if (m.dim() + n.dim() <= max_dim) m = direct_sum({m, n}).sum;
  }
  return m;
}

Matrix Sampler::hom(const Module& m, const Module& n) {
  const Field& f = m.field();
  Matrix out(f, n.dim(), m.dim());
  if (!m.dim() || !n.dim()) return out;
  HomSpace h(m, n);
  for (const auto& b : h.basis())
    if (coin(0.7)) out.add_scaled(scalar(f, true), b);
  return out;
}

TripleModule Sampler::triple(const TriangularPtr& t2, std::size_t max_dim) {
  const AlgebraPtr& a = t2->A;
  Module x = coin(0.1) ? Module::zero(a, Side::Left) : module(a, Side::Left, max_dim);
  Module y = coin(0.1) ? Module::zero(a, Side::Left) : module(a, Side::Left, max_dim);
  Matrix phi = hom(y, x);
  // bias towards monic and split cases
  if (coin(0.2) && y.dim() && y.dim() <= max_dim) {
    Matrix id = Matrix::identity(y.field(), y.dim());
    return TripleModule::make(t2, y, y, coin(0.5) ? id : hom(y, y));
  }
  return TripleModule::make(t2, x, y, phi);
}

Submodule Sampler::projective_submodule(const AlgebraPtr& a, std::size_t max_summands) {
  auto sp = simples_and_projectives(a, Side::Left);
  std::vector<Module> parts;
  const std::size_t n = 1 + below(max_summands);
  for (std::size_t i = 0; i < n; ++i) parts.push_back(sp.projectives[below(sp.projectives.size())].module);
  Module p = direct_sum(parts).sum;
  std::vector<Vec> gens{vec(a->field(), p.dim())};
  if (coin()) gens.push_back(vec(a->field(), p.dim()));
  Submodule s = generated_submodule(p, gens);
  return {s.module, s.inclusion};
}

}  // namespace monicgp
