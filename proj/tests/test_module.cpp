#include <gtest/gtest.h>

#include "support.hpp"

using namespace monicgp;
using namespace monicgp::test;

TEST(Module, ActionLawWitness) {
  AlgebraPtr a = dual_numbers();
  Matrix one = Matrix::identity(Q, 1), x = Matrix::identity(Q, 1);
  try {
    Module::validate(a, Side::Left, {one, x});
    FAIL() << "x acting by 1 must break x*x = 0";
  } catch (const ModuleError& e) {
    EXPECT_EQ(e.witness(), (std::vector<std::size_t>{1, 1}));
  }
  EXPECT_THROW(Module::validate(a, Side::Left, {one}), ModuleError);
}

TEST(Module, RightModulesUseReversedProducts) {
  AlgebraPtr a = lambda_q(Q, sc(2)).algebra;
  Module r = regular(a, Side::Right);
  const Vec x = a->basis(LambdaQ::X), y = a->basis(LambdaQ::Y);
  // v (x y) = (v x) y
  EXPECT_EQ(r.action(a->multiply(x, y)), r.action(y) * r.action(x));
}

TEST(Module, HomDimensionsOverDualNumbers) {
  AlgebraPtr a = dual_numbers();
  Module reg = regular(a, Side::Left);
  Module k = simples_and_projectives(a).simples.at(0);
  EXPECT_EQ(HomSpace(reg, reg).dim(), 2u);
  EXPECT_EQ(HomSpace(k, reg).dim(), 1u);
  EXPECT_EQ(HomSpace(reg, k).dim(), 1u);
  EXPECT_EQ(HomSpace(k, k).dim(), 1u);
}

TEST(Module, HomBasisIntertwinesAndCoordinatesRoundTrip) {
  Sampler s(11);
  for (const auto& a : small_algebras()) {
    for (int n = 0; n < 4; ++n) {
      Module m = s.module(a, Side::Left, 5), t = s.module(a, Side::Left, 5);
      HomSpace h(m, t);
      for (const auto& b : h.basis()) EXPECT_TRUE(intertwines(m, t, b));
      Vec c = s.vec(a->field(), h.dim());
      EXPECT_EQ(h.coords(h.map(c)), c);
    }
  }
}

TEST(Module, SubquotientDimensions) {
  Sampler s(12);
  for (const auto& a : small_algebras()) {
    Module m = s.module(a, Side::Left, 5), t = s.module(a, Side::Left, 5);
    ModuleMap f = ModuleMap::make(m, t, s.hom(m, t));
    Subquotient q = subquotient(f);
    EXPECT_EQ(q.kernel.module.dim() + q.image.module.dim(), m.dim());
    EXPECT_EQ(q.image.module.dim() + q.cokernel.module.dim(), t.dim());
    EXPECT_TRUE((f.matrix * q.kernel.inclusion).is_zero());
  }
}

TEST(Module, KDualIsInvolutive) {
  Sampler s(13);
  for (const auto& a : small_algebras()) {
    Module m = s.module(a, Side::Left, 5);
    Module dd = k_dual(k_dual(m));
    EXPECT_EQ(dd.side(), m.side());
    EXPECT_TRUE(equal_modules(dd, m));
  }
}

TEST(Module, DirectSumProjectionsSplit) {
  AlgebraPtr a = dual_numbers();
  auto sp = simples_and_projectives(a);
  DirectSum d = direct_sum({sp.simples[0], regular(a, Side::Left)});
  EXPECT_EQ(d.sum.dim(), 3u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE((d.projections[i] * d.inclusions[i]).is_identity());
  EXPECT_TRUE((d.projections[1] * d.inclusions[0]).is_zero());
}

TEST(Module, RegularTensorIsIdentity) {
  Sampler s(14);
  for (const auto& a : small_algebras()) {
    Module y = s.module(a, Side::Left, 5);
    TensorProduct t = tensor_over(Bimodule::regular(a), y);
    EXPECT_EQ(t.result.dim(), y.dim());
    EXPECT_TRUE(is_isomorphic(t.result, y, 1).is_holds());
  }
}

TEST(Module, TensorWithSimpleCountsTop) {
  // S (x)_A M has dimension dim M / JM for the simple right module of a local algebra
  AlgebraPtr a = lambda_q(Q, sc(2)).algebra;
  Module s_right = simples_and_projectives(a, Side::Right).simples.at(0);
  Sampler smp(15);
  for (int n = 0; n < 5; ++n) {
    Module m = smp.module(a, Side::Left, 6);
    EXPECT_EQ(tensor_over(s_right, m).result.dim(), module_generators(m).size());
  }
}

TEST(Module, IsomorphismVerdicts) {
  Sampler s(16);
  for (const auto& a : small_algebras()) {
    Module m = s.module(a, Side::Left, 5);
    // conjugate by a random invertible matrix
    Matrix g;
    do {
      g = Matrix(a->field(), m.dim(), m.dim());
      for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) g(i, j) = s.scalar(a->field());
    } while (!invertible(g));
    Matrix gi = inverse(g);
    std::vector<Matrix> acts;
    for (const auto& x : m.actions()) acts.push_back(g * x * gi);
    Module n = Module::validate(a, Side::Left, acts);
    Verdict v = is_isomorphic(m, n, 3);
    ASSERT_TRUE(v.is_holds());
    ASSERT_TRUE(v.certificate && v.certificate->matrix);
    EXPECT_TRUE(intertwines(m, n, *v.certificate->matrix));
    EXPECT_TRUE(invertible(*v.certificate->matrix));
  }
  AlgebraPtr a = dual_numbers();
  auto sp = simples_and_projectives(a);
  Module kk = direct_sum({sp.simples[0], sp.simples[0]}).sum;
  EXPECT_TRUE(is_isomorphic(kk, regular(a, Side::Left), 1).is_fails());
}

TEST(Module, SimplesAndProjectivesOfPathAlgebra) {
  PathAlgebra p = path_algebra(Q, linear_quiver(3));
  auto sp = simples_and_projectives(p.algebra);
  ASSERT_EQ(sp.projectives.size(), 3u);
  std::size_t total = 0;
  for (const auto& pr : sp.projectives) total += pr.module.dim();
  EXPECT_EQ(total, p.algebra->dim());
  for (const auto& s : sp.simples) EXPECT_EQ(s.dim(), 1u);
}

TEST(Module, SocleAndRadicalOfRegular) {
  AlgebraPtr a = lambda_q(Q, sc(2)).algebra;
  Module reg = regular(a, Side::Left);
  EXPECT_EQ(radical_of(reg).cols(), 5u);
  EXPECT_EQ(socle_of(reg).cols(), 2u);
}
