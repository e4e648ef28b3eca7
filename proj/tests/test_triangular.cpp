#include <gtest/gtest.h>

#include "support.hpp"

using namespace monicgp;
using namespace monicgp::test;

namespace {

std::vector<TriangularPtr> t2_algebras() {
  return {build_t2(dual_numbers()), build_t2(lsgp_example(Q).algebra.algebra),
          build_t2(lambda_q(Q, sc(2)).algebra)};
}

}  // namespace

TEST(Triangular, T2Dimensions) {
  for (const auto& t : t2_algebras()) {
    EXPECT_TRUE(t->t2);
    EXPECT_EQ(t->flat->dim(), 3 * t->A->dim());
    Vec sum = add(t->e1(), t->e2());
    EXPECT_EQ(sum, t->flat->unit());
    EXPECT_EQ(t->flat->multiply(t->e1(), t->e1()), t->e1());
    EXPECT_TRUE(is_zero(t->flat->multiply(t->e2(), t->e1())));
  }
}

TEST(Triangular, TripleRoundTrip) {
  Sampler s(41);
  for (const auto& t : t2_algebras()) {
    for (int n = 0; n < 5; ++n) {
      TripleModule x = s.triple(t, 5);
      Module flat = triple_to_module(x);
      EXPECT_NO_THROW(flat.check_laws());
      TripleModule back = module_to_triple(t, flat);
      EXPECT_TRUE(equal_modules(back.X, x.X));
      EXPECT_TRUE(equal_modules(back.Y, x.Y));
      EXPECT_EQ(back.phi, x.phi);
    }
  }
}

TEST(Triangular, PhiMustBeLinear) {
  AlgebraPtr a = dual_numbers();
  TriangularPtr t = build_t2(a);
  Module reg = regular(a, Side::Left);
  Module k = simples_and_projectives(a).simples.at(0);
  Matrix bad(Q, 1, 2);
  bad(0, 0) = sc(1);  // A -> k sending 1 to 1 is fine
  EXPECT_NO_THROW(TripleModule::make(t, k, reg, bad));
  Matrix worse(Q, 2, 1);
  worse(0, 0) = sc(1);  // k -> A sending 1 to 1 is not linear
  EXPECT_THROW(TripleModule::make(t, reg, k, worse), Error);
}

TEST(Triangular, MonicKernelVector) {
  LambdaModules pm = lambda_modules(Q, sc(2), sc(0));
  MonicResult r = is_monic_bimodule(pm.xc);
  EXPECT_FALSE(r.monic);
  ASSERT_TRUE(r.kernel_vector);
  EXPECT_TRUE(is_zero(pm.xc.phi * *r.kernel_vector));
  EXPECT_FALSE(is_zero(*r.kernel_vector));
}

TEST(Triangular, DualBundleInvariants) {
  Sampler s(42);
  for (const auto& t : t2_algebras()) {
    for (int n = 0; n < 6; ++n) {
      TripleModule x = s.triple(t, 6);
      T2DualBundle b = t2_dual_bundle(x);
      EXPECT_TRUE(b.all_invariants());
      EXPECT_EQ(b.phi_flat, canonical_map(triple_to_module(x)).matrix);
    }
  }
}

TEST(Triangular, ComponentCriteria) {
  Sampler s(43);
  for (const auto& t : t2_algebras()) {
    for (int n = 0; n < 4; ++n) {
      TripleModule x = s.triple(t, 5);
      TripleReport r = classify_triple(x, 4, 1);
      EXPECT_EQ(r.flat.torsionless, r.torsionless_components);
      EXPECT_EQ(r.flat_phi_epi, r.epi_components);
      EXPECT_EQ(r.flat.reflexive, r.reflexive_components);
      EXPECT_EQ(r.beta_invertible, r.phi_star_onto);
      EXPECT_TRUE(r.disagreements.empty()) << r.disagreements.front();
    }
  }
}

TEST(Triangular, ApproximationTripleOfSimple) {
  AlgebraPtr a = dual_numbers();
  TriangularPtr t = build_t2(a);
  Module k = simples_and_projectives(a).simples.at(0);
  TripleModule x = approximation_triple(t, k);
  EXPECT_TRUE(is_monic_bimodule(x).monic);
  TripleReport r = classify_triple(x, 6, 1);
  EXPECT_TRUE(r.flat.gp.is_holds());
  EXPECT_TRUE(r.disagreements.empty());
}

TEST(Triangular, RightPairModule) {
  AlgebraPtr a = dual_numbers();
  TriangularPtr t = build_t2(a);
  Module r = regular(a, Side::Right);
  Module m = right_pair_module(*t, r, r, Matrix::identity(Q, 2));
  EXPECT_EQ(m.side(), Side::Right);
  EXPECT_NO_THROW(m.check_laws());
  EXPECT_THROW(right_pair_module(*t, r, r, Matrix(Q, 1, 1)), Error);
}

TEST(Triangular, GeneralBimodule) {
  GeneralBimoduleExample ex = general_bimodule_example(Q);
  EXPECT_FALSE(ex.algebra->t2);
  EXPECT_NO_THROW(ex.flat.check_laws());
  TripleReport r = classify_triple(ex.triple, 4, 1);
  EXPECT_FALSE(r.t2);
  EXPECT_FALSE(r.notes.empty());
  EXPECT_THROW(t2_dual_bundle(ex.triple), Error);
}
