#include <gtest/gtest.h>

#include "support.hpp"

using namespace monicgp;
using namespace monicgp::test;

namespace {

Quiver random_acyclic(Sampler& s) {
  Quiver q;
  const std::size_t n = 2 + s.below(2);
  for (std::size_t i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i + 1));
  std::size_t k = 0;
  for (std::size_t src = 1; src < n; ++src)
    for (std::size_t tgt = 0; tgt < src; ++tgt)
      if (s.coin(0.6)) q.arrows.push_back({"a" + std::to_string(k++), src, tgt});
  if (q.arrows.empty()) q.arrows.push_back({"a0", 1, 0});
  return q;
}

}  // namespace

TEST(Quiver, RelationValidation) {
  Quiver q = linear_quiver(3);
  q.relations = {{"a2", "a1"}};  // a2 after a1 is not composable
  EXPECT_THROW(q.relation_indices(), Error);
  q.relations = {{"a1"}};
  EXPECT_THROW(q.relation_indices(), Error);
  q.relations = {{"a1", "zz"}};
  EXPECT_THROW(q.relation_indices(), Error);
  q.relations = {{"a1", "a2"}};
  EXPECT_NO_THROW(q.relation_indices());
  EXPECT_EQ(path_algebra(Q, q).algebra->dim(), 5u);
}

TEST(Quiver, CyclicRejectedForTensor) {
  Quiver q{{"1"}, {{"b", 0, 0}}, {{"b", "b"}}};
  EXPECT_FALSE(q.acyclic());
  EXPECT_THROW(build_tensor(dual_numbers(), q), Error);
}

TEST(Tensor, DimensionAndIdempotents) {
  TensorPtr t = build_tensor(dual_numbers(), linear_quiver(3));
  EXPECT_EQ(t->flat->dim(), 2u * 6u);
  ASSERT_TRUE(t->flat->idempotents());
  EXPECT_EQ(t->flat->idempotents()->size(), 3u);
}

TEST(Tensor, RepresentationRoundTrip) {
  Sampler s(51);
  for (int n = 0; n < 6; ++n) {
    TensorPtr t = build_tensor(dual_numbers(), random_acyclic(s));
    Module m = s.module(t->flat, Side::Left, 6);
    QuiverRep r = module_to_rep(t, m);
    EXPECT_EQ(r.dim(), m.dim());
    Module back = rep_to_module(r);
    EXPECT_TRUE(is_isomorphic(back, m, 1).is_holds());
  }
}

TEST(Tensor, MonicModesAgreeWithoutRelations) {
  Sampler s(52);
  std::size_t definite = 0;
  for (int n = 0; n < 16; ++n) {
    TensorPtr t = build_tensor(n % 2 ? dual_numbers() : ground_algebra(Q), random_acyclic(s));
    Module m = n % 3 ? s.module(t->flat, Side::Left, 6) : s.projective_submodule(t->flat, 2).module;
    QuiverRep r = module_to_rep(t, m);
    Verdict comb = monic_combinatorial(r);
    Verdict hom = monic_homological(t, m, 4);
    ASSERT_FALSE(comb.is_unknown());
    if (hom.is_unknown()) continue;
    ++definite;
    EXPECT_EQ(comb.is_holds(), hom.is_holds()) << n;
  }
  EXPECT_GT(definite, 0u);
}

TEST(Tensor, PerpFormMatchesTorForm) {
  Sampler s(53);
  TensorPtr t = build_tensor(dual_numbers(), linear_quiver(2));
  for (int n = 0; n < 6; ++n) {
    Module m = s.module(t->flat, Side::Left, 5);
    Verdict a = monic_homological(t, m, 4), b = monic_perp_form(t, m, 4);
    if (a.is_unknown() || b.is_unknown()) continue;
    EXPECT_EQ(a.is_holds(), b.is_holds());
  }
}

TEST(Tensor, TorsionlessSimpleIsNotMonic) {
  PathTorsionlessExample ex = path_torsionless_example(Q);
  EXPECT_EQ(ex.s2.dim(), 1u);
  EXPECT_TRUE(is_torsionless(ex.s2));
  Verdict v = monic_combinatorial(module_to_rep(ex.tensor, ex.s2));
  ASSERT_TRUE(v.is_fails());
}

TEST(Tensor, OuterTensorDimensions) {
  TensorPtr t = build_tensor(dual_numbers(), linear_quiver(2));
  Module u = regular(t->A, Side::Left);
  Module v = vertex_simple(t->B, 0, Side::Left);
  Module uv = outer_tensor(t, u, v);
  EXPECT_EQ(uv.dim(), 2u);
  EXPECT_NO_THROW(uv.check_laws());
}

TEST(Tensor, MonMembershipForms) {
  // relation-free quiver: the tensor and cokernel forms agree
  Sampler s(54);
  TensorPtr t = build_tensor(dual_numbers(), linear_quiver(2));
  ModulePredicate proj = [](const Module& m) {
    return is_projective(m) ? Verdict::holds({"projective", {}, std::nullopt})
                            : Verdict::fails(std::nullopt, "not projective");
  };
  for (int n = 0; n < 8; ++n) {
    Module m = s.projective_submodule(t->flat, 2).module;
    Verdict a = mon_membership(t, m, proj, MembershipForm::Tensor);
    Verdict b = mon_membership(t, m, proj, MembershipForm::Cokernel);
    EXPECT_EQ(a.status, b.status);
  }
  // the simple at the source of the arrow is not monic
  Module bad = outer_tensor(t, simples_and_projectives(t->A).simples.at(0), vertex_simple(t->B, 1, Side::Left));
  EXPECT_TRUE(monic_combinatorial(module_to_rep(t, bad)).is_fails());
  EXPECT_THROW(mon_membership(t, bad, proj), Error);
}
