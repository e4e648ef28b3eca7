#include <gtest/gtest.h>

#include "support.hpp"

using namespace monicgp;
using namespace monicgp::test;

namespace {

AlgebraPresentation dual_presentation() { return dual_numbers()->presentation(); }

AlgebraError::Kind kind_of(const AlgebraPresentation& p) {
  try {
    Algebra::validate(p);
  } catch (const AlgebraError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "validation passed";
  return AlgebraError::Kind::Malformed;
}

}  // namespace

TEST(Algebra, DualNumbers) {
  AlgebraPtr a = dual_numbers();
  EXPECT_EQ(a->dim(), 2u);
  Vec x = a->basis(1);
  EXPECT_TRUE(is_zero(a->multiply(x, x)));
  EXPECT_EQ(a->multiply(a->unit(), x), x);
  ASSERT_TRUE(a->has_radical());
  EXPECT_EQ(a->radical().cols(), 1u);
}

TEST(Algebra, NonAssociativeWitness) {
  AlgebraPresentation p{Q, 3, {"1", "a", "b"}, unit_vec(Q, 3, 0), {}, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < 3; ++i) {
    p.struct_consts.push_back({0, i, i, sc(1)});
    if (i) p.struct_consts.push_back({i, 0, i, sc(1)});
  }
  p.struct_consts.push_back({1, 1, 2, sc(1)});
  p.struct_consts.push_back({2, 1, 0, sc(1)});
  try {
    Algebra::validate(p);
    FAIL() << "accepted a non-associative table";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraError::Kind::NonAssociative);
    ASSERT_EQ(e.witness().size(), 3u);
    // the witness really breaks associativity
    auto a = [&](std::size_t i) { return unit_vec(Q, 3, i); };
    auto mul = [&](const Vec& u, const Vec& v) {
      Vec out = zero_vec(Q, 3);
      for (const auto& c : p.struct_consts) out[c.k] += u[c.i] * v[c.j] * c.value;
      return out;
    };
    auto [i, j, k] = std::tuple{e.witness()[0], e.witness()[1], e.witness()[2]};
    EXPECT_NE(mul(mul(a(i), a(j)), a(k)), mul(a(i), mul(a(j), a(k))));
  }
}

TEST(Algebra, UnitLawChecked) {
  auto p = dual_presentation();
  p.unit = unit_vec(Q, 2, 1);
  EXPECT_EQ(kind_of(p), AlgebraError::Kind::UnitLaw);
}

TEST(Algebra, BadIdempotentsRejected) {
  auto p = dual_presentation();
  p.idempotents = std::vector<Vec>{unit_vec(Q, 2, 1)};
  EXPECT_EQ(kind_of(p), AlgebraError::Kind::BadIdempotents);
}

TEST(Algebra, BadRadicalRejected) {
  auto p = dual_presentation();
  p.radical_basis = std::vector<Vec>{unit_vec(Q, 2, 0)};
  EXPECT_EQ(kind_of(p), AlgebraError::Kind::BadRadical);
}

TEST(Algebra, MalformedIndex) {
  auto p = dual_presentation();
  p.struct_consts.push_back({5, 0, 0, sc(1)});
  EXPECT_EQ(kind_of(p), AlgebraError::Kind::Malformed);
}

TEST(Algebra, OppositeIsInvolutive) {
  AlgebraPtr a = lambda_q(Q, sc(2)).algebra;
  AlgebraPtr op = a->opposite();
  EXPECT_EQ(op->opposite().get(), a.get());
  const std::size_t x = LambdaQ::X, y = LambdaQ::Y;
  EXPECT_EQ(op->multiply(a->basis(x), a->basis(y)), a->multiply(a->basis(y), a->basis(x)));
  EXPECT_FALSE(a->same_structure(*op));  // xy = -2 yx, so Lambda(2) is not commutative
}

TEST(Algebra, LambdaQShape) {
  LambdaQ l = lambda_q(Q, sc(2));
  EXPECT_EQ(l.algebra->dim(), 6u);
  EXPECT_TRUE(l.warnings.empty());
  auto powers = radical_powers(*l.algebra);
  ASSERT_EQ(powers.size(), 3u);  // J, J^2 and the terminating J^3 = 0
  EXPECT_EQ(powers[0].cols(), 5u);
  EXPECT_EQ(powers[1].cols(), 2u);
  EXPECT_EQ(powers[2].cols(), 0u);
  EXPECT_THROW(lambda_q(Q, sc(0)), Error);
  EXPECT_FALSE(lambda_q(Q, sc(-1)).warnings.empty());
  EXPECT_FALSE(lambda_q(Field::prime(5), Scalar(Field::prime(5), 2)).warnings.empty());
}

TEST(Algebra, PathAlgebraBasisOrder) {
  PathAlgebra p = path_algebra(Q, linear_quiver(3));
  EXPECT_EQ(p.algebra->dim(), 6u);
  for (std::size_t i = 0; i + 1 < p.paths.size(); ++i)
    EXPECT_LE(p.paths[i].arrows.size(), p.paths[i + 1].arrows.size());
  ASSERT_TRUE(p.algebra->idempotents());
  EXPECT_EQ(p.algebra->idempotents()->size(), 3u);
}

TEST(Algebra, PathAlgebraCompositionConvention) {
  // {"a1", "a2"} is a1 after a2 : 3 -> 2 -> 1
  PathAlgebra p = path_algebra(Q, linear_quiver(3));
  auto long_path = p.find({p.quiver.arrow_index("a1"), p.quiver.arrow_index("a2")});
  ASSERT_TRUE(long_path.has_value());
  Vec prod = p.algebra->multiply(p.algebra->basis(p.arrow(0)), p.algebra->basis(p.arrow(1)));
  EXPECT_EQ(prod, p.algebra->basis(*long_path));
  EXPECT_TRUE(is_zero(p.algebra->multiply(p.algebra->basis(p.arrow(1)), p.algebra->basis(p.arrow(0)))));
}

TEST(Algebra, CyclicQuiverNeedsOptIn) {
  Quiver q{{"1"}, {{"b", 0, 0}}, {{"b", "b"}}};
  EXPECT_THROW(path_algebra(Q, q), Error);
  EXPECT_EQ(path_algebra(Q, q, true).algebra->dim(), 2u);
}

TEST(Algebra, LsgpAlgebraDimension) {
  // paths e1, e2, a, b; b^2 = ab = 0 kill everything longer, so J = span{a, b}
  AlgebraPtr a = lsgp_example(Q).algebra.algebra;
  EXPECT_EQ(a->dim(), 4u);
  EXPECT_EQ(a->radical().cols(), 2u);
}

TEST(Algebra, LsgpSimpleOneEmbedsInPTwo) {
  // S1 = P1, and the arrow a spans a copy of S1 inside P2
  LsgpExample ex = lsgp_example(Q);
  EXPECT_TRUE(is_projective(ex.s1));
  EXPECT_EQ(HomSpace(ex.s1, ex.p2).dim(), 1u);
  EXPECT_EQ(HomSpace(ex.s2, ex.s1).dim(), 0u);
}

TEST(Algebra, GeneratorsGenerate) {
  for (const auto& a : small_algebras()) {
    EchelonBasis span(a->field(), a->dim());
    std::vector<Vec> frontier{a->unit()};
    span.insert(a->unit());
    while (!frontier.empty()) {
      Vec v = frontier.back();
      frontier.pop_back();
      for (std::size_t g : a->generators()) {
        Vec w = a->multiply(a->basis(g), v);
        if (span.insert(w)) frontier.push_back(w);
      }
    }
    EXPECT_EQ(span.dim(), a->dim());
  }
}

TEST(Algebra, RegularModulesSatisfyLaws) {
  for (const auto& a : small_algebras()) {
    auto [l, r] = regular_modules(a);
    EXPECT_NO_THROW(l.check_laws());
    EXPECT_NO_THROW(r.check_laws());
  }
}
