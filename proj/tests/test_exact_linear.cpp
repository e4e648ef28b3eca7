#include <gtest/gtest.h>

#include "support.hpp"

using namespace monicgp;
using namespace monicgp::test;

TEST(Field, ParsesSpellings) {
  EXPECT_TRUE(Field::parse("Q").is_rational());
  EXPECT_TRUE(Field::parse("QQ").is_rational());
  EXPECT_EQ(Field::parse("GF(7)").characteristic(), 7u);
  EXPECT_EQ(Field::parse("F_5").characteristic(), 5u);
  EXPECT_EQ(Field::parse("F11").characteristic(), 11u);
  EXPECT_THROW(Field::parse("GF(8)"), Error);
  EXPECT_THROW(Field::parse("R"), Error);
}

TEST(Scalar, RationalCanonicalForm) {
  Scalar a = Scalar::parse(Q, "3/6");
  EXPECT_EQ(a.to_string(), "1/2");
  EXPECT_EQ((a + a).to_string(), "1");
  EXPECT_EQ((a * sc(-4)).to_string(), "-2");
  EXPECT_EQ(a.inverse().to_string(), "2");
  EXPECT_THROW(sc(0).inverse(), Error);
}

TEST(Scalar, PrimeFieldResidues) {
  Field f = Field::prime(7);
  EXPECT_EQ(Scalar::parse(f, "-1").to_string(), "6");
  EXPECT_EQ(Scalar::parse(f, "15").to_string(), "1");
  for (long v = 1; v < 7; ++v) EXPECT_TRUE((Scalar(f, v) * Scalar(f, v).inverse()).is_one()) << v;
}

TEST(Scalar, MixingFieldsThrows) {
  EXPECT_THROW(sc(1) + Scalar(Field::prime(3), 1), FieldMismatch);
}

class RandomMatrices : public ::testing::TestWithParam<const char*> {};

Matrix random_matrix(Sampler& s, const Field& f, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = s.scalar(f);
  return m;
}

TEST_P(RandomMatrices, RankNullity) {
  Field f = Field::parse(GetParam());
  Sampler s(5);
  for (int n = 0; n < 40; ++n) {
    Matrix m = random_matrix(s, f, 1 + s.below(6), 1 + s.below(6));
    Matrix k = kernel(m);
    EXPECT_EQ(rank(m) + k.cols(), m.cols());
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST_P(RandomMatrices, SolveAndInverse) {
  Field f = Field::parse(GetParam());
  Sampler s(6);
  for (int n = 0; n < 40; ++n) {
    std::size_t d = 1 + s.below(5);
    Matrix m = random_matrix(s, f, d, d);
    Matrix x = random_matrix(s, f, d, 2);
    Matrix rhs = m * x;
    Matrix sol = solve(m, rhs);
    EXPECT_EQ(m * sol, rhs);
    if (rank(m) == d) EXPECT_TRUE((m * inverse(m)).is_identity());
  }
}

TEST_P(RandomMatrices, RrefIsIdempotent) {
  Field f = Field::parse(GetParam());
  Sampler s(7);
  for (int n = 0; n < 20; ++n) {
    Matrix m = random_matrix(s, f, 1 + s.below(5), 1 + s.below(5));
    Rref r = rref(m);
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    EXPECT_EQ(r.pivots.size(), rank(m));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, RandomMatrices, ::testing::Values("Q", "GF(2)", "GF(5)", "GF(101)"));

TEST(Linalg, InconsistentSystem) {
  Matrix m(Q, 2, 1);
  m(0, 0) = sc(1);
  Matrix rhs(Q, 2, 1);
  rhs(1, 0) = sc(1);
  EXPECT_THROW(solve(m, rhs), InconsistentSystem);
  EXPECT_FALSE(try_solve(m, rhs).has_value());
}

TEST(Linalg, EchelonBasisSpan) {
  EchelonBasis e(Q, 3);
  EXPECT_TRUE(e.insert({sc(1), sc(1), sc(0)}));
  EXPECT_TRUE(e.insert({sc(0), sc(1), sc(1)}));
  EXPECT_FALSE(e.insert({sc(1), sc(2), sc(1)}));
  EXPECT_TRUE(e.contains({sc(1), sc(0), sc(-1)}));
  EXPECT_EQ(e.dim(), 2u);
}

TEST(Linalg, QuotientSplits) {
  Matrix sub(Q, 3, 1);
  sub(0, 0) = sc(1);
  sub(2, 0) = sc(1);
  Quotient q = quotient(Q, 3, sub);
  EXPECT_EQ(q.proj.rows(), 2u);
  EXPECT_TRUE((q.proj * sub).is_zero());
  EXPECT_TRUE((q.proj * q.section).is_identity());
}

TEST(Linalg, DimensionCap) {
  const std::size_t old = dimension_cap();
  set_dimension_cap(4);
  EXPECT_THROW(enforce_cap(5, "test"), CapExceeded);
  EXPECT_NO_THROW(enforce_cap(4, "test"));
  set_dimension_cap(old);
}

TEST(Matrix, KroneckerIndexing) {
  Matrix a = Matrix::identity(Q, 2);
  Matrix b(Q, 1, 2);
  b(0, 1) = sc(3);
  Matrix k = kron(a, b);
  EXPECT_EQ(k.rows(), 2u);
  EXPECT_EQ(k.cols(), 4u);
  EXPECT_EQ(k(1, 3), sc(3));
  EXPECT_TRUE(k(0, 3).is_zero());
}
