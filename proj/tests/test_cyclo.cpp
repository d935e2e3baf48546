#include <gtest/gtest.h>

#include <random>

#include "hennings/cyclo.hpp"

using namespace hennings;

namespace {

CycloScalar random_scalar(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
  std::uniform_int_distribution<long> exp(0, static_cast<long>(n) - 1);
  CycloScalar out;
  for (int t = 0; t < 3; ++t) out += CycloScalar(Rational(num(rng), den(rng))) * CycloScalar::zeta(n, exp(rng));
  return out;
}

}  // namespace

TEST(Cyclo, ZetaFourSquaredIsMinusOne) {
  const auto i = CycloScalar::zeta(4);
  EXPECT_EQ(i * i, CycloScalar(-1));
}

TEST(Cyclo, CubeRootsSumToZero) {
  const auto w = CycloScalar::zeta(3);
  EXPECT_TRUE((CycloScalar(1) + w + w * w).is_zero());
}

TEST(Cyclo, NormOfCp2Value) {
  const auto w = CycloScalar::zeta(3);
  const CycloScalar x = CycloScalar(Rational(1, 3)) * (CycloScalar(1) + CycloScalar(2) * w);
  const CycloScalar y = CycloScalar(Rational(1, 3)) * (CycloScalar(1) + CycloScalar(2) * w * w);
  EXPECT_EQ(x.conj(), y);
  EXPECT_EQ(x * y, CycloScalar(Rational(1, 3)));
}

TEST(Cyclo, DivisionByZeroThrows) {
  EXPECT_THROW(CycloScalar(1) / CycloScalar(0), ArithmeticError);
  EXPECT_THROW(CycloScalar().inverse(), ArithmeticError);
}

TEST(Cyclo, ConductorOfResultIsLcm) {
  const auto x = CycloScalar::zeta(4) * CycloScalar::zeta(6);
  EXPECT_EQ(x.conductor() % 12, 0u);
  EXPECT_EQ(x, CycloScalar::zeta(12, 5));
}

TEST(Cyclo, NegativeAndLargeExponentsReduce) {
  EXPECT_EQ(CycloScalar::zeta(5, -1), CycloScalar::zeta(5, 4));
  EXPECT_EQ(CycloScalar::zeta(5, 12), CycloScalar::zeta(5, 2));
  EXPECT_EQ(CycloScalar::zeta(6, 3), CycloScalar(-1));
}

TEST(Cyclo, RationalAccess) {
  EXPECT_TRUE(CycloScalar(Rational(2, 6)).is_rational());
  EXPECT_EQ(CycloScalar(Rational(2, 6)).rational(), Rational(1, 3));
  EXPECT_THROW(CycloScalar::zeta(3).rational(), ArithmeticError);
}

TEST(Cyclo, LiteralRoundTrip) {
  std::mt19937 rng(7);
  for (unsigned n : {1u, 3u, 4u, 5u, 8u, 12u}) {
    for (int t = 0; t < 20; ++t) {
      const auto x = random_scalar(rng, n);
      EXPECT_EQ(CycloScalar::parse(x.embed(n).to_literal(), n), x) << x.to_literal();
    }
  }
}

TEST(Cyclo, ParseRejectsGarbage) {
  EXPECT_THROW(CycloScalar::parse("1/0", 3), ArithmeticError);
  EXPECT_THROW(CycloScalar::parse("1 + + 2", 3), ArithmeticError);
  EXPECT_THROW(CycloScalar::parse("abc", 3), ArithmeticError);
}

TEST(Cyclo, RenderingUsesLowestTerms) {
  const CycloScalar x = CycloScalar(Rational(2, 6)) + CycloScalar(Rational(4, 6)) * CycloScalar::zeta(3);
  EXPECT_EQ(x.to_string(), "1/3 + 2/3*z^1");
  EXPECT_EQ(x.to_literal(), "1/3 + 2/3*zeta^1");
  EXPECT_EQ(CycloScalar().to_string(), "0");
}

TEST(Cyclo, DecimalDisplay) {
  EXPECT_EQ(to_decimal(CycloScalar(Rational(1, 3))), "0.333333333333");
  const auto c = CycloScalar::zeta(4).to_complex();
  EXPECT_NEAR(c.real(), 0.0, 1e-12);
  EXPECT_NEAR(c.imag(), 1.0, 1e-12);
}

class CycloFieldLaws : public ::testing::TestWithParam<unsigned> {};

TEST_P(CycloFieldLaws, RandomTriples) {
  const unsigned n = GetParam();
  std::mt19937 rng(1000 + n);
  for (int t = 0; t < 40; ++t) {
    const auto a = random_scalar(rng, n), b = random_scalar(rng, n), c = random_scalar(rng, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, CycloScalar());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CycloScalar(1));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
}

TEST_P(CycloFieldLaws, EmbeddingIsHomomorphism) {
  const unsigned n = GetParam();
  std::mt19937 rng(2000 + n);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_scalar(rng, n), b = random_scalar(rng, n);
    for (unsigned m : {2 * n, 3 * n}) {
      EXPECT_EQ((a * b).embed(m), a.embed(m) * b.embed(m));
      EXPECT_EQ((a + b).embed(m), a.embed(m) + b.embed(m));
      EXPECT_EQ(a.embed(m), a);
    }
  }
  if (n > 1) EXPECT_THROW(CycloScalar::zeta(n).embed(n + 1), ArithmeticError);
}

INSTANTIATE_TEST_SUITE_P(Conductors, CycloFieldLaws, ::testing::Values(1u, 3u, 4u, 5u, 6u, 8u, 9u, 12u));
