#include <gtest/gtest.h>

#include <cmath>

#include "albertkit/scalars.hpp"

using namespace albertkit;

TEST(Valuation, SmallCases) {
  EXPECT_EQ(valuation(Integer(12), PrimeData(2)), 2u);
  EXPECT_EQ(valuation(Integer(27), PrimeData(3)), 3u);
  EXPECT_EQ(valuation(Integer(-50), PrimeData(5)), 2u);
  EXPECT_EQ(valuation(Integer(7), PrimeData(3)), 0u);
  EXPECT_FALSE(valuation(Integer(0), PrimeData(3)).has_value());
}

TEST(Valuation, AdditiveOnProducts) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeData pd(p);
    for (long a = -60; a <= 60; a += 7) {
      for (long b = 1; b <= 90; b += 11) {
        if (a == 0) continue;
        EXPECT_EQ(*valuation(Integer(a) * b, pd), *valuation(Integer(a), pd) + *valuation(Integer(b), pd));
      }
    }
  }
}

TEST(Valuation, BigPowers) {
  Integer big = 1;
  for (int i = 0; i < 80; ++i) big *= 3;
  EXPECT_EQ(valuation(big * 2, PrimeData(3)), 80u);
}

TEST(PrimeData, RejectsComposite) {
  EXPECT_THROW(PrimeData(9), DomainError);
  EXPECT_THROW(PrimeData(1), DomainError);
  EXPECT_NO_THROW(PrimeData(2));
}

TEST(AdditiveCharacter, Values) {
  EXPECT_NEAR(std::abs(additive_character(0, PrimeData(5)) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(additive_character(1, PrimeData(2)) + 1.0), 0.0, 1e-15);
  PrimeData p7(7);
  for (std::uint64_t t = 1; t < 7; ++t) {
    EXPECT_NEAR(std::abs(additive_character(t, p7) - std::conj(additive_character(7 - t, p7))), 0.0, 1e-12);
  }
}

TEST(AdditiveCharacter, Homomorphism) {
  for (std::uint32_t p : {3u, 5u, 11u}) {
    PrimeData pd(p);
    for (std::uint64_t s = 0; s < p; ++s)
      for (std::uint64_t t = 0; t < p; ++t) {
        auto lhs = additive_character((s + t) % p, pd);
        auto rhs = additive_character(s, pd) * additive_character(t, pd);
        EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
      }
  }
  EXPECT_THROW(additive_character(5, PrimeData(5)), DomainError);
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3) / 4);
  EXPECT_EQ(parse_rational("0.125"), Rational(1) / 8);
  EXPECT_EQ(parse_rational("-2.5"), Rational(-5) / 2);
  EXPECT_EQ(parse_rational(" 6/4 "), Rational(3) / 2);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
  EXPECT_EQ(to_string(Rational(-3) / 4), "-3/4");
  EXPECT_EQ(to_string(Rational(5)), "5");
}

TEST(Fp, FieldAxiomsExhaustive) {
  PrimeField f(7);
  for (int a = 0; a < 7; ++a) {
    if (a) EXPECT_EQ(f(a) * f(a).inverse(), f.one());
    for (int b = 0; b < 7; ++b) {
      EXPECT_EQ((f(a) + f(b)).value(), static_cast<std::uint32_t>((a + b) % 7));
      EXPECT_EQ((f(a) * f(b)).value(), static_cast<std::uint32_t>((a * b) % 7));
      EXPECT_EQ(f(a) - f(b) + f(b), f(a));
    }
  }
  EXPECT_EQ(f(-1), f(6));
  EXPECT_THROW(f.zero().inverse(), DomainError);
}

TEST(Fp, MixedModuliRejected) {
  EXPECT_THROW(Fp(1, 3) + Fp(1, 5), DomainError);
}

TEST(PrimeField, OddPrimesOnly) {
  EXPECT_THROW(PrimeField(2), UnsupportedError);
  EXPECT_THROW(PrimeField(15), DomainError);
  EXPECT_NO_THROW(PrimeField(3));
}

TEST(ScalarTraits, HalfAvailability) {
  static_assert(ScalarTraits<Rational>::has_half);
  static_assert(ScalarTraits<Fp>::has_half);
  static_assert(!ScalarTraits<Integer>::has_half);
  EXPECT_EQ(ScalarTraits<Fp>::half(Fp(1, 5)) * Fp(2, 5), Fp(1, 5));
}
