#include <gtest/gtest.h>

#include "albertkit/composition.hpp"
#include "albertkit/random.hpp"

using namespace albertkit;

namespace {

using QR = Quaternion<Rational>;
using OR = Octonion<Rational>;

QuaternionAlgebra<Rational> m2() { return QuaternionAlgebra<Rational>::matrix2(Rational(1)); }
QuaternionAlgebra<Rational> hamilton() { return QuaternionAlgebra<Rational>::symbol(Rational(-1), Rational(-1)); }

// Plain 2x2 matrix product, written out independently of the library.
std::array<Rational, 4> matmul(const std::array<Rational, 4>& a, const std::array<Rational, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

// Hamilton product for i^2 = j^2 = -1.
std::array<Rational, 4> hamilton_mul(const std::array<Rational, 4>& p, const std::array<Rational, 4>& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

}  // namespace

TEST(Quaternion, MatrixBackendIsMatrixMultiplication) {
  Sampler rng(11);
  for (int i = 0; i < 200; ++i) {
    QR a = rng.quaternion(m2()), b = rng.quaternion(m2());
    EXPECT_EQ((a * b).coords(), matmul(a.coords(), b.coords()));
    EXPECT_EQ(a.norm(), a[0] * a[3] - a[1] * a[2]);
    EXPECT_EQ(a.trace(), a[0] + a[3]);
  }
}

TEST(Quaternion, HamiltonProduct) {
  Sampler rng(12);
  for (int i = 0; i < 200; ++i) {
    QR a = rng.quaternion(hamilton()), b = rng.quaternion(hamilton());
    EXPECT_EQ((a * b).coords(), hamilton_mul(a.coords(), b.coords()));
    EXPECT_EQ(a.norm(), a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
  }
}

TEST(Quaternion, SymbolNormFormula) {
  Sampler rng(13);
  for (int i = 0; i < 100; ++i) {
    const Rational a = rng.nonzero_rational(), b = rng.nonzero_rational();
    auto alg = QuaternionAlgebra<Rational>::symbol(a, b);
    QR q = rng.quaternion(alg);
    EXPECT_EQ(q.norm(), q[0] * q[0] - a * q[1] * q[1] - b * q[2] * q[2] + a * b * q[3] * q[3]);
    EXPECT_EQ(q * q.conj(), QR::scalar(alg, q.norm()));
    EXPECT_EQ(q + q.conj(), QR::scalar(alg, q.trace()));
    QR r = rng.quaternion(alg);
    EXPECT_EQ((q * r).norm(), q.norm() * r.norm());
  }
}

TEST(Quaternion, SymbolOneOneIsMatrixAlgebra) {
  Sampler rng(14);
  auto s11 = QuaternionAlgebra<Rational>::symbol(Rational(1), Rational(1));
  for (int i = 0; i < 100; ++i) {
    QR a = rng.quaternion(s11), b = rng.quaternion(s11);
    EXPECT_EQ(symbol11_to_matrix(a * b), symbol11_to_matrix(a) * symbol11_to_matrix(b));
    EXPECT_EQ(symbol11_to_matrix(a).norm(), a.norm());
  }
  EXPECT_THROW(symbol11_to_matrix(QR::one(hamilton())), DomainError);
}

TEST(Quaternion, AlgebraMismatchAndZeroSymbol) {
  EXPECT_THROW(QR::one(m2()) * QR::one(hamilton()), DomainError);
  EXPECT_THROW(QuaternionAlgebra<Rational>::symbol(Rational(0), Rational(1)), DomainError);
}

TEST(Octonion, IdentityAndSquareOfPureSecond) {
  auto alg = m2();
  OR one = OR::scalar(alg, Rational(1), Rational(1));
  Sampler rng(15);
  OR x = rng.octonion(alg, Rational(1));
  EXPECT_EQ(one * x, x);
  EXPECT_EQ(x * one, x);

  for (const Rational lambda : {Rational(1), Rational(3), Rational(-2) / 5}) {
    OR l(QR::zero(alg), QR::one(alg), lambda);
    EXPECT_EQ(l * l, OR::scalar(alg, lambda, lambda));
    EXPECT_EQ(l.norm(), -lambda);
  }
}

TEST(Octonion, DoublingFormula) {
  // (a, b)(c, d) = (ac + lambda d conj(b), conj(a) d + c b), expanded by hand.
  Sampler rng(16);
  auto alg = hamilton();
  const Rational lambda(-1);
  for (int i = 0; i < 50; ++i) {
    QR a = rng.quaternion(alg), b = rng.quaternion(alg), c = rng.quaternion(alg), d = rng.quaternion(alg);
    OR prod = OR(a, b, lambda) * OR(c, d, lambda);
    EXPECT_EQ(prod.first(), a * c + lambda * (d * b.conj()));
    EXPECT_EQ(prod.second(), a.conj() * d + c * b);
  }
}

TEST(Octonion, ConjNormTrace) {
  Sampler rng(17);
  auto alg = m2();
  for (int i = 0; i < 100; ++i) {
    const Rational lambda = rng.nonzero_rational();
    OR x = rng.octonion(alg, lambda);
    EXPECT_EQ(x.conj().norm(), x.norm());
    EXPECT_EQ(x.conj().trace(), x.trace());
    EXPECT_EQ(x.norm(), x.first().norm() - lambda * x.second().norm());
    EXPECT_EQ(x * x.conj(), OR::scalar(alg, lambda, x.norm()));
    OR embedded(x.first(), QR::zero(alg), lambda);
    EXPECT_EQ(embedded.conj(), OR(x.first().conj(), QR::zero(alg), lambda));
  }
}

TEST(Octonion, CompositionLawOverF5) {
  Sampler rng(18);
  PrimeField f(5);
  auto alg = QuaternionAlgebra<Fp>::matrix2(f.one());
  for (int i = 0; i < 2000; ++i) {
    const Fp lambda = rng.nonzero_fp(5);
    auto x = rng.octonion(alg, lambda), y = rng.octonion(alg, lambda);
    ASSERT_EQ((x * y).norm(), x.norm() * y.norm());
    auto one = Octonion<Fp>::scalar(alg, lambda, f.one());
    ASSERT_TRUE((x * x - x.trace() * x + x.norm() * one).is_zero());
  }
}

TEST(Octonion, MoufangAndAlternativity) {
  Sampler rng(19);
  for (auto alg : {m2(), hamilton()}) {
    for (int i = 0; i < 40; ++i) {
      const Rational lambda = rng.nonzero_rational();
      OR x = rng.octonion(alg, lambda), y = rng.octonion(alg, lambda), z = rng.octonion(alg, lambda);
      EXPECT_EQ(x * (x * y), (x * x) * y);
      EXPECT_EQ((y * x) * x, y * (x * x));
      EXPECT_EQ(z * (x * (z * y)), ((z * x) * z) * y);
      EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
    }
  }
}

TEST(Octonion, NotAssociative) {
  Sampler rng(20);
  auto alg = m2();
  bool found = false;
  for (int i = 0; i < 20 && !found; ++i) {
    OR x = rng.octonion(alg, Rational(1)), y = rng.octonion(alg, Rational(1)), z = rng.octonion(alg, Rational(1));
    found = !((x * y) * z == x * (y * z));
  }
  EXPECT_TRUE(found);
}

TEST(Octonion, MismatchRejected) {
  auto alg = m2();
  EXPECT_THROW(OR(QR::one(alg), QR::one(hamilton()), Rational(1)), DomainError);
  EXPECT_THROW(OR(QR::one(alg), QR::one(alg), Rational(0)), DomainError);
  EXPECT_THROW(OR::scalar(alg, Rational(1), Rational(1)) * OR::scalar(alg, Rational(2), Rational(1)), DomainError);
}

TEST(D1Action, AutomorphismOverF5) {
  Sampler rng(21);
  PrimeField f(5);
  auto alg = QuaternionAlgebra<Fp>::matrix2(f.one());
  std::vector<Quaternion<Fp>> d1;
  for (const auto& q : enumerate_quaternions(alg)) {
    if (q.norm() == f.one()) d1.push_back(q);
  }
  ASSERT_EQ(d1.size(), 120u);
  for (int i = 0; i < 1000; ++i) {
    const auto& g = d1[static_cast<std::size_t>(rng.uniform(0, 119))];
    const Fp lambda = rng.nonzero_fp(5);
    auto x = rng.octonion(alg, lambda), y = rng.octonion(alg, lambda);
    ASSERT_EQ(d1_act(g, x * y), d1_act(g, x) * d1_act(g, y));
  }
}

TEST(D1Action, FixesDAndRejectsWrongNorm) {
  auto alg = m2();
  Sampler rng(22);
  QR g(alg, {Rational(2), Rational(3), Rational(1), Rational(2)});  // det 1
  OR x = rng.octonion(alg, Rational(1));
  EXPECT_EQ(d1_act(QR::one(alg), x), x);
  OR in_d(x.first(), QR::zero(alg), Rational(1));
  EXPECT_EQ(d1_act(g, in_d), in_d);
  EXPECT_THROW(d1_act(QR::scalar(alg, Rational(2)), x), DomainError);
}

TEST(RealPlace, Ramification) {
  EXPECT_FALSE(real_ramified(Rational(1), Rational(1)));
  EXPECT_TRUE(real_ramified(Rational(-1), Rational(-1)));
  EXPECT_FALSE(real_ramified(Rational(-1), Rational(2)));
  EXPECT_THROW(real_ramified(Rational(0), Rational(1)), DomainError);
}

TEST(EmbeddingCount, PowersOfTwo) {
  const bool one_false[] = {false};
  const bool one_true[] = {true};
  const bool two_true[] = {true, true};
  const bool mixed[] = {true, false, true};
  EXPECT_EQ(count_octonion_embeddings(one_false), 1);
  EXPECT_EQ(count_octonion_embeddings(one_true), 2);
  EXPECT_EQ(count_octonion_embeddings(two_true), 4);
  EXPECT_EQ(count_octonion_embeddings(mixed), 4);
}

TEST(SplitOctonion, FiniteFieldNormsAreUniversal) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    PrimeField f(p);
    auto alg = QuaternionAlgebra<Fp>::matrix2(f.one());
    for (std::uint32_t l = 1; l < p; ++l) EXPECT_TRUE(is_split_octonion(f(l), alg));
  }
}

TEST(SplitOctonion, RealPlace) {
  EXPECT_TRUE(is_split_octonion(Rational(1), hamilton(), Place::real));
  EXPECT_FALSE(is_split_octonion(Rational(-1), hamilton(), Place::real));
  EXPECT_TRUE(is_split_octonion(Rational(-1), m2(), Place::real));
  EXPECT_THROW(is_split_octonion(Rational(1), hamilton(), Place::global_rational), UnsupportedError);
}
