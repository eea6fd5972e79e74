#pragma once

// Seeded random sampling of scalars, quaternions, octonions and Albert elements
// for property checks.

#include <random>

#include "albertkit/albert.hpp"

namespace albertkit {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // num / den with |num| <= 9, 1 <= den <= 6.
  Rational rational() { return Rational(uniform(-9, 9)) / Rational(uniform(1, 6)); }
  Rational nonzero_rational() {
    Rational r;
    do r = rational();
    while (r == 0);
    return r;
  }
  Fp fp(std::uint32_t p) { return Fp(uniform(0, static_cast<long>(p) - 1), p); }
  Fp nonzero_fp(std::uint32_t p) { return Fp(uniform(1, static_cast<long>(p) - 1), p); }

  Rational scalar(const Rational&) { return rational(); }
  Fp scalar(const Fp& like) { return fp(like.modulus()); }

  template <Scalar T>
  Quaternion<T> quaternion(const QuaternionAlgebra<T>& alg) {
    const T one = alg.one();
    return Quaternion<T>(alg, {scalar(one), scalar(one), scalar(one), scalar(one)});
  }

  template <Scalar T>
  Octonion<T> octonion(const QuaternionAlgebra<T>& alg, const T& lambda) {
    return Octonion<T>(quaternion(alg), quaternion(alg), lambda);
  }

  template <Scalar T>
  AlbertElement<T> albert(const QuaternionAlgebra<T>& alg, const T& lambda) {
    const T one = alg.one();
    return AlbertElement<T>({scalar(one), scalar(one), scalar(one)},
                            {octonion(alg, lambda), octonion(alg, lambda), octonion(alg, lambda)});
  }

  // Rank-one by construction: c * v v^* for v = (1, s, t) with s, t in an
  // associative subalgebra (the first quaternion slot), or a rank-one idempotent
  // when c = 0 would make it vanish.
  AlbertElement<Rational> rank_one(const QuaternionAlgebra<Rational>& alg, const Rational& lambda);

 private:
  std::mt19937_64 rng_;
};

inline AlbertElement<Rational> Sampler::rank_one(const QuaternionAlgebra<Rational>& alg,
                                                 const Rational& lambda) {
  using O = Octonion<Rational>;
  using Q = Quaternion<Rational>;
  const Rational c = nonzero_rational();
  const Q s = quaternion(alg), t = quaternion(alg);
  auto oct = [&](const Q& q) { return O(q, Q::zero(alg), lambda); };
  // v v^* has entries 1, N(s), N(t) on the diagonal, x = conj(s), y = s conj(t),
  // z = t in the layout [[alpha, x, conj z], [conj x, beta, y], [z, conj y, gamma]].
  return AlbertElement<Rational>({c, c * s.norm(), c * t.norm()},
                                 {c * oct(s.conj()), c * oct(s * t.conj()), c * oct(t)});
}

}  // namespace albertkit
