#pragma once

// Quaternion algebras, octonions by doubling, and the action of norm-one
// quaternions on the doubled slot.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "albertkit/scalars.hpp"

namespace albertkit {

enum class QuaternionBackend {
  matrix2,  // split algebra M_2; coordinates (m00, m01, m10, m11)
  symbol,   // (a, b): basis 1, i, j, k with i^2 = a, j^2 = b, ij = k = -ji
};

template <Scalar T>
class QuaternionAlgebra {
 public:
  // `one` only provides ring context (the modulus over F_p).
  static QuaternionAlgebra matrix2(const T& one) {
    return QuaternionAlgebra(QuaternionBackend::matrix2, one, one);
  }
  static QuaternionAlgebra symbol(const T& a, const T& b) {
    if (scalar_is_zero(a) || scalar_is_zero(b)) {
      throw DomainError("quaternion symbol (a, b) needs a, b nonzero");
    }
    return QuaternionAlgebra(QuaternionBackend::symbol, a, b);
  }

  QuaternionBackend backend() const { return backend_; }
  const T& a() const { return a_; }
  const T& b() const { return b_; }

  T zero() const { return scalar_from_int(0, a_); }
  T one() const { return scalar_from_int(1, a_); }

  friend bool operator==(const QuaternionAlgebra&, const QuaternionAlgebra&) = default;

 private:
  QuaternionAlgebra(QuaternionBackend backend, const T& a, const T& b)
      : backend_(backend), a_(a), b_(b) {}

  QuaternionBackend backend_;
  T a_;
  T b_;
};

template <Scalar T>
class Quaternion {
 public:
  Quaternion(QuaternionAlgebra<T> algebra, std::array<T, 4> coords)
      : alg_(std::move(algebra)), c_(std::move(coords)) {}

  static Quaternion zero(const QuaternionAlgebra<T>& alg) {
    T z = alg.zero();
    return Quaternion(alg, {z, z, z, z});
  }
  static Quaternion scalar(const QuaternionAlgebra<T>& alg, const T& t) {
    T z = alg.zero();
    if (alg.backend() == QuaternionBackend::matrix2) return Quaternion(alg, {t, z, z, t});
    return Quaternion(alg, {t, z, z, z});
  }
  static Quaternion one(const QuaternionAlgebra<T>& alg) { return scalar(alg, alg.one()); }

  const QuaternionAlgebra<T>& algebra() const { return alg_; }
  const std::array<T, 4>& coords() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const {
    for (const T& t : c_) {
      if (!scalar_is_zero(t)) return false;
    }
    return true;
  }

  // Matrix backend: adjugate. Symbol backend: negate the pure part.
  Quaternion conj() const {
    if (alg_.backend() == QuaternionBackend::matrix2) {
      return Quaternion(alg_, {c_[3], -c_[1], -c_[2], c_[0]});
    }
    return Quaternion(alg_, {c_[0], -c_[1], -c_[2], -c_[3]});
  }

  T norm() const {
    if (alg_.backend() == QuaternionBackend::matrix2) return c_[0] * c_[3] - c_[1] * c_[2];
    const T& a = alg_.a();
    const T& b = alg_.b();
    return c_[0] * c_[0] - a * c_[1] * c_[1] - b * c_[2] * c_[2] + a * b * c_[3] * c_[3];
  }

  T trace() const {
    if (alg_.backend() == QuaternionBackend::matrix2) return c_[0] + c_[3];
    return c_[0] + c_[0];
  }

  // Coefficient t if this equals t * 1, otherwise nullopt.
  std::optional<T> as_scalar() const {
    if (alg_.backend() == QuaternionBackend::matrix2) {
      if (scalar_is_zero(c_[1]) && scalar_is_zero(c_[2]) && c_[0] == c_[3]) return c_[0];
      return std::nullopt;
    }
    if (scalar_is_zero(c_[1]) && scalar_is_zero(c_[2]) && scalar_is_zero(c_[3])) return c_[0];
    return std::nullopt;
  }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    check_same(x, y);
    return Quaternion(x.alg_, {x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2],
                               x.c_[3] + y.c_[3]});
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    check_same(x, y);
    return Quaternion(x.alg_, {x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2],
                               x.c_[3] - y.c_[3]});
  }
  friend Quaternion operator-(const Quaternion& x) {
    return Quaternion(x.alg_, {-x.c_[0], -x.c_[1], -x.c_[2], -x.c_[3]});
  }
  friend Quaternion operator*(const T& t, const Quaternion& x) {
    return Quaternion(x.alg_, {t * x.c_[0], t * x.c_[1], t * x.c_[2], t * x.c_[3]});
  }

  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    check_same(x, y);
    const auto& p = x.c_;
    const auto& q = y.c_;
    if (x.alg_.backend() == QuaternionBackend::matrix2) {
      return Quaternion(x.alg_, {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
                                 p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]});
    }
    const T& a = x.alg_.a();
    const T& b = x.alg_.b();
    T ab = a * b;
    return Quaternion(
        x.alg_,
        {p[0] * q[0] + a * p[1] * q[1] + b * p[2] * q[2] - ab * p[3] * q[3],
         p[0] * q[1] + p[1] * q[0] - b * p[2] * q[3] + b * p[3] * q[2],
         p[0] * q[2] + p[2] * q[0] + a * p[1] * q[3] - a * p[3] * q[1],
         p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]});
  }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.alg_ == y.alg_ && x.c_ == y.c_;
  }

 private:
  static void check_same(const Quaternion& x, const Quaternion& y) {
    if (!(x.alg_ == y.alg_)) throw DomainError("quaternions from different algebras");
  }

  QuaternionAlgebra<T> alg_;
  std::array<T, 4> c_;
};

// Pair (first, second) of quaternions with multiplication
//   (a, b)(c, d) = (ac + lambda d conj(b), conj(a) d + c b).
template <Scalar T>
class Octonion {
 public:
  Octonion(Quaternion<T> first, Quaternion<T> second, T lambda)
      : first_(std::move(first)), second_(std::move(second)), lambda_(std::move(lambda)) {
    if (!(first_.algebra() == second_.algebra())) {
      throw DomainError("octonion slots from different quaternion algebras");
    }
    if (scalar_is_zero(lambda_)) throw DomainError("doubling parameter lambda must be nonzero");
  }

  static Octonion zero(const QuaternionAlgebra<T>& alg, const T& lambda) {
    return Octonion(Quaternion<T>::zero(alg), Quaternion<T>::zero(alg), lambda);
  }
  static Octonion scalar(const QuaternionAlgebra<T>& alg, const T& lambda, const T& t) {
    return Octonion(Quaternion<T>::scalar(alg, t), Quaternion<T>::zero(alg), lambda);
  }

  const Quaternion<T>& first() const { return first_; }
  const Quaternion<T>& second() const { return second_; }
  const T& lambda() const { return lambda_; }
  const QuaternionAlgebra<T>& algebra() const { return first_.algebra(); }

  bool is_zero() const { return first_.is_zero() && second_.is_zero(); }

  Octonion conj() const { return Octonion(first_.conj(), -second_, lambda_); }
  T norm() const { return first_.norm() - lambda_ * second_.norm(); }
  T trace() const { return first_.trace(); }

  std::optional<T> as_scalar() const {
    if (!second_.is_zero()) return std::nullopt;
    return first_.as_scalar();
  }

  // The eight ring coordinates: first slot then second slot.
  std::array<T, 8> coordinates() const {
    return {first_[0], first_[1], first_[2], first_[3],
            second_[0], second_[1], second_[2], second_[3]};
  }

  friend Octonion operator+(const Octonion& x, const Octonion& y) {
    check_same(x, y);
    return Octonion(x.first_ + y.first_, x.second_ + y.second_, x.lambda_);
  }
  friend Octonion operator-(const Octonion& x, const Octonion& y) {
    check_same(x, y);
    return Octonion(x.first_ - y.first_, x.second_ - y.second_, x.lambda_);
  }
  friend Octonion operator-(const Octonion& x) { return Octonion(-x.first_, -x.second_, x.lambda_); }
  friend Octonion operator*(const T& t, const Octonion& x) {
    return Octonion(t * x.first_, t * x.second_, x.lambda_);
  }

  friend Octonion operator*(const Octonion& x, const Octonion& y) {
    check_same(x, y);
    const auto& a = x.first_;
    const auto& b = x.second_;
    const auto& c = y.first_;
    const auto& d = y.second_;
    return Octonion(a * c + x.lambda_ * (d * b.conj()), a.conj() * d + c * b, x.lambda_);
  }

  friend bool operator==(const Octonion& x, const Octonion& y) {
    return x.lambda_ == y.lambda_ && x.first_ == y.first_ && x.second_ == y.second_;
  }

 private:
  static void check_same(const Octonion& x, const Octonion& y) {
    if (!(x.lambda_ == y.lambda_) || !(x.algebra() == y.algebra())) {
      throw DomainError("octonions with different algebra or lambda");
    }
  }

  Quaternion<T> first_;
  Quaternion<T> second_;
  T lambda_;
};

template <Scalar T>
Octonion<T> oct_mul(const Octonion<T>& x, const Octonion<T>& y) {
  return x * y;
}
template <Scalar T>
Octonion<T> oct_conj(const Octonion<T>& x) {
  return x.conj();
}
template <Scalar T>
T oct_norm(const Octonion<T>& x) {
  return x.norm();
}
template <Scalar T>
T oct_trace(const Octonion<T>& x) {
  return x.trace();
}

// g . (a, b) = (a, b conj(g)) for g of norm one.
template <Scalar T>
Octonion<T> d1_act(const Quaternion<T>& g, const Octonion<T>& x) {
  if (!(g.algebra() == x.algebra())) throw DomainError("d1_act: g outside the doubled algebra");
  if (!(g.norm() == g.algebra().one())) throw DomainError("d1_act: g must have norm 1");
  return Octonion<T>(x.first(), x.second() * g.conj(), x.lambda());
}

// Isomorphism symbol(1, 1) -> M_2: w + xi + yj + zk -> [[w+x, y+z], [y-z, w-x]]
// with i = diag(1, -1), j = antidiag(1, 1), k = ij.
template <Scalar T>
Quaternion<T> symbol11_to_matrix(const Quaternion<T>& q) {
  const auto& alg = q.algebra();
  if (alg.backend() != QuaternionBackend::symbol || !(alg.a() == alg.one()) ||
      !(alg.b() == alg.one())) {
    throw DomainError("symbol11_to_matrix expects the symbol algebra (1, 1)");
  }
  return Quaternion<T>(QuaternionAlgebra<T>::matrix2(alg.one()),
                       {q[0] + q[1], q[2] + q[3], q[2] - q[3], q[0] - q[1]});
}

// True iff the real completion of the symbol algebra (a, b) is a division algebra.
bool real_ramified(const Rational& a, const Rational& b);

// Number of octonion algebras containing D, given per real place whether D is
// ramified there.
Integer count_octonion_embeddings(std::span<const bool> ramified_real_places);

enum class Place { finite_field, real, global_rational };

// Is lambda a norm from D over F_p? Decided by exhaustive search of D(F_p).
bool is_split_octonion(const Fp& lambda, const QuaternionAlgebra<Fp>& algebra);

// Is lambda a norm from D over R? `algebra` is a rational symbol or matrix algebra.
bool is_split_octonion(const Rational& lambda, const QuaternionAlgebra<Rational>& algebra,
                       Place place);

// Every element of D(F_p), in lexicographic coordinate order.
std::vector<Quaternion<Fp>> enumerate_quaternions(const QuaternionAlgebra<Fp>& algebra);

}  // namespace albertkit
