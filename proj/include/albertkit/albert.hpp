#pragma once

// The Albert algebra of 3x3 hermitian octonion matrices
//
//     [ alpha    x      conj(z) ]
//     [ conj(x)  beta   y       ]
//     [ z        conj(y) gamma  ]
//
// stored as three diagonal scalars and the octonions (x, y, z).

#include <array>
#include <cstdint>

#include "albertkit/composition.hpp"

namespace albertkit {

template <Scalar T>
class AlbertElement {
 public:
  AlbertElement(std::array<T, 3> diag, std::array<Octonion<T>, 3> off)
      : diag_(std::move(diag)), off_(std::move(off)) {
    for (int i = 1; i < 3; ++i) {
      if (!(off_[i].algebra() == off_[0].algebra()) || !(off_[i].lambda() == off_[0].lambda())) {
        throw DomainError("Albert element entries from different octonion algebras");
      }
    }
  }

  static AlbertElement diagonal(const QuaternionAlgebra<T>& alg, const T& lambda, const T& a,
                                const T& b, const T& c) {
    auto o = Octonion<T>::zero(alg, lambda);
    return AlbertElement({a, b, c}, {o, o, o});
  }
  static AlbertElement zero(const QuaternionAlgebra<T>& alg, const T& lambda) {
    T z = alg.zero();
    return diagonal(alg, lambda, z, z, z);
  }
  static AlbertElement identity(const QuaternionAlgebra<T>& alg, const T& lambda) {
    T o = alg.one();
    return diagonal(alg, lambda, o, o, o);
  }
  // E_ii, i in {0, 1, 2}.
  static AlbertElement idempotent(const QuaternionAlgebra<T>& alg, const T& lambda, int i) {
    std::array<T, 3> d{alg.zero(), alg.zero(), alg.zero()};
    d.at(static_cast<std::size_t>(i)) = alg.one();
    return diagonal(alg, lambda, d[0], d[1], d[2]);
  }

  const std::array<T, 3>& diag() const { return diag_; }
  const std::array<Octonion<T>, 3>& off() const { return off_; }
  const T& alpha() const { return diag_[0]; }
  const T& beta() const { return diag_[1]; }
  const T& gamma() const { return diag_[2]; }
  const Octonion<T>& x() const { return off_[0]; }
  const Octonion<T>& y() const { return off_[1]; }
  const Octonion<T>& z() const { return off_[2]; }

  const QuaternionAlgebra<T>& algebra() const { return off_[0].algebra(); }
  const T& lambda() const { return off_[0].lambda(); }

  T trace() const { return diag_[0] + diag_[1] + diag_[2]; }

  bool is_zero() const {
    for (const T& t : diag_) {
      if (!scalar_is_zero(t)) return false;
    }
    for (const auto& o : off_) {
      if (!o.is_zero()) return false;
    }
    return true;
  }

  // The 27 ring coordinates: diagonal, then x, y, z (8 each).
  std::array<T, 27> coordinates() const {
    std::array<T, 27> out{diag_[0], diag_[1], diag_[2]};
    std::size_t k = 3;
    for (const auto& o : off_) {
      for (const T& t : o.coordinates()) out[k++] = t;
    }
    return out;
  }

  friend AlbertElement operator+(const AlbertElement& a, const AlbertElement& b) {
    return AlbertElement({a.diag_[0] + b.diag_[0], a.diag_[1] + b.diag_[1], a.diag_[2] + b.diag_[2]},
                         {a.off_[0] + b.off_[0], a.off_[1] + b.off_[1], a.off_[2] + b.off_[2]});
  }
  friend AlbertElement operator-(const AlbertElement& a, const AlbertElement& b) {
    return AlbertElement({a.diag_[0] - b.diag_[0], a.diag_[1] - b.diag_[1], a.diag_[2] - b.diag_[2]},
                         {a.off_[0] - b.off_[0], a.off_[1] - b.off_[1], a.off_[2] - b.off_[2]});
  }
  friend AlbertElement operator*(const T& t, const AlbertElement& a) {
    return AlbertElement({t * a.diag_[0], t * a.diag_[1], t * a.diag_[2]},
                         {t * a.off_[0], t * a.off_[1], t * a.off_[2]});
  }
  friend bool operator==(const AlbertElement& a, const AlbertElement& b) {
    return a.diag_ == b.diag_ && a.off_ == b.off_;
  }

 private:
  std::array<T, 3> diag_;
  std::array<Octonion<T>, 3> off_;
};

template <Scalar T>
using OctonionMatrix = std::array<std::array<Octonion<T>, 3>, 3>;

template <Scalar T>
OctonionMatrix<T> to_matrix(const AlbertElement<T>& a) {
  const auto& alg = a.algebra();
  const T& l = a.lambda();
  auto s = [&](const T& t) { return Octonion<T>::scalar(alg, l, t); };
  return {{{s(a.alpha()), a.x(), a.z().conj()},
           {a.x().conj(), s(a.beta()), a.y()},
           {a.z(), a.y().conj(), s(a.gamma())}}};
}

template <Scalar T>
OctonionMatrix<T> matrix_product(const OctonionMatrix<T>& m, const OctonionMatrix<T>& n) {
  const auto zero = Octonion<T>::zero(m[0][0].algebra(), m[0][0].lambda());
  OctonionMatrix<T> out{{{zero, zero, zero}, {zero, zero, zero}, {zero, zero, zero}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] = out[i][j] + m[i][k] * n[k][j];
  return out;
}

namespace detail {

// Reads a hermitian octonion matrix back into the Albert layout; the diagonal
// must consist of scalars.
template <Scalar T>
AlbertElement<T> from_hermitian(const OctonionMatrix<T>& m) {
  std::array<T, 3> d{m[0][0].first()[0], m[1][1].first()[0], m[2][2].first()[0]};
  for (int i = 0; i < 3; ++i) {
    auto s = m[i][i].as_scalar();
    if (!s) throw std::logic_error("hermitian product has a non-scalar diagonal entry");
    d[i] = *s;
  }
  return AlbertElement<T>(d, {m[0][1], m[1][2], m[2][0]});
}

}  // namespace detail

// A . A as an octonion matrix product. Needs no division, so it is available
// over the integers; equals the Jordan square A o A.
template <Scalar T>
AlbertElement<T> square(const AlbertElement<T>& a) {
  auto m = to_matrix(a);
  return detail::from_hermitian(matrix_product(m, m));
}

// A o B = (AB + BA) / 2 through octonionic matrix multiplication.
template <Scalar T>
AlbertElement<T> jordan_mul(const AlbertElement<T>& a, const AlbertElement<T>& b) {
  if constexpr (!ScalarTraits<T>::has_half) {
    throw DomainError("jordan_mul needs 2 to be invertible in the base ring");
  } else {
    auto ma = to_matrix(a);
    auto mb = to_matrix(b);
    auto ab = matrix_product(ma, mb);
    auto ba = matrix_product(mb, ma);
    OctonionMatrix<T> sum = ab;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) sum[i][j] = ab[i][j] + ba[i][j];
    AlbertElement<T> s = detail::from_hermitian(sum);
    auto h = [](const T& t) { return ScalarTraits<T>::half(t); };
    auto half_oct = [&](const Octonion<T>& o) { return h(scalar_from_int(1, o.lambda())) * o; };
    return AlbertElement<T>({h(s.alpha()), h(s.beta()), h(s.gamma())},
                            {half_oct(s.x()), half_oct(s.y()), half_oct(s.z())});
  }
}

// tr(A o B) = sum of diagonal products + tr(x conj(x')) + tr(y conj(y')) + tr(z conj(z')).
template <Scalar T>
T trace_pair(const AlbertElement<T>& a, const AlbertElement<T>& b) {
  T out = a.alpha() * b.alpha() + a.beta() * b.beta() + a.gamma() * b.gamma();
  for (int i = 0; i < 3; ++i) out = out + (a.off()[i] * b.off()[i].conj()).trace();
  return out;
}

// Quadratic adjoint. Diagonal (beta gamma - N(y), gamma alpha - N(z), alpha beta - N(x));
// the off-diagonal slots are the conjugates of yz - gamma conj(x), zx - alpha conj(y),
// xy - beta conj(z), so that A# = A^2 - tr(A) A + S(A) I and A o A# = det(A) I.
template <Scalar T>
AlbertElement<T> sharp(const AlbertElement<T>& a) {
  const auto& x = a.x();
  const auto& y = a.y();
  const auto& z = a.z();
  return AlbertElement<T>(
      {a.beta() * a.gamma() - y.norm(), a.gamma() * a.alpha() - z.norm(),
       a.alpha() * a.beta() - x.norm()},
      {(y * z).conj() - a.gamma() * x, (z * x).conj() - a.alpha() * y,
       (x * y).conj() - a.beta() * z});
}

// Cubic norm alpha beta gamma - alpha N(y) - beta N(z) - gamma N(x) + tr((xy)z).
// Characteristic free; agrees with trace_pair(A, sharp(A)) / 3 when 3 is invertible.
template <Scalar T>
T det(const AlbertElement<T>& a) {
  const auto& x = a.x();
  const auto& y = a.y();
  const auto& z = a.z();
  return a.alpha() * a.beta() * a.gamma() - a.alpha() * y.norm() - a.beta() * z.norm() -
         a.gamma() * x.norm() + ((x * y) * z).trace();
}

// 0 iff A = 0; 1 iff sharp(A) = 0; 2 iff det(A) = 0; otherwise 3.
template <Scalar T>
int rank(const AlbertElement<T>& a) {
  if (a.is_zero()) return 0;
  if (sharp(a).is_zero()) return 1;
  if (scalar_is_zero(det(a))) return 2;
  return 3;
}

// The rank-one test through the Jordan square: A != 0 and A o A = tr(A) A.
template <Scalar T>
bool is_rank_one_by_square(const AlbertElement<T>& a) {
  return !a.is_zero() && square(a) == a.trace() * a;
}

// Entrywise D^1-action on the off-diagonal octonions.
template <Scalar T>
AlbertElement<T> d1_act(const Quaternion<T>& g, const AlbertElement<T>& a) {
  return AlbertElement<T>(a.diag(), {d1_act(g, a.x()), d1_act(g, a.y()), d1_act(g, a.z())});
}

// Scalar subalgebra F . I.
template <Scalar T>
bool in_J0(const AlbertElement<T>& a) {
  for (const auto& o : a.off()) {
    if (!o.is_zero()) return false;
  }
  return a.alpha() == a.beta() && a.beta() == a.gamma();
}

// Off-diagonal entries in the base field F . 1.
template <Scalar T>
bool in_JF(const AlbertElement<T>& a) {
  for (const auto& o : a.off()) {
    if (!o.as_scalar()) return false;
  }
  return true;
}

// Off-diagonal entries in the embedded quaternions (d, 0).
template <Scalar T>
bool in_JD(const AlbertElement<T>& a) {
  for (const auto& o : a.off()) {
    if (!o.second().is_zero()) return false;
  }
  return true;
}

// Signed diagonal matrices defining the characters psi_1, psi_2, psi_3: the first
// `rank_index` diagonal entries are the signs, the rest are zero.
struct CharacterTarget {
  int rank_index = 1;
  std::array<int, 3> signs{1, 1, 1};

  CharacterTarget(int rank, std::array<int, 3> s) : rank_index(rank), signs(s) {
    if (rank < 1 || rank > 3) throw DomainError("character target rank must be 1, 2 or 3");
    for (int e : signs) {
      if (e != 1 && e != -1) throw DomainError("character target signs must be +1 or -1");
    }
    for (int i = rank; i < 3; ++i) signs[i] = 1;
  }

  template <Scalar T>
  AlbertElement<T> element(const QuaternionAlgebra<T>& alg, const T& lambda) const {
    std::array<T, 3> d{alg.zero(), alg.zero(), alg.zero()};
    for (int i = 0; i < rank_index; ++i) d[i] = scalar_from_int(signs[i], alg.one());
    return AlbertElement<T>::diagonal(alg, lambda, d[0], d[1], d[2]);
  }

  // "+-+" style label, truncated to the used signs.
  std::string label() const {
    std::string s;
    for (int i = 0; i < rank_index; ++i) s += signs[i] > 0 ? '+' : '-';
    return s;
  }

  friend bool operator==(const CharacterTarget&, const CharacterTarget&) = default;
};

}  // namespace albertkit
