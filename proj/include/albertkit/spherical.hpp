#pragma once

// Spherical vectors of the split minimal representation: the p-adic value as a
// function of the gcd of an integral rank-one element, and the real value
// ||A||^{-3/2} K_{3/2}(||A||).

#include <utility>

#include "albertkit/albert.hpp"

namespace albertkit {

// Element of J(O) for the split model: octonions are pairs of integer 2x2
// matrices doubled with lambda = 1.
class IntegralAlbert {
 public:
  explicit IntegralAlbert(AlbertElement<Integer> element);

  // Exact conversion; DomainError if some coordinate is not an integer or the
  // algebra is not the split model.
  static IntegralAlbert from_rational(const AlbertElement<Rational>& element);

  const AlbertElement<Integer>& element() const { return e_; }

 private:
  AlbertElement<Integer> e_;
};

// Split model over the reals (matrix backend, lambda = 1).
class RealAlbert {
 public:
  explicit RealAlbert(AlbertElement<double> element);
  static RealAlbert from_rational(const AlbertElement<Rational>& element);

  const AlbertElement<double>& element() const { return e_; }

  // alpha^2 + beta^2 + gamma^2 + ||x||^2 + ||y||^2 + ||z||^2 with ||(a, b)||^2 the sum
  // of squares of both matrices' entries.
  double norm_squared() const;
  double norm() const;

 private:
  AlbertElement<double> e_;
};

// Largest n with p^n dividing every coordinate.
unsigned gcd_exponent(const IntegralAlbert& a, const PrimeData& p);

struct PadicSpherical {
  unsigned gcd_exponent = 0;
  Integer value;    // sum_{j=0}^{v} q^{3j}: 1 on primitive elements
  Integer literal;  // 1 + q^3 + ... + q^{3(v-1)}: the same sum read with n = v
};

// Requires rank(A) == 1.
PadicSpherical spherical_padic_detail(const IntegralAlbert& a, const PrimeData& p);
Integer spherical_padic(const IntegralAlbert& a, const PrimeData& p);

// K_{3/2}(u) = sqrt(pi / (2u)) e^{-u} (1 + 1/u), u > 0.
double bessel_k32(double u);

// u^{-3/2} K_{3/2}(u).
double spherical_profile(double u);

double spherical_real(const RealAlbert& a);

// (t^2 + 1/t^2, t + 1/t) for the basepoint lambda = 1, a = identity.
std::pair<double, double> cartan_profile(double t);

// diag(1, -1, 0) with x = (0, diag(t, 1/t)): the basepoint moved by the Cartan
// element diag(t, 1/t). Rank one; its norm is t + 1/t.
RealAlbert cartan_family_element(double t);

// int_2^inf u^{-3/2} K_{3/2}(u) du by adaptive Gauss-Kronrod on unit panels. The
// tail after U is at most the integrand at U, so panels stop once that value falls
// below rel_tol times the running sum.
double bessel_integral(double rel_tol);

// Adaptive Gauss-Kronrod (7, 15) on [a, b] to absolute tolerance `abs_tol`.
template <class F>
double integrate_gk15(F&& f, double a, double b, double abs_tol, int max_depth = 40);

namespace detail {

inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
std::pair<double, double> gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[i];
    const double s = f(c - dx) + f(c + dx);
    kronrod += kKronrodWeights[i] * s;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * s;
  }
  return {kronrod * h, std::abs((kronrod - gauss) * h)};
}

template <class F>
double gk15_adaptive(F& f, double a, double b, double abs_tol, int depth) {
  auto [value, error] = gk15(f, a, b);
  if (error <= abs_tol || depth == 0) return value;
  const double m = 0.5 * (a + b);
  return gk15_adaptive(f, a, m, abs_tol / 2, depth - 1) +
         gk15_adaptive(f, m, b, abs_tol / 2, depth - 1);
}

}  // namespace detail

template <class F>
double integrate_gk15(F&& f, double a, double b, double abs_tol, int max_depth) {
  return detail::gk15_adaptive(f, a, b, abs_tol, max_depth);
}

}  // namespace albertkit
