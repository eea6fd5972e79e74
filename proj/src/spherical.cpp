#include "albertkit/spherical.hpp"

#include <cmath>
#include <numbers>

namespace albertkit {
namespace {

template <class T>
void require_split_model(const AlbertElement<T>& e, const char* who) {
  if (e.algebra().backend() != QuaternionBackend::matrix2 ||
      !(e.lambda() == scalar_from_int(1, e.lambda()))) {
    throw DomainError(std::string(who) + ": expects the split model (matrix backend, lambda = 1)");
  }
}

template <class To, class Fn>
AlbertElement<To> convert(const AlbertElement<Rational>& e, Fn fn) {
  auto q = [&](const Quaternion<Rational>& src) {
    return Quaternion<To>(QuaternionAlgebra<To>::matrix2(To(1)),
                          {fn(src[0]), fn(src[1]), fn(src[2]), fn(src[3])});
  };
  auto o = [&](const Octonion<Rational>& src) {
    return Octonion<To>(q(src.first()), q(src.second()), To(1));
  };
  return AlbertElement<To>({fn(e.alpha()), fn(e.beta()), fn(e.gamma())}, {o(e.x()), o(e.y()), o(e.z())});
}

}  // namespace

IntegralAlbert::IntegralAlbert(AlbertElement<Integer> element) : e_(std::move(element)) {
  require_split_model(e_, "IntegralAlbert");
}

IntegralAlbert IntegralAlbert::from_rational(const AlbertElement<Rational>& element) {
  require_split_model(element, "IntegralAlbert");
  return IntegralAlbert(convert<Integer>(element, [](const Rational& r) {
    if (denominator(r) != 1) throw DomainError("IntegralAlbert: non-integral coordinate " + to_string(r));
    return numerator(r);
  }));
}

RealAlbert::RealAlbert(AlbertElement<double> element) : e_(std::move(element)) {
  require_split_model(e_, "RealAlbert");
}

RealAlbert RealAlbert::from_rational(const AlbertElement<Rational>& element) {
  require_split_model(element, "RealAlbert");
  return RealAlbert(convert<double>(element, [](const Rational& r) { return r.convert_to<double>(); }));
}

double RealAlbert::norm_squared() const {
  double s = 0;
  for (double c : e_.coordinates()) s += c * c;
  return s;
}

double RealAlbert::norm() const { return std::sqrt(norm_squared()); }

unsigned gcd_exponent(const IntegralAlbert& a, const PrimeData& p) {
  std::optional<unsigned> best;
  for (const Integer& c : a.element().coordinates()) {
    auto v = valuation(c, p);
    if (v && (!best || *v < *best)) best = v;
  }
  if (!best) throw DomainError("gcd_exponent: zero element has no gcd");
  return *best;
}

PadicSpherical spherical_padic_detail(const IntegralAlbert& a, const PrimeData& p) {
  const int r = rank(a.element());
  if (r != 1) {
    throw DomainError("spherical_padic: element has rank " + std::to_string(r) +
                      "; the spherical vector lives on rank-one elements");
  }
  PadicSpherical out;
  out.gcd_exponent = gcd_exponent(a, p);
  const Integer q3 = Integer(p.q()) * p.q() * p.q();
  Integer term = 1;
  out.value = 0;
  for (unsigned j = 0; j <= out.gcd_exponent; ++j) {
    out.value += term;
    if (j < out.gcd_exponent) out.literal += term;
    term *= q3;
  }
  return out;
}

Integer spherical_padic(const IntegralAlbert& a, const PrimeData& p) {
  return spherical_padic_detail(a, p).value;
}

double bessel_k32(double u) {
  if (!(u > 0)) throw DomainError("bessel_k32: argument must be positive");
  return std::sqrt(std::numbers::pi / (2 * u)) * std::exp(-u) * (1 + 1 / u);
}

double spherical_profile(double u) { return std::pow(u, -1.5) * bessel_k32(u); }

double spherical_real(const RealAlbert& a) {
  const double n = a.norm();
  if (n == 0) throw DomainError("spherical_real: singular at A = 0");
  return spherical_profile(n);
}

std::pair<double, double> cartan_profile(double t) {
  if (!(t > 0)) throw DomainError("cartan_profile: t must be positive");
  return {t * t + 1 / (t * t), t + 1 / t};
}

RealAlbert cartan_family_element(double t) {
  if (!(t > 0)) throw DomainError("cartan_family_element: t must be positive");
  auto alg = QuaternionAlgebra<double>::matrix2(1.0);
  Octonion<double> x(Quaternion<double>::zero(alg), Quaternion<double>(alg, {t, 0.0, 0.0, 1 / t}), 1.0);
  auto zero = Octonion<double>::zero(alg, 1.0);
  return RealAlbert(AlbertElement<double>({1.0, -1.0, 0.0}, {x, zero, zero}));
}

double bessel_integral(double rel_tol) {
  if (!(rel_tol > 0 && rel_tol <= 1e-4)) {
    throw DomainError("bessel_integral: rel_tol must lie in (0, 1e-4]");
  }
  auto integrand = [](double u) {
    return std::sqrt(std::numbers::pi / 2) * std::exp(-u) * (1 + 1 / u) / (u * u);
  };
  // Scale for the per-panel error budget; the integral is a few times 1e-2.
  const double first = integrate_gk15(integrand, 2.0, 3.0, 1e-18);
  double sum = first;
  double lo = 3.0;
  while (integrand(lo) >= rel_tol * sum) {
    sum += integrate_gk15(integrand, lo, lo + 1, 1e-3 * rel_tol * first);
    lo += 1;
  }
  return sum;
}

}  // namespace albertkit
