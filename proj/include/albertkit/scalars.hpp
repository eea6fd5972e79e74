#pragma once

#include <compare>
#include <complex>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/gmp.hpp>

#include "albertkit/error.hpp"

namespace albertkit {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;

bool is_prime(std::uint64_t n);

// A rational prime together with the order of its residue field. In the integral
// model used here the uniformizer is p itself, so q == p.
class PrimeData {
 public:
  explicit PrimeData(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t q() const { return p_; }

 private:
  std::uint32_t p_;
};

// p-adic valuation of an integer; std::nullopt encodes +infinity (n == 0).
std::optional<unsigned> valuation(const Integer& n, const PrimeData& p);

// exp(2 pi i t / p) for a residue 0 <= t < p.
std::complex<double> additive_character(std::uint64_t t, const PrimeData& p);

// Parses "7", "-3/4" or "0.125" into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Element of the prime field F_p. The modulus travels with the value so that
// generic algebra code can build constants from any operand. Arithmetic between
// different moduli is a DomainError. Validation of the modulus happens once, in
// PrimeField.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b) {
    check(a, b);
    std::uint32_t s = a.v_ + b.v_;
    return raw(s >= a.p_ ? s - a.p_ : s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    check(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator-(Fp a) { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend Fp operator*(Fp a, Fp b) {
    check(a, b);
    return raw(static_cast<std::uint32_t>(
                   static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_),
               a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend auto operator<=>(Fp a, Fp b) {
    return std::pair(a.p_, a.v_) <=> std::pair(b.p_, b.v_);
  }
  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  static void check(Fp a, Fp b) {
    if (a.p_ != b.p_) throw DomainError("F_p arithmetic across different moduli");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

// F_p for an odd prime p; the only finite fields the Jordan-algebra code accepts.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  Fp operator()(std::int64_t v) const { return Fp(v, p_); }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }

 private:
  std::uint32_t p_;
};

enum class RingKind { exact_rationals, prime_field, integers, reals_float };

struct RingSpec {
  RingKind kind = RingKind::exact_rationals;
  std::uint32_t p = 0;  // prime_field only

  static RingSpec rationals() { return {RingKind::exact_rationals, 0}; }
  static RingSpec integers() { return {RingKind::integers, 0}; }
  static RingSpec reals() { return {RingKind::reals_float, 0}; }
  static RingSpec prime_field(std::uint32_t p);
};

// Uniform access to constants and the few ring operations generic algebra code
// needs. `like` supplies context (the modulus for F_p) and is otherwise ignored.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool has_half = true;
  static Rational from_int(long v, const Rational&) { return Rational(v); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational half(const Rational& x) { return x / 2; }
  static std::string to_string(const Rational& x) { return albertkit::to_string(x); }
};

template <>
struct ScalarTraits<Integer> {
  static constexpr bool has_half = false;
  static Integer from_int(long v, const Integer&) { return Integer(v); }
  static bool is_zero(const Integer& x) { return x == 0; }
  static std::string to_string(const Integer& x) { return x.str(); }
};

template <>
struct ScalarTraits<Fp> {
  static constexpr bool has_half = true;
  static Fp from_int(long v, const Fp& like) { return Fp(v, like.modulus()); }
  static bool is_zero(const Fp& x) { return x.value() == 0; }
  static Fp half(const Fp& x) { return x / Fp(2, x.modulus()); }
  static std::string to_string(const Fp& x) { return std::to_string(x.value()); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool has_half = true;
  static double from_int(long v, const double&) { return static_cast<double>(v); }
  static bool is_zero(const double& x) { return x == 0.0; }
  static double half(const double& x) { return x / 2; }
  static std::string to_string(const double& x) { return std::to_string(x); }
};

template <class T>
concept Scalar = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  ScalarTraits<T>::from_int(1L, a);
};

template <Scalar T>
T scalar_from_int(long v, const T& like) {
  return ScalarTraits<T>::from_int(v, like);
}
template <Scalar T>
bool scalar_is_zero(const T& x) {
  return ScalarTraits<T>::is_zero(x);
}

}  // namespace albertkit
