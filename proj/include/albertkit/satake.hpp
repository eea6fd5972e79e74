#pragma once

// Spin(7) classes in spin-torus coordinates, their spin and standard
// characteristic polynomials, the G2 image test, local L-factors and the
// Bernstein-center element z.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "albertkit/scalars.hpp"

namespace albertkit {

// Univariate polynomial in T with exact rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  // 1 - a T
  static Polynomial one_minus(const Rational& a);

  const std::vector<Rational>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }

  Rational operator()(const Rational& t) const;
  std::complex<double> operator()(std::complex<double> t) const;

  // c_k = sign * c_{d-k} for a common sign +-1.
  bool is_palindromic() const;

  std::vector<std::string> to_strings() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

class Spin7Class {
 public:
  Spin7Class(Rational u1, Rational u2, Rational u3);

  const std::array<Rational, 3>& coords() const { return u_; }

  // The 8 products u1^e1 u2^e2 u3^e3, e in {+-1}^3, in sign-pattern order.
  std::vector<Rational> spin_eigenvalues() const;
  // 1, u1^2, u1^-2, u2^2, u2^-2, u3^2, u3^-2.
  std::vector<Rational> std_eigenvalues() const;

  // Each |u_i| >= 1 (inverting if needed), then sorted descending.
  Spin7Class canonical() const;

  std::string str() const;

  friend bool operator==(const Spin7Class&, const Spin7Class&) = default;

 private:
  std::array<Rational, 3> u_;
};

class G2Class {
 public:
  G2Class(Rational v1, Rational v2);
  const Rational& v1() const { return v1_; }
  const Rational& v2() const { return v2_; }

  // (v1, v2, v1 v2).
  Spin7Class embed() const;

 private:
  Rational v1_, v2_;
};

enum class LRep { spin, std_rep };

const char* to_string(LRep r);
LRep parse_lrep(std::string_view s);

// det(1 - r(c) T).
Polynomial spin_charpoly(const Spin7Class& c);
Polynomial std_charpoly(const Spin7Class& c);
Polynomial charpoly(const Spin7Class& c, LRep rep);

bool is_in_g2_image(const Spin7Class& c);

struct FactorizationReport {
  bool identity = false;      // spin == (1 - T) std exactly
  bool in_g2_image = false;
  Rational spin_at_one;       // spin_charpoly(c)(1)
  bool agrees() const { return identity == in_g2_image; }
};

FactorizationReport factorization_detail(const Spin7Class& c);
bool factorization_check(const Spin7Class& c);

// 1 / det(1 - r(c) q^{-s}); PoleError (order = number of vanishing factors) at a zero.
std::complex<double> local_l_factor(const Spin7Class& c, LRep rep, int q, std::complex<double> s);

// Exact variant at a rational T.
Rational local_l_factor_at(const Spin7Class& c, LRep rep, const Rational& t);

// (x - q^3)(1/x - q^3)(x - q^5)(1/x - q^5).
Rational bernstein_z(const Rational& x, const Integer& q);

}  // namespace albertkit
