#include "albertkit/satake.hpp"

#include <algorithm>
#include <cmath>

#include "albertkit/error.hpp"

namespace albertkit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::one_minus(const Rational& a) { return Polynomial({Rational(1), -a}); }

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> t) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->convert_to<double>();
  return acc;
}

bool Polynomial::is_palindromic() const {
  if (c_.empty()) return true;
  const std::size_t d = c_.size() - 1;
  for (int sign : {1, -1}) {
    bool ok = true;
    for (std::size_t k = 0; k <= d && ok; ++k) ok = c_[k] == sign * c_[d - k];
    if (ok) return true;
  }
  return false;
}

std::vector<std::string> Polynomial::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : c_) out.push_back(to_string(c));
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Polynomial(std::move(c));
}

Spin7Class::Spin7Class(Rational u1, Rational u2, Rational u3) : u_{std::move(u1), std::move(u2), std::move(u3)} {
  for (const auto& u : u_) {
    if (u == 0) throw DomainError("Spin7Class: coordinates must be nonzero");
  }
}

std::vector<Rational> Spin7Class::spin_eigenvalues() const {
  std::vector<Rational> out;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1})
      for (int e3 : {1, -1}) {
        out.push_back((e1 > 0 ? u_[0] : 1 / u_[0]) * (e2 > 0 ? u_[1] : 1 / u_[1]) *
                      (e3 > 0 ? u_[2] : 1 / u_[2]));
      }
  return out;
}

std::vector<Rational> Spin7Class::std_eigenvalues() const {
  std::vector<Rational> out{Rational(1)};
  for (const auto& u : u_) {
    out.push_back(u * u);
    out.push_back(1 / (u * u));
  }
  return out;
}

Spin7Class Spin7Class::canonical() const {
  std::array<Rational, 3> v = u_;
  for (auto& u : v) {
    if (abs(u) < 1) u = 1 / u;
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return Spin7Class(v[0], v[1], v[2]);
}

std::string Spin7Class::str() const {
  return to_string(u_[0]) + "," + to_string(u_[1]) + "," + to_string(u_[2]);
}

G2Class::G2Class(Rational v1, Rational v2) : v1_(std::move(v1)), v2_(std::move(v2)) {
  if (v1_ == 0 || v2_ == 0) throw DomainError("G2Class: coordinates must be nonzero");
}

Spin7Class G2Class::embed() const { return Spin7Class(v1_, v2_, v1_ * v2_); }

const char* to_string(LRep r) { return r == LRep::spin ? "spin" : "std"; }

LRep parse_lrep(std::string_view s) {
  if (s == "spin") return LRep::spin;
  if (s == "std") return LRep::std_rep;
  throw DomainError("unknown representation '" + std::string(s) + "' (expected spin or std)");
}

namespace {

const std::vector<Rational> eigenvalues(const Spin7Class& c, LRep rep) {
  return rep == LRep::spin ? c.spin_eigenvalues() : c.std_eigenvalues();
}

Polynomial product_of(const std::vector<Rational>& eig) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& e : eig) p = p * Polynomial::one_minus(e);
  return p;
}

}  // namespace

Polynomial spin_charpoly(const Spin7Class& c) { return product_of(c.spin_eigenvalues()); }
Polynomial std_charpoly(const Spin7Class& c) { return product_of(c.std_eigenvalues()); }
Polynomial charpoly(const Spin7Class& c, LRep rep) { return product_of(eigenvalues(c, rep)); }

bool is_in_g2_image(const Spin7Class& c) {
  auto eig = c.spin_eigenvalues();
  return std::any_of(eig.begin(), eig.end(), [](const Rational& e) { return e == 1; });
}

FactorizationReport factorization_detail(const Spin7Class& c) {
  FactorizationReport r;
  const Polynomial spin = spin_charpoly(c);
  r.identity = spin == Polynomial::one_minus(Rational(1)) * std_charpoly(c);
  r.in_g2_image = is_in_g2_image(c);
  r.spin_at_one = spin(Rational(1));
  return r;
}

bool factorization_check(const Spin7Class& c) { return factorization_detail(c).identity; }

std::complex<double> local_l_factor(const Spin7Class& c, LRep rep, int q, std::complex<double> s) {
  if (q < 2) throw DomainError("local_l_factor: q must be at least 2");
  const std::complex<double> t = std::exp(-s * std::log(static_cast<double>(q)));
  std::complex<double> det = 1;
  unsigned order = 0;
  for (const auto& e : eigenvalues(c, rep)) {
    const std::complex<double> f = 1.0 - e.convert_to<double>() * t;
    if (std::abs(f) < 1e-12) ++order;
    det *= f;
  }
  if (order > 0) {
    throw PoleError("local_l_factor: pole of order " + std::to_string(order) + " at q^-s", order);
  }
  return 1.0 / det;
}

Rational local_l_factor_at(const Spin7Class& c, LRep rep, const Rational& t) {
  Rational det = 1;
  unsigned order = 0;
  for (const auto& e : eigenvalues(c, rep)) {
    const Rational f = 1 - e * t;
    if (f == 0) {
      ++order;
    } else {
      det *= f;
    }
  }
  if (order > 0) {
    throw PoleError("local_l_factor: pole of order " + std::to_string(order) + " at T = " + to_string(t), order);
  }
  return 1 / det;
}

Rational bernstein_z(const Rational& x, const Integer& q) {
  if (x == 0) throw DomainError("bernstein_z: x must be nonzero");
  if (q < 2) throw DomainError("bernstein_z: q must be at least 2");
  const Rational q3(q * q * q);
  const Rational q5 = q3 * Rational(q * q);
  const Rational xi = 1 / x;
  return (x - q3) * (xi - q3) * (x - q5) * (xi - q5);
}

}  // namespace albertkit
