#include "albertkit/scalars.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <tuple>

namespace albertkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeData::PrimeData(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

std::optional<unsigned> valuation(const Integer& n, const PrimeData& p) {
  if (n == 0) return std::nullopt;
  Integer m = abs(n);
  unsigned k = 0;
  while (m % p.p() == 0) {
    m /= p.p();
    ++k;
  }
  return k;
}

std::complex<double> additive_character(std::uint64_t t, const PrimeData& p) {
  if (t >= p.p()) throw DomainError("additive_character: residue out of range");
  if (t == 0) return {1.0, 0.0};
  double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / p.p();
  return std::polar(1.0, angle);
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return DomainError("not a rational number: '" + std::string(text) + "'");
  };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw fail();

  auto parse_int = [&](const std::string& digits) {
    std::size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (i == digits.size()) throw fail();
    for (std::size_t j = i; j < digits.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(digits[j]))) throw fail();
    }
    Integer v(digits.substr(i));
    return digits[0] == '-' ? Integer(-v) : v;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_int(s.substr(0, slash));
    Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw DomainError("rational with zero denominator: '" + s + "'");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.empty()) frac = "0";
    Integer w = parse_int(whole);
    Integer f = parse_int(frac);
    if (frac[0] == '-' || frac[0] == '+') throw fail();
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Rational magnitude = Rational(abs(w)) + Rational(f, scale);
    return negative ? Rational(-magnitude) : magnitude;
  }
  return Rational(parse_int(s));
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Fp::Fp(std::int64_t value, std::uint32_t modulus) : p_(modulus) {
  if (modulus == 0) throw DomainError("F_p element with zero modulus");
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  v_ = static_cast<std::uint32_t>(r);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw DomainError("inverse of zero in F_p");
  std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::tie(a, m) = std::pair(m, a - q * m);
    std::tie(x0, x1) = std::pair(x1, x0 - q * x1);
  }
  return Fp(x0, p_);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p == 2) throw UnsupportedError("characteristic 2 is not supported (2 must be invertible)");
}

RingSpec RingSpec::prime_field(std::uint32_t p) {
  PrimeField check(p);
  return {RingKind::prime_field, check.p()};
}

}  // namespace albertkit
