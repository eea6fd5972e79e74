// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "albertkit/albert.hpp"
#include "albertkit/composition.hpp"
#include "albertkit/fourier_support.hpp"
#include "albertkit/random.hpp"
#include "albertkit/reptheory.hpp"
#include "albertkit/satake.hpp"
#include "albertkit/spherical.hpp"

using namespace albertkit;

namespace {

using Clock = std::chrono::steady_clock;
using AR = AlbertElement<Rational>;
using QR = Quaternion<Rational>;
using OR = Octonion<Rational>;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_s > 0) o.require(secs < budget_s, "runtime " + std::to_string(secs) + " s over budget");
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << id << ". " << name << "  (" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s)";
  if (!o.ok) std::cout << "  " << o.detail.str();
  std::cout << std::endl;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

QuaternionAlgebra<Rational> m2() { return QuaternionAlgebra<Rational>::matrix2(Rational(1)); }

template <class T>
bool trichotomy_holds(const AlbertElement<T>& a) {
  const bool square_test = !a.is_zero() && square(a) == a.trace() * a;
  return (rank(a) == 1) == square_test;
}

AR integral_rank_one(Sampler& rng) {
  auto q = [&] {
    return QR(m2(), {Rational(rng.uniform(-4, 4)), Rational(rng.uniform(-4, 4)), Rational(rng.uniform(-4, 4)),
                     Rational(rng.uniform(-4, 4))});
  };
  const QR s = q(), t = q();
  auto oct = [&](const QR& a) { return OR(a, QR::zero(m2()), Rational(1)); };
  return AR({Rational(1), s.norm(), t.norm()}, {oct(s.conj()), oct(s * t.conj()), oct(t)});
}

void composition_law(Outcome& o) {
  Sampler rng(1001);
  PrimeField f(5);
  auto alg5 = QuaternionAlgebra<Fp>::matrix2(f.one());
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const Fp lambda = rng.nonzero_fp(5);
    auto x = rng.octonion(alg5, lambda), y = rng.octonion(alg5, lambda);
    const auto one = Octonion<Fp>::scalar(alg5, lambda, f.one());
    if ((x * y).norm() != x.norm() * y.norm()) ++bad;
    if (!(x * x - x.trace() * x + x.norm() * one).is_zero()) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " failures over F_5");
  bad = 0;
  const auto algs = {m2(), QuaternionAlgebra<Rational>::symbol(Rational(-1), Rational(-1))};
  for (int i = 0; i < 10000; ++i) {
    const auto& alg = *(algs.begin() + i % 2);
    const Rational lambda = rng.nonzero_rational();
    OR x = rng.octonion(alg, lambda), y = rng.octonion(alg, lambda);
    const OR one = OR::scalar(alg, lambda, Rational(1));
    if ((x * y).norm() != x.norm() * y.norm()) ++bad;
    if (!(x * x - x.trace() * x + x.norm() * one).is_zero()) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " failures over Q");
}

void lemma_key(Outcome& o, std::uint32_t p) {
  for (std::int64_t lambda : {1, 2}) {
    auto r = check_lemma_key(p, lambda, std::nullopt, workers());
    const std::string tag = "p=" + std::to_string(p) + " lambda=" + std::to_string(lambda);
    o.require(r.omega3.size() == 8 && r.omega3_empty(), tag + " omega3 nonempty");
    bool counts = r.omega2.size() == 4;
    for (const auto& c : r.omega2) counts = counts && c.count == std::size_t{p} * (p * p - 1);
    o.require(counts, tag + " omega2 count");
    o.require(r.torsor(), tag + " torsor");
    o.require(r.omega1.size() == 2 && r.omega1_agree(), tag + " omega1 full vs reduced");
    o.require(r.round_trip, tag + " round trip");
  }
}

void rank_trichotomy(Outcome& o) {
  std::size_t scanned = 0, bad = 0;
  for (std::int64_t lambda : {1, 2}) {
    for (int e1 : {1, -1}) {
      for (int e2 : {1, -1}) {
        for (const auto& t : {CharacterTarget(2, {e1, e2, 1}), CharacterTarget(1, {e1, 1, 1}),
                              CharacterTarget(3, {e1, e2, 1})}) {
          for (std::uint32_t p : {3u, 5u}) {
            if (p == 5 && t.rank_index != 2) continue;
            for (const auto& a : omega_enumerate(t, p, lambda, workers()).elements) {
              ++scanned;
              if (!trichotomy_holds(a)) ++bad;
            }
          }
        }
      }
    }
  }
  o.require(scanned > 0, "no scan elements");
  Sampler rng(1003);
  auto alg = m2();
  for (int i = 0; i < 10000; ++i) {
    const Rational lambda = rng.nonzero_rational();
    AR a = [&] {
      switch (i % 4) {
        case 0: return rng.albert(alg, lambda);
        case 1: return rng.rank_one(alg, lambda);
        case 2: return rng.rank_one(alg, lambda) + rng.rank_one(alg, lambda);
        default: return AR::zero(alg, lambda);
      }
    }();
    if (!trichotomy_holds(a)) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " mismatches");
}

void padic_scaling(Outcome& o) {
  Sampler rng(1004);
  std::vector<AR> base{AR::idempotent(m2(), Rational(1), 0)};
  for (int i = 0; i < 4; ++i) base.push_back(integral_rank_one(rng));
  for (unsigned p : {2u, 3u, 5u}) {
    for (const auto& a : base) {
      Rational scale = 1;
      Integer expected = 0, q3k = 1;
      for (unsigned k = 0; k <= 3; ++k) {
        expected += q3k;
        q3k *= Integer(p) * p * p;
        const Integer got = spherical_padic(IntegralAlbert::from_rational(scale * a), PrimeData(p));
        o.require(got == expected, "p=" + std::to_string(p) + " k=" + std::to_string(k) + " got " + got.str());
        scale *= p;
      }
    }
  }
  const Integer v = spherical_padic(IntegralAlbert::from_rational(Rational(9) * base[0]), PrimeData(3));
  o.require(v == 757, "p=3 k=2 gives " + v.str());
}

double k32_by_quadrature(double u) {
  // K_{3/2}(u) = int_0^inf e^{-u cosh s} cosh(3s/2) ds; the integrand is below 1e-300
  // once u cosh s > 700.
  const double upper = std::acosh(750.0 / u);
  return integrate_gk15([u](double s) { return std::exp(-u * std::cosh(s)) * std::cosh(1.5 * s); }, 0.0, upper,
                        1e-14);
}

void spherical_real_values(Outcome& o) {
  const auto e11 = RealAlbert::from_rational(AR::idempotent(m2(), Rational(1), 0));
  const double expected = 2 * std::sqrt(std::numbers::pi / 2) * std::exp(-1.0);
  o.require(std::abs(spherical_real(e11) - expected) <= 1e-8, "value at norm one");
  for (double u : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double quad = k32_by_quadrature(u);
    o.require(std::abs(bessel_k32(u) - quad) <= 1e-8 * quad, "K_{3/2} vs quadrature at u=" + std::to_string(u));
  }
  for (double t : {1.0, 2.0, 10.0}) {
    const double lhs = spherical_real(cartan_family_element(t));
    const double rhs = spherical_profile(cartan_profile(t).second);
    o.require(std::abs(lhs - rhs) <= 1e-12 * rhs, "Cartan composition at t=" + std::to_string(t));
  }
}

void bessel_integral_bound(Outcome& o) {
  const double v = bessel_integral(1e-10);
  const double v_half = bessel_integral(5e-11);
  const double bound = std::sqrt(std::numbers::pi / 2) * 0.375 * std::exp(-2.0);
  o.require(v > 0, "not positive");
  o.require(std::abs(v - v_half) <= 1e-10, "unstable under tolerance halving");
  o.require(v < bound, "above the analytic bound");
}

void branching(Outcome& o) {
  for (int n = 0; n <= 4; ++n) {
    const auto comps = restrict_nomega4(n);
    Integer total = 0;
    std::set<std::pair<std::vector<int>, int>> lemma;
    for (const auto& c : comps) {
      const Integer d = weyl_dim(c.mu.weight());
      total += d * d;
      lemma.emplace(c.mu.weight().entries(), c.m);
    }
    o.require(total == weyl_dim(n_omega4(n)), "dimension identity at n=" + std::to_string(n));
    if (n == 1) o.require(total == 70, "n=1 total is " + total.str());
    std::set<std::pair<std::vector<int>, int>> oracle;
    bool mult_one = true;
    for (const auto& b : restrict_block(n_omega4(n), 4)) {
      mult_one = mult_one && b.multiplicity == 1;
      oracle.emplace(b.first.entries(), (b.first.total() - b.second.total()) / 2);
    }
    o.require(mult_one && oracle == lemma, "GZ oracle disagrees at n=" + std::to_string(n));
  }
  for (int n = 0; n <= 6; ++n) {
    std::set<int> want{n + 1};
    if (n >= 1) want.insert(n - 1);
    o.require(tensor_omega4_components(n) == want, "Pieri at n=" + std::to_string(n));
  }
}

void theta1(Outcome& o) {
  int count = 0;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int g = 0; g <= 6; ++g) {
        ++count;
        const auto v = theta1_ktype_allowed(a, b, g);
        o.require(v.allowed == (a == g), "criterion at " + std::to_string(a) + std::to_string(b) + std::to_string(g));
        const bool parity = (a + g) % 2 == 1;
        o.require(v.parity_fired == parity, "parity record");
        o.require(v.e_side_fired == (!parity && a >= g + 2), "e-side record");
        o.require(v.f_side_fired == (!parity && g >= a + 2), "f-side record");
        if (v.e_side_fired) o.require(v.e_side_n && 2 * *v.e_side_n == 3 * a + 2 * b + g - 2, "e-side n");
        if (v.f_side_fired) o.require(v.f_side_n && 2 * *v.f_side_n == a + 2 * b + 3 * g - 2, "f-side n");
      }
  o.require(count == 343, "triple count");
}

void u6_shape(Outcome& o) {
  for (const auto& t : su2_invariant_u6_types(3)) {
    o.require(t.multiplicity_free, "multiplicity at n=" + std::to_string(t.n));
    for (const auto& [w, mult] : t.types) {
      const bool shape = w[0] == w[1] && w[2] == 0 && w[3] == 0 && w[4] == w[5] && w[0] >= 0 && w[4] <= 0;
      o.require(shape && mult == 1, "type " + w.str() + " at n=" + std::to_string(t.n));
    }
  }
}

void satake_factorization(Outcome& o) {
  Sampler rng(1010);
  const Polynomial lin = Polynomial::one_minus(Rational(1));
  for (int i = 0; i < 100; ++i) {
    const Spin7Class c = G2Class(rng.nonzero_rational(), rng.nonzero_rational()).embed();
    o.require(spin_charpoly(c) == lin * std_charpoly(c), "G2 class " + c.str());
  }
  for (const auto& u : {std::array<int, 3>{2, 3, 5}, std::array<int, 3>{3, 5, 7}, std::array<int, 3>{2, 7, 11}}) {
    const Spin7Class c{Rational(u[0]), Rational(u[1]), Rational(u[2])};
    o.require(spin_charpoly(c)(Rational(1)) != 0, "spin(1) vanishes at " + c.str());
    o.require(!factorization_check(c), "identity holds at " + c.str());
  }
}

void bernstein(Outcome& o) {
  for (long q = 2; q <= 100; ++q) {
    const Integer qi(q);
    const Rational q3(qi * qi * qi), q5 = q3 * Rational(qi * qi);
    for (const Rational x : {q3, 1 / q3, q5, 1 / q5}) o.require(bernstein_z(x, qi) == 0, "missing root");
    o.require(bernstein_z(Rational(qi), qi) != 0, "z(q, q) = 0 at q=" + std::to_string(q));
    for (const Rational x : {Rational(qi), Rational(2, 3), q3 * 2, Rational(-7)}) {
      o.require(bernstein_z(x, qi) == bernstein_z(1 / x, qi), "asymmetric");
    }
  }
  o.require(bernstein_z(Rational(2), Integer(2)) == 42525, "z(2, 2)");
}

void embeddings(Outcome& o) {
  const bool split[] = {real_ramified(Rational(1), Rational(1))};
  const bool hamilton[] = {real_ramified(Rational(-1), Rational(-1))};
  o.require(count_octonion_embeddings(split) == 1, "split D");
  o.require(count_octonion_embeddings(hamilton) == 2, "Hamilton D");
}

}  // namespace

int main() {
  criterion(1, "composition law over F_5 and Q", 5, composition_law);
  criterion(2, "lemma-key suite, p = 3", 10, [](Outcome& o) { lemma_key(o, 3); });
  criterion(2, "lemma-key suite, p = 5", 900, [](Outcome& o) { lemma_key(o, 5); });
  criterion(3, "rank trichotomy", 0, rank_trichotomy);
  criterion(4, "p-adic spherical scaling law", 0, padic_scaling);
  criterion(5, "real spherical values", 0, spherical_real_values);
  criterion(6, "Bessel integral", 1, bessel_integral_bound);
  criterion(7, "branching suite", 60, branching);
  criterion(8, "theta(1) K-type criterion", 0, theta1);
  criterion(9, "U(6) shape", 0, u6_shape);
  criterion(10, "Satake factorization", 0, satake_factorization);
  criterion(11, "Bernstein element", 0, bernstein);
  criterion(12, "octonion embedding count", 0, embeddings);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
