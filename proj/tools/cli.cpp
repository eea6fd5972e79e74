#include "albertkit/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "albertkit/fourier_support.hpp"
#include "albertkit/random.hpp"
#include "albertkit/reptheory.hpp"
#include "albertkit/report.hpp"
#include "albertkit/satake.hpp"
#include "albertkit/spherical.hpp"

namespace albertkit::cli {
namespace {

struct Options {
  unsigned workers = 1;

  // verify
  std::uint32_t p = 3;
  std::string lambda = "1";
  std::string signs;
  int samples = 0;
  std::uint64_t seed = 1;
  std::string element;

  // spherical
  std::string t;
  double tol = 1e-10;

  // ktypes
  int n = 2;
  int alpha_max = 6;
  int n_max = 3;

  // satake
  std::string class_coords;
  std::string g2_coords;
  std::string rep = "spin";
  int q = 2;
  std::string s = "1";
  double s_im = 0;
  std::string x = "2";

  // octonion
  std::string ramified;
  std::string a, b;
};

using Handler = std::function<Report(const Options&)>;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Rational rational_arg(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const DomainError& e) {
    throw DomainError(std::string("--") + flag + ": " + e.what());
  }
}

long integer_arg(const std::string& text, const char* flag) {
  const Rational r = rational_arg(text, flag);
  if (denominator(r) != 1) throw DomainError(std::string("--") + flag + " must be an integer");
  return numerator(r).convert_to<long>();
}

Spin7Class class_arg(const Options& o) {
  if (!o.g2_coords.empty()) {
    auto parts = split_list(o.g2_coords);
    if (parts.size() != 2) throw DomainError("--g2 expects two coordinates v1,v2");
    return G2Class(rational_arg(parts[0], "g2"), rational_arg(parts[1], "g2")).embed();
  }
  auto parts = split_list(o.class_coords);
  if (parts.size() != 3) throw DomainError("--class expects three coordinates u1,u2,u3");
  return Spin7Class(rational_arg(parts[0], "class"), rational_arg(parts[1], "class"),
                    rational_arg(parts[2], "class"));
}

json strings(const std::vector<Rational>& v) {
  json j = json::array();
  for (const auto& r : v) j.push_back(to_string(r));
  return j;
}

json weight_json(const HighestWeight& w) { return w.entries(); }

// ---------------------------------------------------------------- verify

Report verify_lemma_key(const Options& o) {
  Report r("verify lemma-key");
  const long lambda = integer_arg(o.lambda, "lambda");
  std::optional<std::array<int, 3>> signs;
  if (!o.signs.empty()) {
    if (o.signs.size() != 3 || o.signs.find_first_not_of("+-") != std::string::npos) {
      throw DomainError("--signs expects three characters from {+, -}, e.g. +-+");
    }
    signs = std::array<int, 3>{};
    for (int i = 0; i < 3; ++i) (*signs)[i] = o.signs[i] == '+' ? 1 : -1;
  }
  r.parameters() = {{"p", o.p}, {"lambda", lambda}, {"signs", o.signs.empty() ? "all" : o.signs},
                    {"workers", o.workers}};

  const LemmaKeyReport k = check_lemma_key(o.p, lambda, signs, o.workers);

  json cases = json::array();
  std::size_t omega2_total = 0;
  for (const auto& c : k.omega3) cases.push_back({{"target", "psi3 " + c.target.label()}, {"count", c.count}});
  for (const auto& c : k.omega2) {
    omega2_total += c.count;
    cases.push_back({{"target", "psi2 " + c.target.label()},
                     {"count", c.count},
                     {"orbit_size", c.orbit.orbit_size},
                     {"group_size", c.orbit.group_size},
                     {"torsor", c.orbit.torsor()},
                     {"y_z_zero", c.y_z_zero}});
  }
  for (const auto& c : k.omega1) {
    cases.push_back({{"target", "psi1 " + c.target.label()},
                     {"full", c.full},
                     {"reduced", c.reduced},
                     {"sets_equal", c.sets_equal},
                     {"y_zero", c.y_slot_zero}});
  }
  r.results() = {{"omega3_count", k.omega3_total()},
                 {"omega2_count", k.omega2.front().count},
                 {"omega2_total", omega2_total},
                 {"torsor", k.torsor()},
                 {"omega1_full", k.omega1_full_total()},
                 {"omega1_reduced", k.omega1_reduced_total()},
                 {"cases", cases}};

  r.check("omega3_empty", "Fourier-support lemma: no rank-one element pairs to a rank-3 diagonal character",
          k.omega3_empty(), {{"count", k.omega3_total()}});
  r.check("omega2_count", "Fourier-support lemma: each omega_2 slice has p(p^2 - 1) = |D^1(F_p)| points",
          k.omega2_counts_match(), {{"expected", k.expected_omega2()}});
  r.check("d1_torsor", "Fourier-support lemma: D^1 acts simply transitively on omega_2, with y = z = 0",
          k.torsor());
  r.check("omega1_reduced", "Fourier-support lemma: omega_1 is b = 0, N(a) = N(c) = 0, a conj(c) = 0",
          k.omega1_agree(), {{"full", k.omega1_full_total()}, {"reduced", k.omega1_reduced_total()}});
  r.check("round_trip", "characters via the trace pairing: every scanned element is rank one and restricts to its target",
          k.round_trip);
  return r;
}

template <Scalar T>
struct CompositionTally {
  long multiplicative = 0, quadratic = 0, conjugation = 0, alternative = 0, total = 0;

  void add(const Octonion<T>& x, const Octonion<T>& y) {
    const auto xy = x * y;
    const auto one = Octonion<T>::scalar(x.algebra(), x.lambda(), x.algebra().one());
    ++total;
    if (xy.norm() == x.norm() * y.norm()) ++multiplicative;
    if ((x * x - x.trace() * x + x.norm() * one).is_zero()) ++quadratic;
    if (xy.conj() == y.conj() * x.conj()) ++conjugation;
    if (x * (x * y) == (x * x) * y && (y * x) * x == y * (x * x)) ++alternative;
  }
  bool ok() const {
    return multiplicative == total && quadratic == total && conjugation == total && alternative == total;
  }
  json to_json() const {
    return {{"samples", total}, {"multiplicative", multiplicative}, {"quadratic", quadratic},
            {"conjugation", conjugation}, {"alternative", alternative}};
  }
};

Report verify_composition(const Options& o) {
  Report r("verify composition");
  const int samples = o.samples > 0 ? o.samples : 1000;
  r.parameters() = {{"p", o.p}, {"samples", samples}, {"seed", o.seed}};
  Sampler rng(o.seed);

  PrimeField f(o.p);
  auto alg_p = QuaternionAlgebra<Fp>::matrix2(f.one());
  CompositionTally<Fp> finite;
  for (int i = 0; i < samples; ++i) {
    const Fp lambda = rng.nonzero_fp(o.p);
    finite.add(rng.octonion(alg_p, lambda), rng.octonion(alg_p, lambda));
  }

  CompositionTally<Rational> exact;
  for (int i = 0; i < samples; ++i) {
    auto alg = i % 2 == 0 ? QuaternionAlgebra<Rational>::matrix2(Rational(1))
                          : QuaternionAlgebra<Rational>::symbol(rng.nonzero_rational(), rng.nonzero_rational());
    const Rational lambda = rng.nonzero_rational();
    exact.add(rng.octonion(alg, lambda), rng.octonion(alg, lambda));
  }
  r.results() = {{"finite_field", finite.to_json()}, {"rationals", exact.to_json()}};

  const char* anchor = "octonion doubling is a composition algebra: N(xy) = N(x)N(y), x^2 - tr(x)x + N(x) = 0";
  r.check("composition_fp", anchor, finite.ok(), finite.to_json());
  r.check("composition_rational", anchor, exact.ok(), exact.to_json());
  return r;
}

json albert_summary(const AlbertElement<Rational>& a) {
  return {{"rank", rank(a)}, {"det", to_string(det(a))}, {"trace", to_string(a.trace())},
          {"sharp_zero", sharp(a).is_zero()}, {"element", to_json(a)}};
}

Report verify_albert(const Options& o) {
  Report r("verify albert");
  const int samples = o.samples > 0 ? o.samples : 200;
  r.parameters() = {{"samples", samples}, {"seed", o.seed}, {"element", o.element}};
  Sampler rng(o.seed);

  std::vector<AlbertElement<Rational>> elements;
  if (!o.element.empty()) elements.push_back(albert_from_json(read_json_file(o.element)));
  for (int i = 0; i < samples; ++i) {
    auto alg = i % 2 == 0 ? QuaternionAlgebra<Rational>::matrix2(Rational(1))
                          : QuaternionAlgebra<Rational>::symbol(rng.nonzero_rational(), rng.nonzero_rational());
    const Rational lambda = rng.nonzero_rational();
    switch (i % 4) {
      case 0: elements.push_back(rng.albert(alg, lambda)); break;
      case 1: elements.push_back(rng.rank_one(alg, lambda)); break;
      case 2: elements.push_back(rng.rank_one(alg, lambda) + rng.rank_one(alg, lambda)); break;
      default: elements.push_back(AlbertElement<Rational>::zero(alg, lambda)); break;
    }
  }

  long trichotomy = 0, adjoint = 0, sharp_sharp = 0, cubic = 0;
  std::array<long, 4> by_rank{};
  for (const auto& a : elements) {
    const int rk = rank(a);
    ++by_rank[static_cast<std::size_t>(rk)];
    const bool square_rule = square(a) == a.trace() * a && !a.is_zero();
    if ((rk == 1) == square_rule) ++trichotomy;
    const auto s = sharp(a);
    const Rational d = det(a);
    if (jordan_mul(a, s) == d * AlbertElement<Rational>::identity(a.algebra(), a.lambda())) ++adjoint;
    if (sharp(s) == d * a) ++sharp_sharp;
    if (trace_pair(a, s) == 3 * d) ++cubic;
  }
  const long total = static_cast<long>(elements.size());
  json tally = {{"elements", total}, {"rank_counts", by_rank}, {"trichotomy", trichotomy},
                {"adjoint", adjoint}, {"sharp_sharp", sharp_sharp}, {"cubic", cubic}};
  r.results() = {{"tally", tally}};
  if (!o.element.empty()) r.results()["element"] = albert_summary(elements.front());

  r.check("rank_trichotomy", "rank one means A^2 = tr(A) A with A nonzero, equivalently A# = 0",
          trichotomy == total, tally);
  r.check("adjoint_identities", "cubic norm structure: A o A# = det(A) I, (A#)# = det(A) A, T(A, A#) = 3 det(A)",
          adjoint == total && sharp_sharp == total && cubic == total, tally);
  return r;
}

// ---------------------------------------------------------------- spherical

Report spherical_padic_cmd(const Options& o) {
  Report r("spherical padic");
  if (o.element.empty()) throw DomainError("--element is required");
  r.parameters() = {{"p", o.p}, {"element", o.element}};
  const PrimeData pd(o.p);
  const auto a = IntegralAlbert::from_rational(albert_from_json(read_json_file(o.element)));
  const PadicSpherical f = spherical_padic_detail(a, pd);
  r.results() = {{"gcd_exponent", f.gcd_exponent}, {"value", f.value.str()}, {"literal_reading", f.literal.str()}};

  const Integer q3 = Integer(pd.q()) * pd.q() * pd.q();
  const auto scaled = IntegralAlbert(Integer(pd.q()) * a.element());
  const Integer next = spherical_padic(scaled, pd);
  Integer top = 1;
  for (unsigned j = 0; j <= f.gcd_exponent; ++j) top *= q3;
  const Integer expected = f.value + top;
  r.check("scaling_law", "p-adic spherical vector: value 1 + q^3 + ... + q^{3v} on rank-one A with gcd p^v",
          next == expected, {{"value_at_pA", next.str()}, {"expected", expected.str()}});
  return r;
}

double k32_by_quadrature(double u) {
  // K_nu(u) = int_0^inf exp(-u cosh s) cosh(nu s) ds; the integrand is below 1e-300
  // once u cosh s > 700.
  const double upper = std::acosh(std::max(1.0, 700.0 / u)) + 1;
  return integrate_gk15([u](double s) { return std::exp(-u * std::cosh(s)) * std::cosh(1.5 * s); }, 0.0,
                        upper, 1e-14);
}

Report spherical_real_cmd(const Options& o) {
  Report r("spherical real");
  if (o.element.empty() == o.t.empty()) throw DomainError("give exactly one of --element or --t");
  r.parameters() = {{"element", o.element}, {"t", o.t}};
  std::optional<double> t;
  if (!o.t.empty()) {
    t = rational_arg(o.t, "t").convert_to<double>();
    if (!(*t > 0)) throw DomainError("--t must be positive");
  }
  const RealAlbert a = t ? cartan_family_element(*t) : RealAlbert::from_rational(albert_from_json(read_json_file(o.element)));
  const double norm = a.norm();
  const double value = spherical_real(a);
  r.results() = {{"norm", norm}, {"value", value}};

  const double closed = bessel_k32(norm), quad = k32_by_quadrature(norm);
  r.check("k32_closed_form", "K_{3/2}(u) = sqrt(pi/(2u)) e^{-u} (1 + 1/u) agrees with its integral representation",
          std::abs(closed - quad) <= 1e-8 * std::abs(quad), {{"closed_form", closed}, {"quadrature", quad}});
  if (t) {
    const auto [sq, lin] = cartan_profile(*t);
    r.results()["cartan_profile"] = {sq, lin};
    r.check("cartan_profile", "Cartan family: ||A|| = t + 1/t for the moved basepoint",
            std::abs(norm - lin) <= 1e-12 * lin, {{"t_plus_inverse", lin}, {"norm", norm}});
  } else {
    r.skip("cartan_profile", "Cartan family: ||A|| = t + 1/t for the moved basepoint");
  }
  return r;
}

Report spherical_bessel_cmd(const Options& o) {
  Report r("spherical bessel-integral");
  r.parameters() = {{"tol", o.tol}};
  if (!(o.tol > 0 && o.tol <= 1e-4)) throw DomainError("--tol must lie in (0, 1e-4]");
  const double v = bessel_integral(o.tol);
  const double v_half = bessel_integral(o.tol / 2);
  const double bound = std::sqrt(std::numbers::pi / 2) * 0.375 * std::exp(-2.0);
  r.results() = {{"value", v}, {"value_half_tol", v_half}, {"bound", bound}};
  r.check("positive", "the integral of u^{-3/2} K_{3/2}(u) over [2, inf) is positive", v > 0);
  r.check("stable", "halving the tolerance moves the value by at most 1e-10", std::abs(v - v_half) <= 1e-10,
          {{"difference", std::abs(v - v_half)}});
  r.check("below_bound", "the integral is below sqrt(pi/2) (3/8) e^{-2}", v < bound);
  return r;
}

// ---------------------------------------------------------------- ktypes

Report ktypes_restrict_cmd(const Options& o) {
  Report r("ktypes restrict");
  if (o.n < 0) throw DomainError("--n must be non-negative");
  r.parameters() = {{"n", o.n}};
  const auto comps = restrict_nomega4(o.n);
  Integer dim_sum = 0;
  json list = json::array();
  for (const auto& c : comps) {
    const Integer d = weyl_dim(c.mu.weight());
    dim_sum += d * d;
    list.push_back({{"mu", {c.mu.x, c.mu.y, c.mu.z, c.mu.u}}, {"m", c.m}, {"multiplicity", c.multiplicity},
                    {"dim", d.str()}});
  }
  const Integer total = weyl_dim(n_omega4(o.n));
  r.results() = {{"components", list}, {"component_count", comps.size()}, {"dimension", total.str()}};
  r.results()["note"] = "restriction taken to the 4 + 4 block sl_4 + sl_4 + C h";

  r.check("dimension_identity", "restriction lemma: sum of dim(V_mu)^2 equals dim V_{n omega_4}", dim_sum == total,
          {{"sum", dim_sum.str()}, {"weyl_dim", total.str()}});

  const char* oracle_anchor = "restriction lemma: one component V_mu (x) V_mu^* (x) C(m) per n >= x >= y >= z >= u >= 0";
  if (o.n <= 4) {
    std::vector<BlockComponent> expected;
    for (const auto& c : comps) {
      expected.push_back({c.mu.weight(), HighestWeight({o.n - c.mu.u, o.n - c.mu.z, o.n - c.mu.y, o.n - c.mu.x}), 1});
    }
    std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
      return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    });
    auto oracle = restrict_block(n_omega4(o.n), 4);
    r.check("gz_oracle", oracle_anchor, oracle == expected, {{"oracle_components", oracle.size()}});
  } else {
    r.skip("gz_oracle", oracle_anchor, {{"reason", "oracle limited to n <= 4"}});
  }

  const auto ks = tensor_omega4_components(o.n);
  std::set<int> want{o.n + 1};
  if (o.n >= 1) want.insert(o.n - 1);
  r.results()["tensor_omega4"] = ks;
  r.check("tensor_omega4", "e maps V_{n omega_4} into V_{(n-1) omega_4} + V_{(n+1) omega_4}", ks == want);
  return r;
}

Report ktypes_theta1_cmd(const Options& o) {
  Report r("ktypes theta1");
  if (o.alpha_max < 0) throw DomainError("--alpha-max must be non-negative");
  r.parameters() = {{"alpha_max", o.alpha_max}};
  long agree = 0, e_ok = 0, f_ok = 0, total = 0;
  json records = json::array();
  for (int al = 0; al <= o.alpha_max; ++al)
    for (int be = 0; be <= o.alpha_max; ++be)
      for (int ga = 0; ga <= o.alpha_max; ++ga) {
        const KTypeVerdict v = theta1_ktype_allowed(al, be, ga);
        ++total;
        if (v.consistent()) ++agree;
        // Among parity-admissible types the blocking inequalities are alpha >= gamma + 2
        // and gamma >= alpha + 2.
        if (v.parity_fired || v.e_side_fired == (al >= ga + 2)) ++e_ok;
        if (v.parity_fired || v.f_side_fired == (ga >= al + 2)) ++f_ok;
        json fired = json::array();
        if (v.parity_fired) fired.push_back("parity");
        if (v.e_side_fired) fired.push_back("e_side");
        if (v.f_side_fired) fired.push_back("f_side");
        json rec = {{"gaps", {al, be, ga}}, {"allowed", v.allowed}, {"fired", fired}};
        if (v.e_side_n) rec["e_side_n"] = *v.e_side_n;
        if (v.f_side_n) rec["f_side_n"] = *v.f_side_n;
        records.push_back(rec);
      }
  r.results() = {{"records", records}, {"triples", total}};
  r.check("alpha_equals_gamma", "K-types of Theta(1) are exactly those with alpha = gamma", agree == total,
          {{"agree", agree}, {"total", total}});
  r.check("e_side_inequality", "types with alpha >= gamma + 2 do not appear (e-side)", e_ok == total);
  r.check("f_side_inequality", "types with gamma >= alpha + 2 do not appear (f-side)", f_ok == total);
  return r;
}

Report ktypes_u6_cmd(const Options& o) {
  Report r("ktypes u6");
  r.parameters() = {{"n_max", o.n_max}};
  const auto all = su2_invariant_u6_types(o.n_max);
  json per_n = json::array();
  bool mf = true, shape = true;
  for (const auto& t : all) {
    json types = json::array();
    for (const auto& [w, mult] : t.types) types.push_back({{"weight", weight_json(w)}, {"multiplicity", mult}});
    per_n.push_back({{"n", t.n}, {"types", types}});
    mf = mf && t.multiplicity_free;
    shape = shape && t.shape_ok;
  }
  r.results() = {{"per_n", per_n}};
  r.check("multiplicity_free", "SU(2)-invariant U(6)-types of V_{n omega_4} occur with multiplicity one", mf);
  r.check("shape", "U(6)-types are (x, x, 0, 0, y, y) with x >= 0 >= y", shape);
  return r;
}

// ---------------------------------------------------------------- satake

json class_json(const Spin7Class& c) {
  const auto& u = c.coords();
  const Spin7Class canon = c.canonical();
  const auto& v = canon.coords();
  return {{"coords", strings({u.begin(), u.end()})}, {"canonical", strings({v.begin(), v.end()})}};
}

Report satake_factorize_cmd(const Options& o) {
  Report r("satake factorize");
  r.parameters() = {{"class", o.class_coords}, {"g2", o.g2_coords}};
  const Spin7Class c = class_arg(o);
  const Polynomial spin = spin_charpoly(c), stdp = std_charpoly(c);
  const FactorizationReport f = factorization_detail(c);
  r.results() = {{"class", class_json(c)},
                 {"spin_charpoly", spin.to_strings()},
                 {"std_charpoly", stdp.to_strings()},
                 {"factorizes", f.identity},
                 {"in_g2_image", f.in_g2_image},
                 {"spin_at_one", to_string(f.spin_at_one)}};
  r.check("verdicts_agree", "L(s, Spin) = zeta(s) L(s, Std) exactly when the class meets the image of G2",
          f.agrees(), {{"factorizes", f.identity}, {"in_g2_image", f.in_g2_image}});
  r.check("self_dual", "spin and standard representations are self-dual: palindromic characteristic polynomials",
          spin.is_palindromic() && stdp.is_palindromic());
  if (f.in_g2_image) {
    r.skip("no_trivial_factor", "outside the G2 image the spin polynomial does not vanish at T = 1");
  } else {
    r.check("no_trivial_factor", "outside the G2 image the spin polynomial does not vanish at T = 1",
            f.spin_at_one != 0);
  }
  return r;
}

Report satake_lfactor_cmd(const Options& o) {
  Report r("satake lfactor");
  const LRep rep = parse_lrep(o.rep);
  if (o.q < 2) throw DomainError("--q must be at least 2");
  const double s_re = rational_arg(o.s, "s").convert_to<double>();
  r.parameters() = {{"class", o.class_coords}, {"g2", o.g2_coords}, {"rep", o.rep}, {"q", o.q}, {"s", o.s},
                    {"s_im", o.s_im}};
  const Spin7Class c = class_arg(o);
  const std::complex<double> s(s_re, o.s_im);
  const char* anchor = "local factor 1 / det(1 - r(s_v) q^{-s}); Spin = zeta * Std on the G2 image";
  try {
    const auto value = local_l_factor(c, rep, o.q, s);
    r.results() = {{"value", {value.real(), value.imag()}}, {"pole_order", 0}};
    if (rep == LRep::spin && is_in_g2_image(c)) {
      const std::complex<double> t = std::exp(-s * std::log(static_cast<double>(o.q)));
      const auto std_value = local_l_factor(c, LRep::std_rep, o.q, s);
      const auto rhs = std_value / (1.0 - t);
      r.check("zeta_times_std", anchor, std::abs(value - rhs) <= 1e-12 * std::abs(rhs),
              {{"zeta_times_std", {rhs.real(), rhs.imag()}}});
    } else {
      r.skip("zeta_times_std", anchor);
    }
  } catch (const PoleError& e) {
    r.results() = {{"value", nullptr}, {"pole_order", e.order()}};
    r.skip("zeta_times_std", anchor, {{"reason", "pole"}});
  }
  return r;
}

Report satake_bernstein_cmd(const Options& o) {
  Report r("satake bernstein");
  const Rational x = rational_arg(o.x, "x");
  if (o.q < 2) throw DomainError("--q must be at least 2");
  r.parameters() = {{"x", to_string(x)}, {"q", o.q}};
  const Integer q(o.q);
  const Rational z = bernstein_z(x, q), z_inv = bernstein_z(1 / x, q);
  r.results() = {{"value", to_string(z)}, {"value_at_inverse", to_string(z_inv)}};

  const Rational q3(q * q * q), q5 = q3 * Rational(q * q);
  const bool root_expected = x == q3 || x == 1 / q3 || x == q5 || x == 1 / q5;
  r.check("symmetry", "z is invariant under x -> 1/x", z == z_inv);
  r.check("roots", "z vanishes exactly at x = q^{+-3}, q^{+-5}", (z == 0) == root_expected,
          {{"root_expected", root_expected}});
  return r;
}

// ---------------------------------------------------------------- octonion

Report octonion_count_cmd(const Options& o) {
  Report r("octonion count-embeddings");
  std::vector<bool> ramified;
  if (!o.a.empty() || !o.b.empty()) {
    if (o.a.empty() || o.b.empty() || !o.ramified.empty()) {
      throw DomainError("give either --a and --b, or --ramified");
    }
    const Rational a = rational_arg(o.a, "a"), b = rational_arg(o.b, "b");
    const bool ram = real_ramified(a, b);
    ramified.push_back(ram);
    r.parameters() = {{"a", to_string(a)}, {"b", to_string(b)}};
  } else {
    if (o.ramified.empty()) throw DomainError("give either --a and --b, or --ramified");
    for (const auto& item : split_list(o.ramified)) {
      if (item == "true" || item == "1") {
        ramified.push_back(true);
      } else if (item == "false" || item == "0") {
        ramified.push_back(false);
      } else {
        throw DomainError("--ramified entries must be true/false");
      }
    }
    r.parameters() = {{"ramified", o.ramified}};
  }
  auto buf = std::make_unique<bool[]>(ramified.size());
  std::copy(ramified.begin(), ramified.end(), buf.get());
  const Integer count = count_octonion_embeddings(std::span<const bool>(buf.get(), ramified.size()));

  // At each real place the octonion algebras containing D are D + D l for l = +1 or -1;
  // they differ exactly when D is Hamilton's.
  Integer local_product = 1;
  const auto hamilton = QuaternionAlgebra<Rational>::symbol(Rational(-1), Rational(-1));
  const auto split = QuaternionAlgebra<Rational>::matrix2(Rational(1));
  for (bool ram : ramified) {
    const auto& d = ram ? hamilton : split;
    const bool s_plus = is_split_octonion(Rational(1), d, Place::real);
    const bool s_minus = is_split_octonion(Rational(-1), d, Place::real);
    local_product *= s_plus == s_minus ? 1 : 2;
  }
  r.results() = {{"count", count.str()}, {"real_places", ramified.size()}};
  r.check("two_to_the_m", "the number of octonion embeddings is 2^m, m the number of real places where D ramifies",
          count == local_product, {{"local_product", local_product.str()}});
  return r;
}

// ---------------------------------------------------------------- wiring

struct Built {
  std::unique_ptr<CLI::App> app;
  std::map<CLI::App*, Handler> handlers;
};

Built build_app(Options& o) {
  Built b;
  b.app = std::make_unique<CLI::App>("Exact verification of octonion, Albert-algebra, branching and Satake identities",
                                     "albertkit");
  auto& app = *b.app;
  app.require_subcommand(1);
  app.fallthrough();  // --workers and --config may follow the subcommand
  app.add_option("--workers", o.workers, "threads for finite-field scans")->check(CLI::Range(1u, 256u));
  app.add_option("--config", "JSON file presetting flags; explicit flags win");

  auto leaf = [&](CLI::App* parent, const char* name, const char* desc, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    b.handlers[sub] = std::move(h);
    return sub;
  };

  auto* verify = app.add_subcommand("verify", "algebraic identity suites")->require_subcommand(1);
  auto* lk = leaf(verify, "lemma-key", "omega_1/omega_2/omega_3 scans over F_p", verify_lemma_key);
  lk->add_option("--p", o.p, "odd prime");
  lk->add_option("--lambda", o.lambda, "doubling parameter (integer, nonzero mod p)");
  lk->add_option("--signs", o.signs, "single sign pattern such as +-+");
  auto* comp = leaf(verify, "composition", "composition-algebra identities on random octonions", verify_composition);
  comp->add_option("--p", o.p, "odd prime for the finite-field samples");
  comp->add_option("--samples", o.samples, "pairs per ring");
  comp->add_option("--seed", o.seed);
  auto* alb = leaf(verify, "albert", "rank and cubic-norm identities on Albert elements", verify_albert);
  alb->add_option("--samples", o.samples, "random elements");
  alb->add_option("--seed", o.seed);
  alb->add_option("--element", o.element, "JSON file with an Albert element");

  auto* sph = app.add_subcommand("spherical", "spherical vectors")->require_subcommand(1);
  auto* padic = leaf(sph, "padic", "p-adic spherical vector on an integral rank-one element", spherical_padic_cmd);
  padic->add_option("--p", o.p, "prime");
  padic->add_option("--element", o.element, "JSON file with an integral Albert element (split model)");
  auto* real = leaf(sph, "real", "real spherical vector", spherical_real_cmd);
  real->add_option("--element", o.element, "JSON file with an Albert element (split model)");
  real->add_option("--t", o.t, "use the Cartan family element at t > 0");
  auto* bes = leaf(sph, "bessel-integral", "integral of u^{-3/2} K_{3/2}(u) over [2, inf)", spherical_bessel_cmd);
  bes->add_option("--tol", o.tol, "relative tolerance");

  auto* kt = app.add_subcommand("ktypes", "K-type combinatorics")->require_subcommand(1);
  leaf(kt, "restrict", "V_{n omega_4} under sl_4 + sl_4 + C h", ktypes_restrict_cmd)
      ->add_option("--n", o.n, "multiple of omega_4");
  leaf(kt, "theta1", "alpha = gamma criterion", ktypes_theta1_cmd)
      ->add_option("--alpha-max", o.alpha_max, "bound for alpha, beta, gamma");
  leaf(kt, "u6", "SU(2)-invariant U(6)-types", ktypes_u6_cmd)
      ->add_option("--n-max", o.n_max, "largest n (at most 4)");

  auto* sat = app.add_subcommand("satake", "Spin(7) classes and L-factors")->require_subcommand(1);
  auto add_class = [&](CLI::App* sub) {
    auto* c = sub->add_option("--class", o.class_coords, "spin-torus coordinates u1,u2,u3");
    auto* g = sub->add_option("--g2", o.g2_coords, "G2 class v1,v2 embedded as (v1, v2, v1 v2)");
    c->excludes(g);
  };
  auto* fac = leaf(sat, "factorize", "Spin = zeta * Std test", satake_factorize_cmd);
  add_class(fac);
  auto* lf = leaf(sat, "lfactor", "local L-factor", satake_lfactor_cmd);
  add_class(lf);
  lf->add_option("--rep", o.rep, "spin or std");
  lf->add_option("--q", o.q, "residue field size");
  lf->add_option("--s", o.s, "real part of s (rational)");
  lf->add_option("--s-im", o.s_im, "imaginary part of s");
  auto* bern = leaf(sat, "bernstein", "Bernstein-center element z", satake_bernstein_cmd);
  bern->add_option("--x", o.x, "nonzero rational");
  bern->add_option("--q", o.q, "residue field size");

  auto* oct = app.add_subcommand("octonion", "octonion algebras")->require_subcommand(1);
  auto* cnt = leaf(oct, "count-embeddings", "number of octonion algebras containing D", octonion_count_cmd);
  cnt->add_option("--ramified", o.ramified, "per real place: true if D is division there, e.g. true,false");
  cnt->add_option("--a", o.a, "D = (a, b) over Q");
  cnt->add_option("--b", o.b, "D = (a, b) over Q");
  return b;
}

CLI::App* active_leaf(CLI::App* app) {
  for (CLI::App* sub : app->get_subcommands()) {
    if (sub->parsed()) return active_leaf(sub);
  }
  return app;
}

std::vector<std::string> leaf_path(CLI::App* leaf) {
  std::vector<std::string> path;
  for (CLI::App* a = leaf; a->get_parent() != nullptr; a = a->get_parent()) path.insert(path.begin(), a->get_name());
  return path;
}

std::string config_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

// Appends "--key value" for every config entry the command line did not set. Keys
// may sit at the top level or under the subcommand path ({"verify": {"lemma-key": {...}}}).
void append_config(const json& cfg, CLI::App* leaf, std::vector<std::string>& args) {
  if (!cfg.is_object()) throw DomainError("config file must hold a JSON object");
  std::vector<const json*> scopes{&cfg};
  const json* node = &cfg;
  for (const auto& name : leaf_path(leaf)) {
    if (!node->contains(name) || !(*node)[name].is_object()) break;
    node = &(*node)[name];
    scopes.push_back(node);
  }
  std::map<std::string, std::string> chosen;  // deeper scopes win
  for (const json* scope : scopes) {
    for (const auto& [key, value] : scope->items()) {
      if (value.is_object()) continue;
      if (key == "config") continue;
      CLI::Option* opt = leaf->get_option_no_throw("--" + key);
      if (opt == nullptr) {
        for (CLI::App* a = leaf->get_parent(); a != nullptr && opt == nullptr; a = a->get_parent()) {
          opt = a->get_option_no_throw("--" + key);
        }
      }
      if (opt == nullptr) throw DomainError("config: unknown option \"" + key + "\" for this command");
      if (opt->count() == 0) chosen[key] = config_value(value);
    }
  }
  for (const auto& [key, value] : chosen) {
    args.push_back("--" + key);
    args.push_back(value);
  }
}

std::vector<std::string> reversed(const std::vector<std::string>& args) {
  return std::vector<std::string>(args.rbegin(), args.rend());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  Built built = build_app(o);
  CLI::App* leaf = nullptr;
  try {
    built.app->parse(reversed(args));
    leaf = active_leaf(built.app.get());
    if (auto* cfg_opt = built.app->get_option("--config"); cfg_opt->count() > 0) {
      std::vector<std::string> merged = args;
      append_config(read_json_file(cfg_opt->as<std::string>()), leaf, merged);
      o = Options{};
      built = build_app(o);
      built.app->parse(reversed(merged));
      leaf = active_leaf(built.app.get());
    }
  } catch (const CLI::CallForHelp& e) {
    built.app->exit(e, err, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    built.app->exit(e, err, err);
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto it = built.handlers.find(leaf);
  if (it == built.handlers.end()) {
    err << built.app->help();
    return 2;
  }
  try {
    Report report = it->second(o);
    report.finish();
    out << report.to_json().dump(2) << "\n";
    err << report.summary();
    return report.exit_code();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace albertkit::cli
