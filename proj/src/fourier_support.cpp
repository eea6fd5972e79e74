#include "albertkit/fourier_support.hpp"

#include <algorithm>
#include <set>

#include "albertkit/parallel.hpp"

namespace albertkit {
namespace {

using Q = Quaternion<Fp>;
using O = Octonion<Fp>;
using A = AlbertElement<Fp>;

struct ScanContext {
  PrimeField field;
  QuaternionAlgebra<Fp> alg;
  Fp lambda;
  std::vector<Q> all;  // lexicographic

  ScanContext(std::uint32_t p, std::int64_t lam)
      : field(p), alg(QuaternionAlgebra<Fp>::matrix2(field.one())), lambda(field(lam)) {
    if (lambda.value() == 0) throw DomainError("lambda must be nonzero mod p");
    all = enumerate_quaternions(alg);
  }

  // Quaternions of the given norm, in lexicographic order.
  std::vector<Q> with_norm(Fp n) const {
    std::vector<Q> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out),
                 [&](const Q& q) { return q.norm() == n; });
    return out;
  }

  O pure(const Q& d) const { return O(Q::zero(alg), d, lambda); }
};

A assemble(const A& target, const O& x, const O& y, const O& z) {
  return A(target.diag(), {x, y, z});
}

}  // namespace

OmegaSlice omega_enumerate(const CharacterTarget& target, std::uint32_t p, std::int64_t lambda,
                           unsigned workers) {
  ScanContext ctx(p, lambda);
  const A t = target.element(ctx.alg, ctx.lambda);
  const Fp alpha = t.alpha(), beta = t.beta(), gamma = t.gamma();

  // N((0, d)) = -lambda N(d); the diagonal of sharp vanishes iff
  // N(a) = -alpha beta / lambda, N(b) = -beta gamma / lambda, N(c) = -gamma alpha / lambda.
  const Fp inv = ctx.lambda.inverse();
  const auto xs = ctx.with_norm(-(alpha * beta) * inv);
  const auto ys = ctx.with_norm(-(beta * gamma) * inv);
  const auto zs = ctx.with_norm(-(gamma * alpha) * inv);

  auto scan = [&](std::size_t begin, std::size_t end) {
    std::vector<A> found;
    for (std::size_t i = begin; i < end; ++i) {
      const O x = ctx.pure(xs[i]);
      for (const Q& b : ys) {
        const O y = ctx.pure(b);
        for (const Q& c : zs) {
          A candidate = assemble(t, x, y, ctx.pure(c));
          if (sharp(candidate).is_zero()) found.push_back(std::move(candidate));
        }
      }
    }
    return found;
  };

  OmegaSlice slice{target, p, ctx.lambda, parallel_collect(xs.size(), workers, scan)};
  return slice;
}

std::vector<AlbertElement<Fp>> omega1_reduced(int sign, std::uint32_t p, std::int64_t lambda) {
  ScanContext ctx(p, lambda);
  const A t = CharacterTarget(1, {sign, 1, 1}).element(ctx.alg, ctx.lambda);
  const auto isotropic = ctx.with_norm(ctx.field.zero());
  const O y = O::zero(ctx.alg, ctx.lambda);
  std::vector<A> out;
  for (const Q& a : isotropic) {
    for (const Q& c : isotropic) {
      if ((a * c.conj()).is_zero()) out.push_back(assemble(t, ctx.pure(a), y, ctx.pure(c)));
    }
  }
  return out;
}

bool reproduces_target(const AlbertElement<Fp>& a, const CharacterTarget& target) {
  const auto& alg = a.algebra();
  const Fp& lambda = a.lambda();
  const A t = target.element(alg, lambda);
  std::vector<A> basis;
  for (int i = 0; i < 3; ++i) basis.push_back(A::idempotent(alg, lambda, i));
  const Fp zero = alg.zero(), one = alg.one();
  for (int slot = 0; slot < 3; ++slot) {
    for (int k = 0; k < 4; ++k) {
      std::array<Fp, 4> e{zero, zero, zero, zero};
      e[k] = one;
      std::array<O, 3> off{O::zero(alg, lambda), O::zero(alg, lambda), O::zero(alg, lambda)};
      off[slot] = O(Q(alg, e), Q::zero(alg), lambda);
      basis.emplace_back(std::array<Fp, 3>{zero, zero, zero}, off);
    }
  }
  return std::all_of(basis.begin(), basis.end(),
                     [&](const A& b) { return trace_pair(a, b) == trace_pair(t, b); });
}

namespace {

OrbitReport orbit_of_slice(const OmegaSlice& slice, std::int64_t lambda) {
  if (slice.elements.empty()) {
    throw DomainError("orbit_transitive: omega_2 slice for signs " + slice.target.label() +
                      " is empty over F_" + std::to_string(slice.p));
  }
  ScanContext ctx(slice.p, lambda);
  const auto group = ctx.with_norm(ctx.field.one());

  using Key = std::array<Fp, 27>;
  std::set<Key> members;
  for (const auto& e : slice.elements) members.insert(e.coordinates());

  std::set<Key> orbit;
  bool closed = true;
  const A& base = slice.elements.front();
  for (const Q& g : group) {
    Key k = d1_act(g, base).coordinates();
    if (!members.count(k)) closed = false;
    orbit.insert(k);
  }

  OrbitReport r;
  r.orbit_size = orbit.size();
  r.group_size = group.size();
  r.slice_size = slice.elements.size();
  r.free = r.orbit_size == r.group_size;
  r.transitive = closed && r.orbit_size == r.slice_size;
  return r;
}

}  // namespace

OrbitReport orbit_transitive(std::uint32_t p, std::int64_t lambda, std::array<int, 2> signs,
                             unsigned workers) {
  const CharacterTarget target(2, {signs[0], signs[1], 1});
  return orbit_of_slice(omega_enumerate(target, p, lambda, workers), lambda);
}

std::size_t LemmaKeyReport::omega3_total() const {
  std::size_t n = 0;
  for (const auto& c : omega3) n += c.count;
  return n;
}

bool LemmaKeyReport::omega2_counts_match() const {
  return std::all_of(omega2.begin(), omega2.end(),
                     [&](const Omega2Case& c) { return c.count == expected_omega2(); });
}

bool LemmaKeyReport::torsor() const {
  return std::all_of(omega2.begin(), omega2.end(),
                     [](const Omega2Case& c) { return c.orbit.torsor() && c.y_z_zero; });
}

std::size_t LemmaKeyReport::omega1_full_total() const {
  std::size_t n = 0;
  for (const auto& c : omega1) n += c.full;
  return n;
}

std::size_t LemmaKeyReport::omega1_reduced_total() const {
  std::size_t n = 0;
  for (const auto& c : omega1) n += c.reduced;
  return n;
}

bool LemmaKeyReport::omega1_agree() const {
  return std::all_of(omega1.begin(), omega1.end(), [](const Omega1Case& c) {
    return c.sets_equal && c.full == c.reduced && c.y_slot_zero;
  });
}

bool LemmaKeyReport::passed() const {
  return omega3_empty() && omega2_counts_match() && torsor() && omega1_agree() && round_trip;
}

LemmaKeyReport check_lemma_key(std::uint32_t p, std::int64_t lambda,
                               std::optional<std::array<int, 3>> signs, unsigned workers) {
  LemmaKeyReport report;
  report.p = p;
  report.lambda = lambda;

  std::vector<std::array<int, 3>> triples;
  if (signs) {
    triples.push_back(*signs);
  } else {
    for (int s0 : {1, -1})
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) triples.push_back({s0, s1, s2});
  }

  auto already = [](const auto& cases, const CharacterTarget& t) {
    return std::any_of(cases.begin(), cases.end(), [&](const auto& c) { return c.target == t; });
  };
  auto check_round_trip = [&](const OmegaSlice& s) {
    for (const auto& e : s.elements) {
      if (!reproduces_target(e, s.target) || rank(e) != 1) report.round_trip = false;
    }
  };

  for (const auto& s : triples) {
    CharacterTarget t3(3, s);
    if (!already(report.omega3, t3)) {
      OmegaSlice slice = omega_enumerate(t3, p, lambda, workers);
      check_round_trip(slice);
      report.omega3.push_back({t3, slice.elements.size()});
    }

    CharacterTarget t2(2, s);
    if (!already(report.omega2, t2)) {
      OmegaSlice slice = omega_enumerate(t2, p, lambda, workers);
      check_round_trip(slice);
      Omega2Case c{t2, slice.elements.size(), {}, true};
      for (const auto& e : slice.elements) {
        if (!e.y().is_zero() || !e.z().is_zero()) c.y_z_zero = false;
      }
      if (!slice.elements.empty()) c.orbit = orbit_of_slice(slice, lambda);
      report.omega2.push_back(c);
    }

    CharacterTarget t1(1, s);
    if (!already(report.omega1, t1)) {
      OmegaSlice slice = omega_enumerate(t1, p, lambda, workers);
      check_round_trip(slice);
      auto reduced = omega1_reduced(s[0], p, lambda);
      Omega1Case c{t1, slice.elements.size(), reduced.size(), slice.elements == reduced, true};
      for (const auto& e : slice.elements) {
        if (!e.y().is_zero()) c.y_slot_zero = false;
      }
      report.omega1.push_back(c);
    }
  }
  return report;
}

bool omega2_global_member(const AlbertElement<Rational>& a, const Rational& lambda) {
  if (!(a.lambda() == lambda)) {
    throw DomainError("omega2_global_member: element built with a different lambda");
  }
  auto is_sign = [](const Rational& r) { return r == 1 || r == -1; };
  if (!is_sign(a.alpha()) || !is_sign(a.beta()) || a.gamma() != 0) return false;
  if (!a.y().is_zero() || !a.z().is_zero()) return false;
  if (!a.x().first().is_zero()) return false;
  if (rank(a) != 1) return false;
  return lambda * a.x().second().norm() == -(a.alpha() * a.beta());
}

bool hamilton_isotropic_only_zero(int bound) {
  auto alg = QuaternionAlgebra<Rational>::symbol(Rational(-1), Rational(-1));
  for (int w = -bound; w <= bound; ++w)
    for (int x = -bound; x <= bound; ++x)
      for (int y = -bound; y <= bound; ++y)
        for (int z = -bound; z <= bound; ++z) {
          Quaternion<Rational> q(alg, {Rational(w), Rational(x), Rational(y), Rational(z)});
          if (q.norm() == 0 && !q.is_zero()) return false;
        }
  return true;
}

}  // namespace albertkit
