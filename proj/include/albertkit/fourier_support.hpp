#pragma once

// Finite-field enumeration of the sets omega_1, omega_2, omega_3: rank-one
// elements whose J_D-component under the trace pairing is a signed diagonal
// character target. The complement of J_D is spanned by off-diagonal octonions
// (0, d), so a slice element is target + ((0, a), (0, b), (0, c)) with a, b, c in D.

#include <cstdint>
#include <optional>
#include <vector>

#include "albertkit/albert.hpp"

namespace albertkit {

struct OmegaSlice {
  CharacterTarget target;
  std::uint32_t p;
  Fp lambda;
  std::vector<AlbertElement<Fp>> elements;  // lexicographic in (a, b, c)
};

// Exhaustive scan of D(F_p)^3 for the rank-one condition sharp(A) = 0. The loop
// over each slot is restricted to the quaternions whose norm makes the matching
// diagonal component of sharp(A) vanish; every other candidate already has a
// nonzero sharp component, so the scan is equivalent to testing all p^12 triples.
// D is the split matrix algebra, the only quaternion algebra over F_p.
OmegaSlice omega_enumerate(const CharacterTarget& target, std::uint32_t p, std::int64_t lambda,
                           unsigned workers = 1);

// The psi_1 slice from its reduced description: b = 0, N(a) = N(c) = 0 and
// a conj(c) = 0. Built from quaternion arithmetic alone.
std::vector<AlbertElement<Fp>> omega1_reduced(int sign, std::uint32_t p, std::int64_t lambda);

// Checks that trace pairing against the 15 basis vectors of J_D reproduces the target.
bool reproduces_target(const AlbertElement<Fp>& a, const CharacterTarget& target);

struct OrbitReport {
  bool transitive = false;  // the orbit is the whole slice
  bool free = false;        // trivial stabilizer: orbit size == |D^1(F_p)|
  std::size_t orbit_size = 0;
  std::size_t group_size = 0;
  std::size_t slice_size = 0;

  bool torsor() const { return transitive && free; }
};

// D^1(F_p) acting by a -> a conj(g) on the psi_2 slice with signs (e1, e2).
OrbitReport orbit_transitive(std::uint32_t p, std::int64_t lambda, std::array<int, 2> signs,
                             unsigned workers = 1);

struct Omega3Case {
  CharacterTarget target;
  std::size_t count = 0;
};
struct Omega2Case {
  CharacterTarget target;
  std::size_t count = 0;
  OrbitReport orbit;
  bool y_z_zero = false;  // every element has y = z = 0
};
struct Omega1Case {
  CharacterTarget target;
  std::size_t full = 0;
  std::size_t reduced = 0;
  bool sets_equal = false;
  bool y_slot_zero = false;
};

struct LemmaKeyReport {
  std::uint32_t p = 0;
  std::int64_t lambda = 0;
  std::vector<Omega3Case> omega3;
  std::vector<Omega2Case> omega2;
  std::vector<Omega1Case> omega1;
  bool round_trip = true;  // every scanned element reproduces its target

  std::size_t expected_omega2() const { return std::size_t{p} * (std::size_t{p} * p - 1); }
  std::size_t omega3_total() const;
  bool omega3_empty() const { return omega3_total() == 0; }
  bool omega2_counts_match() const;
  bool torsor() const;
  std::size_t omega1_full_total() const;
  std::size_t omega1_reduced_total() const;
  bool omega1_agree() const;
  bool passed() const;
};

// Runs the omega scans for one sign triple (psi_3 uses all three signs, psi_2 the
// first two, psi_1 the first), or for every sign pattern when `signs` is empty.
LemmaKeyReport check_lemma_key(std::uint32_t p, std::int64_t lambda,
                               std::optional<std::array<int, 3>> signs = std::nullopt,
                               unsigned workers = 1);

// Rational membership in omega_2: gamma = 0, y = z = 0, diagonal (e1, e2, 0) with
// e_i = +-1, x = (0, a), rank one, and lambda N(a) = -e1 e2.
bool omega2_global_member(const AlbertElement<Rational>& a, const Rational& lambda);

// Over the rationals with D = Hamilton's quaternions: N(a) = 0 forces a = 0. Checks
// every a with integer coordinates in [-bound, bound].
bool hamilton_isotropic_only_zero(int bound);

}  // namespace albertkit
