#pragma once

// Highest-weight bookkeeping for GL(n)/SU(n): Weyl dimensions, Gelfand-Zetlin
// branching, block restrictions, Pieri's rule for exterior powers, and the
// K-type combinatorics of V_{n omega_4} under SU(4) x SU(4) and U(6).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "albertkit/scalars.hpp"

namespace albertkit {

// Non-increasing integer tuple.
class HighestWeight {
 public:
  HighestWeight() = default;
  explicit HighestWeight(std::vector<int> entries);

  const std::vector<int>& entries() const { return w_; }
  std::size_t size() const { return w_.size(); }
  int operator[](std::size_t i) const { return w_[i]; }
  int total() const;

  // The same weight with c added to every entry (a determinant twist).
  HighestWeight shifted(int c) const;

  std::string str() const;

  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;

 private:
  std::vector<int> w_;
};

// SU(4) highest weight x >= y >= z >= u >= 0; the class modulo (1,1,1,1) is fixed by
// the gaps (alpha, beta, gamma) = (x - y, y - z, z - u).
struct MuQuadruple {
  int x = 0, y = 0, z = 0, u = 0;

  MuQuadruple() = default;
  MuQuadruple(int x_, int y_, int z_, int u_);
  static MuQuadruple from_gaps(int alpha, int beta, int gamma, int u = 0);

  int alpha() const { return x - y; }
  int beta() const { return y - z; }
  int gamma() const { return z - u; }
  int sum() const { return x + y + z + u; }
  HighestWeight weight() const { return HighestWeight({x, y, z, u}); }

  friend auto operator<=>(const MuQuadruple&, const MuQuadruple&) = default;
};

struct ComponentTriple {
  MuQuadruple mu;
  int m = 0;  // eigenvalue of h = diag(1,1,1,1,-1,-1,-1,-1)/2
  int multiplicity = 1;

  friend bool operator==(const ComponentTriple&, const ComponentTriple&) = default;
};

// prod_{i<j} (w_i - w_j + j - i) / (j - i).
Integer weyl_dim(const HighestWeight& w);

// All GL(n-1) weights interlacing w (each with multiplicity one).
std::vector<HighestWeight> branch_step(const HighestWeight& w);

// Formal character: torus weight -> multiplicity, from Gelfand-Zetlin patterns.
using Character = std::map<std::vector<int>, std::int64_t>;
Character gz_character(const HighestWeight& w);

struct BlockComponent {
  HighestWeight first;   // GL(p) on the first p coordinates
  HighestWeight second;  // GL(q) on the last q coordinates
  std::int64_t multiplicity = 0;

  friend bool operator==(const BlockComponent&, const BlockComponent&) = default;
};

// Restriction of the GL(p+q) irreducible w to GL(p) x GL(q) by iterating
// branch_step from level p+q down to level p and decomposing the GL(q) character
// carried by the partial patterns.
std::vector<BlockComponent> restrict_block(const HighestWeight& w, std::size_t p);

// (n, n, n, n, 0, 0, 0, 0).
HighestWeight n_omega4(int n);

// Components of V_{n omega_4} under sl_4 + sl_4 + C h: one per n >= x >= y >= z >= u >= 0,
// with m = x + y + z + u - 2n.
std::vector<ComponentTriple> restrict_nomega4(int n);

// Partitions (padded to `rows` entries) obtained by adding a vertical strip of k boxes.
std::vector<std::vector<int>> pieri_vertical(const std::vector<int>& partition, int k);

// {k : V_{k omega_4} occurs in V_{omega_4} (x) V_{n omega_4}} via Pieri's rule on
// (n, n, n, n) in 8 rows, modulo full columns.
std::set<int> tensor_omega4_components(int n);

struct KTypeVerdict {
  int alpha = 0, beta = 0, gamma = 0;
  bool parity_fired = false;  // alpha + gamma odd: not a type of Pi(0)
  bool e_side_fired = false;  // alpha >= gamma + 2
  bool f_side_fired = false;  // gamma >= alpha + 2
  std::optional<int> e_side_n;  // n with x = n and m = -2 when the e-side fires
  std::optional<int> f_side_n;  // n with u = 0 and m = +2 when the f-side fires
  bool allowed = false;

  bool consistent() const { return allowed == (alpha == gamma); }
};

KTypeVerdict theta1_ktype_allowed(int alpha, int beta, int gamma);

// flag[n] = 1 iff some representative (x, y, z, u) of the class with gaps
// (alpha, beta, gamma) satisfies n >= x >= ... >= u >= 0 and x + y + z + u - 2n = m.
std::vector<int> occurrence_count(const MuQuadruple& mu, int m, int n_max);

// First n with flag[n] = 1, if any up to n_max.
std::optional<int> first_occurrence(const MuQuadruple& mu, int m, int n_max);

struct U6Types {
  int n = 0;
  std::vector<std::pair<HighestWeight, std::int64_t>> types;  // normalized, sorted
  bool multiplicity_free = false;
  bool shape_ok = false;  // every type is (x, x, 0, 0, y, y) with x >= 0 >= y
};

// SU(2)-invariant part of V_{n omega_4} restricted to SU(2) x U(6) (2 + 6 block),
// each U(6) weight shifted so that positions 3 and 4 vanish. n_max <= 4.
std::vector<U6Types> su2_invariant_u6_types(int n_max);

}  // namespace albertkit
