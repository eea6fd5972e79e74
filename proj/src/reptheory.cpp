#include "albertkit/reptheory.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace albertkit {

HighestWeight::HighestWeight(std::vector<int> entries) : w_(std::move(entries)) {
  for (std::size_t i = 1; i < w_.size(); ++i) {
    if (w_[i] > w_[i - 1]) throw DomainError("highest weight must be non-increasing: " + str());
  }
}

int HighestWeight::total() const { return std::accumulate(w_.begin(), w_.end(), 0); }

HighestWeight HighestWeight::shifted(int c) const {
  std::vector<int> v = w_;
  for (int& e : v) e += c;
  return HighestWeight(std::move(v));
}

std::string HighestWeight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s + ")";
}

MuQuadruple::MuQuadruple(int x_, int y_, int z_, int u_) : x(x_), y(y_), z(z_), u(u_) {
  if (!(x >= y && y >= z && z >= u && u >= 0)) {
    throw DomainError("quadruple must satisfy x >= y >= z >= u >= 0");
  }
}

MuQuadruple MuQuadruple::from_gaps(int alpha, int beta, int gamma, int u) {
  if (alpha < 0 || beta < 0 || gamma < 0) throw DomainError("gaps must be non-negative");
  return MuQuadruple(u + alpha + beta + gamma, u + beta + gamma, u + gamma, u);
}

Integer weyl_dim(const HighestWeight& w) {
  Integer num = 1, den = 1;
  const auto& e = w.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      num *= Integer(e[i] - e[j] + static_cast<int>(j - i));
      den *= Integer(static_cast<int>(j - i));
    }
  }
  return num / den;
}

namespace {

// Calls fn on every row interlacing `row` (length one less).
void for_each_interlacing(const std::vector<int>& row,
                          const std::function<void(const std::vector<int>&)>& fn) {
  const std::size_t k = row.size() - 1;
  std::vector<int> next(k);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      fn(next);
      return;
    }
    for (int v = row[i]; v >= row[i + 1]; --v) {
      next[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

int row_sum(const std::vector<int>& r) { return std::accumulate(r.begin(), r.end(), 0); }

}  // namespace

std::vector<HighestWeight> branch_step(const HighestWeight& w) {
  if (w.size() < 2) throw DomainError("branch_step needs GL(n) with n >= 2");
  std::vector<HighestWeight> out;
  for_each_interlacing(w.entries(), [&](const std::vector<int>& r) { out.emplace_back(r); });
  std::sort(out.begin(), out.end());
  return out;
}

Character gz_character(const HighestWeight& w) {
  Character ch;
  const std::size_t n = w.size();
  if (n == 0) {
    ch[{}] = 1;
    return ch;
  }
  std::vector<int> weight(n);
  // Weight coordinate k is |row_k| - |row_{k-1}|, rows indexed by level.
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& row) {
    const std::size_t level = row.size();
    if (level == 1) {
      weight[0] = row[0];
      ++ch[weight];
      return;
    }
    const int s = row_sum(row);
    for_each_interlacing(row, [&](const std::vector<int>& next) {
      weight[level - 1] = s - row_sum(next);
      rec(next);
    });
  };
  rec(w.entries());
  return ch;
}

namespace {

// Peels irreducible GL(q) characters off `ch` from the lexicographically largest
// weight down.
std::vector<std::pair<HighestWeight, std::int64_t>> decompose(Character ch,
                                                              std::map<HighestWeight, Character>& cache) {
  std::vector<std::pair<HighestWeight, std::int64_t>> out;
  while (true) {
    auto it = std::find_if(ch.rbegin(), ch.rend(), [](const auto& kv) { return kv.second != 0; });
    if (it == ch.rend()) break;
    const std::int64_t mult = it->second;
    if (mult < 0) throw std::logic_error("character decomposition produced a negative multiplicity");
    HighestWeight top(it->first);
    auto [cit, inserted] = cache.try_emplace(top);
    if (inserted) cit->second = gz_character(top);
    for (const auto& [wt, c] : cit->second) ch[wt] -= mult * c;
    out.emplace_back(top, mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<BlockComponent> restrict_block(const HighestWeight& w, std::size_t p) {
  const std::size_t total = w.size();
  if (p == 0 || p >= total) throw DomainError("restrict_block needs 0 < p < n");
  const std::size_t q = total - p;

  std::map<HighestWeight, Character> partial;  // level-p row -> GL(q) character
  std::vector<int> weight(q);
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& row) {
    const std::size_t level = row.size();
    if (level == p) {
      ++partial[HighestWeight(row)][weight];
      return;
    }
    const int s = row_sum(row);
    for_each_interlacing(row, [&](const std::vector<int>& next) {
      weight[level - 1 - p] = s - row_sum(next);
      rec(next);
    });
  };
  rec(w.entries());

  std::map<HighestWeight, Character> cache;
  std::vector<BlockComponent> out;
  for (auto& [first, ch] : partial) {
    for (auto& [second, mult] : decompose(std::move(ch), cache)) {
      out.push_back({first, second, mult});
    }
  }
  return out;
}

HighestWeight n_omega4(int n) {
  if (n < 0) throw DomainError("n must be non-negative");
  return HighestWeight({n, n, n, n, 0, 0, 0, 0});
}

std::vector<ComponentTriple> restrict_nomega4(int n) {
  if (n < 0) throw DomainError("n must be non-negative");
  std::vector<ComponentTriple> out;
  for (int x = n; x >= 0; --x)
    for (int y = x; y >= 0; --y)
      for (int z = y; z >= 0; --z)
        for (int u = z; u >= 0; --u) {
          out.push_back({MuQuadruple(x, y, z, u), x + y + z + u - 2 * n, 1});
        }
  std::sort(out.begin(), out.end(), [](const ComponentTriple& a, const ComponentTriple& b) {
    return a.mu < b.mu;
  });
  return out;
}

std::vector<std::vector<int>> pieri_vertical(const std::vector<int>& partition, int k) {
  const std::size_t rows = partition.size();
  std::vector<std::vector<int>> out;
  std::vector<int> current = partition;
  // Choose k distinct rows; the result must stay non-increasing.
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      if (std::is_sorted(current.rbegin(), current.rend())) out.push_back(current);
      return;
    }
    for (std::size_t r = start; r + static_cast<std::size_t>(left) <= rows; ++r) {
      ++current[r];
      rec(r + 1, left - 1);
      --current[r];
    }
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> tensor_omega4_components(int n) {
  if (n < 0) throw DomainError("n must be non-negative");
  std::set<int> ks;
  for (auto shape : pieri_vertical(n_omega4(n).entries(), 4)) {
    const int full_columns = shape.back();
    for (int& e : shape) e -= full_columns;
    const int k = shape[0];
    if (shape == n_omega4(k).entries()) ks.insert(k);
  }
  return ks;
}

std::vector<int> occurrence_count(const MuQuadruple& mu, int m, int n_max) {
  std::vector<int> flags(static_cast<std::size_t>(std::max(n_max + 1, 0)), 0);
  for (int n = 0; n <= n_max; ++n) {
    for (int u = 0; u <= n; ++u) {
      MuQuadruple rep = MuQuadruple::from_gaps(mu.alpha(), mu.beta(), mu.gamma(), u);
      if (rep.x <= n && rep.sum() - 2 * n == m) {
        flags[static_cast<std::size_t>(n)] = 1;
        break;
      }
    }
  }
  return flags;
}

std::optional<int> first_occurrence(const MuQuadruple& mu, int m, int n_max) {
  auto flags = occurrence_count(mu, m, n_max);
  for (int n = 0; n <= n_max; ++n) {
    if (flags[static_cast<std::size_t>(n)]) return n;
  }
  return std::nullopt;
}

KTypeVerdict theta1_ktype_allowed(int alpha, int beta, int gamma) {
  if (alpha < 0 || beta < 0 || gamma < 0) throw DomainError("gaps must be non-negative");
  KTypeVerdict v;
  v.alpha = alpha;
  v.beta = beta;
  v.gamma = gamma;

  // In Pi(0): 4u + alpha + 2 beta + 3 gamma = 2n forces alpha + gamma even.
  v.parity_fired = (alpha + gamma) % 2 != 0;

  // e-side: (x,y,z,u) = (n, n - alpha, n - alpha - beta, n - alpha - beta - gamma) at
  // h-eigenvalue -2 means 2n = 3 alpha + 2 beta + gamma - 2, and u >= 0 means
  // n >= alpha + beta + gamma.
  const int twice_n_e = 3 * alpha + 2 * beta + gamma - 2;
  if (twice_n_e >= 0 && twice_n_e % 2 == 0 && twice_n_e / 2 >= alpha + beta + gamma) {
    v.e_side_fired = true;
    v.e_side_n = twice_n_e / 2;
  }
  // f-side: (x,y,z,u) = (alpha + beta + gamma, beta + gamma, gamma, 0) at eigenvalue +2
  // means 2n = alpha + 2 beta + 3 gamma - 2, and x <= n means n >= alpha + beta + gamma.
  const int twice_n_f = alpha + 2 * beta + 3 * gamma - 2;
  if (twice_n_f >= 0 && twice_n_f % 2 == 0 && twice_n_f / 2 >= alpha + beta + gamma) {
    v.f_side_fired = true;
    v.f_side_n = twice_n_f / 2;
  }

  v.allowed = !v.parity_fired && !v.e_side_fired && !v.f_side_fired;
  return v;
}

std::vector<U6Types> su2_invariant_u6_types(int n_max) {
  if (n_max > 4) throw DomainError("su2_invariant_u6_types: n_max is capped at 4");
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  std::vector<U6Types> out;
  for (int n = 0; n <= n_max; ++n) {
    std::map<HighestWeight, std::int64_t> types;
    for (const auto& c : restrict_block(n_omega4(n), 2)) {
      if (c.first[0] != c.first[1]) continue;  // not SU(2)-invariant
      const auto& w = c.second;
      if (w[2] != w[3]) throw std::logic_error("U(6) weight with distinct middle entries: " + w.str());
      types[w.shifted(-w[2])] += c.multiplicity;
    }
    U6Types t;
    t.n = n;
    t.types.assign(types.begin(), types.end());
    t.multiplicity_free = std::all_of(t.types.begin(), t.types.end(),
                                      [](const auto& kv) { return kv.second == 1; });
    t.shape_ok = std::all_of(t.types.begin(), t.types.end(), [](const auto& kv) {
      const auto& w = kv.first;
      return w[0] == w[1] && w[2] == 0 && w[3] == 0 && w[4] == w[5] && w[0] >= 0 && w[4] <= 0;
    });
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace albertkit
