// Copyright 2026 The toribase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORIBASE_NUMSGP_HPP
#define TORIBASE_NUMSGP_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "toribase/binomial.hpp"
#include "toribase/errors.hpp"
#include "toribase/instance.hpp"

namespace toribase {

/// Minimally generated numerical semigroup: m >= 2 strictly increasing
/// generators with gcd 1, none in the semigroup of the others.
class NumericalSemigroup {
 public:
  NumericalSemigroup() = default;
  explicit NumericalSemigroup(std::vector<std::int64_t> gens);

  const std::vector<std::int64_t>& generators() const noexcept { return gens_; }
  std::size_t m() const noexcept { return gens_.size(); }
  std::int64_t operator[](std::size_t i) const { return gens_[i]; }

  ToricInstance instance() const {
    return ToricInstance::from_generators(gens_, InstanceOrigin::numsgp);
  }

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

 private:
  std::vector<std::int64_t> gens_;
};

namespace detail {

/// Cells allowed in the membership table before switching to residues.
inline constexpr std::int64_t kMembershipTableCap = 100'000'000;

/// Membership by a reachability table over 0..t, recording one generator
/// per reachable value. Coefficients are indexed like `gens`.
inline std::optional<std::vector<std::int64_t>> member_by_table(
    std::span<const std::int64_t> gens, std::int64_t t) {
  std::vector<int> via(static_cast<std::size_t>(t) + 1, -1);
  via[0] = static_cast<int>(gens.size());
  for (std::int64_t v = 1; v <= t; ++v) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (gens[j] <= v && via[static_cast<std::size_t>(v - gens[j])] >= 0) {
        via[static_cast<std::size_t>(v)] = static_cast<int>(j);
        break;
      }
    }
  }
  if (via[static_cast<std::size_t>(t)] < 0) return std::nullopt;
  std::vector<std::int64_t> coef(gens.size(), 0);
  for (std::int64_t v = t; v > 0;) {
    auto j = static_cast<std::size_t>(via[static_cast<std::size_t>(v)]);
    ++coef[j];
    v -= gens[j];
  }
  return coef;
}

/// Membership through the least element of the semigroup in each residue
/// class modulo the smallest generator (shortest paths on residues).
inline std::optional<std::vector<std::int64_t>> member_by_residues(
    std::span<const std::int64_t> gens, std::int64_t t) {
  std::size_t base = 0;
  for (std::size_t j = 1; j < gens.size(); ++j) {
    if (gens[j] < gens[base]) base = j;
  }
  const std::int64_t a = gens[base];
  constexpr auto inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(a), inf);
  std::vector<std::pair<std::int64_t, int>> pred(static_cast<std::size_t>(a), {-1, -1});
  using Item = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j == base) continue;
      const auto nd = checked::add(d, gens[j]);
      const auto nr = (r + gens[j]) % a;
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        pred[static_cast<std::size_t>(nr)] = {r, static_cast<int>(j)};
        pq.push({nd, nr});
      }
    }
  }
  const auto r = t % a;
  if (dist[static_cast<std::size_t>(r)] > t) return std::nullopt;
  std::vector<std::int64_t> coef(gens.size(), 0);
  coef[base] = (t - dist[static_cast<std::size_t>(r)]) / a;
  for (auto cur = r; cur != 0;) {
    auto [prev, j] = pred[static_cast<std::size_t>(cur)];
    ++coef[static_cast<std::size_t>(j)];
    cur = prev;
  }
  return coef;
}

}  // namespace detail

/// A decomposition t = sum c_j gens_j with c_j >= 0, if one exists. An
/// empty generator list contains only 0.
inline std::optional<std::vector<std::int64_t>> semigroup_member(
    std::span<const std::int64_t> gens, std::int64_t t) {
  if (t < 0) return std::nullopt;
  if (t == 0) return std::vector<std::int64_t>(gens.size(), 0);
  if (gens.empty()) return std::nullopt;
  for (auto g : gens) {
    if (g <= 0) throw ArgumentError("semigroup generators must be positive");
  }
  const auto cells = checked::mul(t + 1, 1);
  if (cells <= detail::kMembershipTableCap) return detail::member_by_table(gens, t);
  return detail::member_by_residues(gens, t);
}

/// The decomposition of t over `gens` that is largest in lexicographic
/// order of the coefficient vector (as many copies of gens[0] as possible,
/// then of gens[1], ...). Deterministic witness for certificates.
inline std::optional<std::vector<std::int64_t>> lex_max_decomposition(
    std::span<const std::int64_t> gens, std::int64_t t) {
  if (!semigroup_member(gens, t)) return std::nullopt;
  std::vector<std::int64_t> coef(gens.size(), 0);
  std::int64_t left = t;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto rest = gens.subspan(j + 1);
    for (std::int64_t c = left / gens[j]; c >= 0; --c) {
      if (semigroup_member(rest, left - c * gens[j])) {
        coef[j] = c;
        left -= c * gens[j];
        break;
      }
    }
  }
  return coef;
}

inline bool contains(const NumericalSemigroup& s, std::int64_t t) {
  return semigroup_member(s.generators(), t).has_value();
}

inline NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> gens)
    : gens_(std::move(gens)) {
  if (gens_.size() < 2) throw ArgumentError("a semigroup needs at least two generators");
  std::int64_t g = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i] <= 0) throw ArgumentError("generators must be positive");
    if (i > 0 && gens_[i] <= gens_[i - 1]) {
      throw ArgumentError("generators must be strictly increasing");
    }
    g = std::gcd(g, gens_[i]);
  }
  if (g != 1) throw ArgumentError("generators must have gcd 1");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    std::vector<std::int64_t> others;
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      if (j != i) others.push_back(gens_[j]);
    }
    if (semigroup_member(others, gens_[i])) {
      throw ArgumentError("generator " + std::to_string(gens_[i]) + " is redundant");
    }
  }
}

/// Divides by the gcd, sorts, drops repeated and redundant generators.
/// Returns the scale factor d and the normalized semigroup.
inline std::pair<std::int64_t, NumericalSemigroup> make_semigroup(
    std::vector<std::int64_t> raw) {
  if (raw.empty()) throw ArgumentError("empty generator list");
  std::int64_t d = 0;
  for (auto a : raw) {
    if (a <= 0) throw ArgumentError("generators must be positive");
    d = std::gcd(d, a);
  }
  for (auto& a : raw) a /= d;
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<std::int64_t> kept;
  for (auto a : raw) {
    // a can only be a combination of smaller generators
    if (!semigroup_member(kept, a)) kept.push_back(a);
  }
  if (kept.size() < 2) {
    throw ArgumentError("embedding dimension 1: the toric ideal is zero");
  }
  return {d, NumericalSemigroup(std::move(kept))};
}

/// Index of each value of `arrangement` in the semigroup's generators.
inline std::vector<std::size_t> arrangement_indices(const NumericalSemigroup& s,
                                                    std::span<const std::int64_t> arrangement) {
  if (arrangement.size() != s.m()) throw ArgumentError("arrangement has wrong length");
  std::vector<std::size_t> idx;
  std::vector<bool> used(s.m(), false);
  for (auto a : arrangement) {
    auto it = std::find(s.generators().begin(), s.generators().end(), a);
    if (it == s.generators().end()) throw ArgumentError("arrangement uses a non-generator");
    auto i = static_cast<std::size_t>(it - s.generators().begin());
    if (used[i]) throw ArgumentError("arrangement repeats a generator");
    used[i] = true;
    idx.push_back(i);
  }
  return idx;
}

struct FreeLevel {
  std::int64_t generator = 0;        // a_i (value)
  std::int64_t mu = 0;               // lcm(a_i, gcd of the later ones)
  std::int64_t beta = 0;             // mu / a_i
  std::vector<std::int64_t> alpha;   // mu = sum alpha_j a_j, indexed by generator
};

struct FreeCertificate {
  std::vector<std::int64_t> arrangement;
  std::vector<FreeLevel> levels;  // m - 1 levels
};

struct FreeCheck {
  std::optional<FreeCertificate> certificate;
  std::optional<std::size_t> failing_level;  // 0-based level of the first failure
};

/// Checks the lcm-membership condition at every level of `arrangement`.
inline FreeCheck free_for_arrangement(const NumericalSemigroup& s,
                                      std::span<const std::int64_t> arrangement) {
  const auto idx = arrangement_indices(s, arrangement);
  const std::size_t m = s.m();
  FreeCertificate cert;
  cert.arrangement.assign(arrangement.begin(), arrangement.end());
  for (std::size_t i = 0; i + 1 < m; ++i) {
    std::vector<std::int64_t> later(arrangement.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                    arrangement.end());
    std::int64_t g = 0;
    for (auto a : later) g = std::gcd(g, a);
    const std::int64_t a = arrangement[i];
    const std::int64_t mu = a / std::gcd(a, g) * g;
    auto dec = lex_max_decomposition(later, mu);
    if (!dec) return {std::nullopt, i};
    FreeLevel lv;
    lv.generator = a;
    lv.mu = mu;
    lv.beta = mu / a;
    lv.alpha.assign(m, 0);
    for (std::size_t j = 0; j < later.size(); ++j) lv.alpha[idx[i + 1 + j]] = (*dec)[j];
    cert.levels.push_back(std::move(lv));
  }
  return {std::move(cert), std::nullopt};
}

/// The lexicographically smallest arrangement (as a sequence of generator
/// values) for which the semigroup is free, with its certificate. The level
/// condition depends only on the current generator and the set after it,
/// so failing remainders are memoized.
inline std::optional<FreeCertificate> is_free(const NumericalSemigroup& s) {
  const std::size_t m = s.m();
  if (m > 20) throw ResourceLimitError("freeness search supports at most 20 generators");
  std::vector<bool> dead(std::size_t{1} << m, false);
  std::vector<std::int64_t> chosen;
  auto level_ok = [&](std::size_t i, std::uint32_t rest) {
    std::vector<std::int64_t> later;
    std::int64_t g = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if ((rest >> j) & 1u) {
        later.push_back(s[j]);
        g = std::gcd(g, s[j]);
      }
    }
    const std::int64_t mu = s[i] / std::gcd(s[i], g) * g;
    return semigroup_member(later, mu).has_value();
  };
  auto dfs = [&](auto&& self, std::uint32_t remaining) -> bool {
    if (__builtin_popcount(remaining) == 1) {
      chosen.push_back(s[static_cast<std::size_t>(__builtin_ctz(remaining))]);
      return true;
    }
    if (dead[remaining]) return false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((remaining >> i) & 1u)) continue;
      const auto rest = remaining & ~(1u << i);
      if (!level_ok(i, rest)) continue;
      chosen.push_back(s[i]);
      if (self(self, rest)) return true;
      chosen.pop_back();
    }
    dead[remaining] = true;
    return false;
  };
  if (!dfs(dfs, (1u << m) - 1)) return std::nullopt;
  return free_for_arrangement(s, chosen).certificate;
}

/// The m - 1 binomials x_i^beta_i - prod_j x_j^alpha_ij of a certificate.
inline BasisSet free_generators(const NumericalSemigroup& s, const FreeCertificate& cert) {
  const auto idx = arrangement_indices(s, cert.arrangement);
  std::vector<Binomial> out;
  for (std::size_t i = 0; i < cert.levels.size(); ++i) {
    ExponentVector lead(s.m(), 0);
    lead[idx[i]] = cert.levels[i].beta;
    out.emplace_back(std::move(lead), cert.levels[i].alpha);
  }
  return BasisSet(BasisKind::generators, std::move(out));
}

struct CriticalEntry {
  std::int64_t n = 0;                    // least b with b a_i in the others' semigroup
  std::vector<std::int64_t> witness;     // coefficients over all generators, 0 at i
};

using CriticalData = std::vector<CriticalEntry>;

inline CriticalData critical_exponents(const NumericalSemigroup& s) {
  CriticalData out;
  for (std::size_t i = 0; i < s.m(); ++i) {
    std::vector<std::int64_t> others;
    for (std::size_t j = 0; j < s.m(); ++j) {
      if (j != i) others.push_back(s[j]);
    }
    for (std::int64_t b = 1;; ++b) {
      auto dec = lex_max_decomposition(others, checked::mul(b, s[i]));
      if (!dec) continue;
      CriticalEntry e;
      e.n = b;
      e.witness.assign(s.m(), 0);
      for (std::size_t j = 0, k = 0; j < s.m(); ++j) {
        if (j != i) e.witness[j] = (*dec)[k++];
      }
      out.push_back(std::move(e));
      break;
    }
  }
  return out;
}

/// q_ij = x_i^(a_j/g) - x_j^(a_i/g), g = gcd(a_i, a_j), for all i < j.
inline BasisSet semigroup_circuits(const NumericalSemigroup& s) {
  std::vector<Binomial> out;
  for (std::size_t i = 0; i < s.m(); ++i) {
    for (std::size_t j = i + 1; j < s.m(); ++j) {
      const auto g = std::gcd(s[i], s[j]);
      ExponentVector u(s.m(), 0), v(s.m(), 0);
      u[i] = s[j] / g;
      v[j] = s[i] / g;
      out.emplace_back(std::move(u), std::move(v));
    }
  }
  return BasisSet(BasisKind::circuits, std::move(out));
}

struct UniqueBettiShape {
  bool value = false;
  std::vector<std::int64_t> d;  // a_i = (prod d) / d_i when value holds
};

/// Shape test: a_i = D / d_i with D = prod d_j and d_j >= 2 pairwise
/// coprime. Then D^(m-1) = prod a_i, so D is an integer root.
inline UniqueBettiShape has_unique_betti(const NumericalSemigroup& s) {
  UniqueBettiShape res;
  mpz_class prod = 1;
  for (auto a : s.generators()) prod *= a;
  mpz_class root;
  const auto k = static_cast<unsigned long>(s.m() - 1);
  if (mpz_root(root.get_mpz_t(), prod.get_mpz_t(), k) == 0) return res;
  std::vector<mpz_class> d;
  for (auto a : s.generators()) {
    if (root % a != 0) return res;
    mpz_class q = root / a;
    if (q < 2) return res;
    d.push_back(q);
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      if (g != 1) return res;
    }
  }
  res.value = true;
  for (const auto& q : d) res.d.push_back(q.get_si());
  return res;
}

/// Betti degrees (scalars) form a divisibility chain once sorted.
inline bool betti_divisible(std::vector<std::int64_t> degrees) {
  std::sort(degrees.begin(), degrees.end());
  for (std::size_t i = 0; i + 1 < degrees.size(); ++i) {
    if (degrees[i + 1] % degrees[i] != 0) return false;
  }
  return true;
}

}  // namespace toribase

#endif  // TORIBASE_NUMSGP_HPP
