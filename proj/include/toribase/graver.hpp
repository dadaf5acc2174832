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

#ifndef TORIBASE_GRAVER_HPP
#define TORIBASE_GRAVER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <tuple>
#include <vector>

#include "toribase/binomial.hpp"
#include "toribase/errors.hpp"
#include "toribase/groebner.hpp"
#include "toribase/instance.hpp"
#include "toribase/lattice.hpp"
#include "toribase/order.hpp"
#include "toribase/saturation.hpp"

namespace toribase {

namespace detail {

/// A lattice vector with sign masks (variable j maps to bit j mod 64; the
/// folding keeps mask inclusion a necessary condition for conformality).
struct MaskedVector {
  KernelVector v;
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  std::int64_t norm = 0;

  explicit MaskedVector(KernelVector x) : v(std::move(x)) { refresh(); }

  void refresh() {
    pos = neg = 0;
    norm = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      const auto bit = std::uint64_t{1} << (j % 64);
      if (v[j] > 0) pos |= bit;
      if (v[j] < 0) neg |= bit;
      norm = checked::add(norm, v[j] < 0 ? -v[j] : v[j]);
    }
  }
  bool zero() const { return norm == 0; }
};

/// g conformal to v (g ⊑ v): same sign pattern where g is nonzero and
/// |g_j| <= |v_j|. `flip` tests -g instead of g.
inline bool conformal(const MaskedVector& g, const MaskedVector& v, bool flip) {
  const auto gp = flip ? g.neg : g.pos;
  const auto gn = flip ? g.pos : g.neg;
  if ((gp & ~v.pos) != 0 || (gn & ~v.neg) != 0) return false;
  if (g.norm > v.norm) return false;
  for (std::size_t j = 0; j < v.v.size(); ++j) {
    const auto x = flip ? -g.v[j] : g.v[j];
    if (x > 0 ? (v.v[j] < x) : (x < 0 && v.v[j] > x)) return false;
  }
  return true;
}

inline bool sign_compatible(const KernelVector& a, const KernelVector& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if ((a[j] > 0 && b[j] < 0) || (a[j] < 0 && b[j] > 0)) return false;
  }
  return true;
}

class PottierCompletion {
 public:
  explicit PottierCompletion(const Limits& limits) : limits_(limits) {}

  std::vector<KernelVector> run(const std::vector<KernelVector>& basis) {
    for (const auto& b : basis) add(MaskedVector(b));
    while (!queue_.empty()) {
      auto [norm, i, j, minus] = queue_.top();
      queue_.pop();
      KernelVector s(gens_[i].v.size());
      for (std::size_t t = 0; t < s.size(); ++t) {
        s[t] = minus ? checked::sub(gens_[i].v[t], gens_[j].v[t])
                     : checked::add(gens_[i].v[t], gens_[j].v[t]);
      }
      MaskedVector r(std::move(s));
      reduce(r);
      if (!r.zero()) add(std::move(r));
    }
    return minimal();
  }

 private:
  using Candidate = std::tuple<std::int64_t, std::size_t, std::size_t, bool>;

  void tick() {
    if (++steps_ > limits_.step_cap) {
      throw ResourceLimitError("Graver completion step budget exceeded");
    }
    if ((steps_ & 0x3ff) == 0) limits_.check_deadline();
  }

  void reduce(MaskedVector& r) {
    bool changed = true;
    while (changed && !r.zero()) {
      changed = false;
      for (const auto& g : gens_) {
        for (bool flip : {false, true}) {
          if (!conformal(g, r, flip)) continue;
          for (std::size_t t = 0; t < r.v.size(); ++t) {
            r.v[t] -= flip ? -g.v[t] : g.v[t];
          }
          r.refresh();
          tick();
          changed = true;
          break;
        }
        if (changed) break;
      }
    }
  }

  void add(MaskedVector r) {
    r.v = canonical_sign(std::move(r.v));
    r.refresh();
    const std::size_t idx = gens_.size();
    gens_.push_back(std::move(r));
    const auto& nv = gens_[idx].v;
    for (std::size_t k = 0; k < idx; ++k) {
      const auto& other = gens_[k].v;
      // a sign-compatible sum reduces to zero through its summands
      for (bool minus : {false, true}) {
        KernelVector o = other;
        if (minus) {
          for (auto& x : o) x = -x;
        }
        if (sign_compatible(nv, o)) continue;
        std::int64_t norm = 0;
        for (std::size_t t = 0; t < nv.size(); ++t) {
          auto x = checked::add(nv[t], o[t]);
          norm = checked::add(norm, x < 0 ? -x : x);
        }
        queue_.emplace(norm, idx, k, minus);
      }
    }
    tick();
  }

  std::vector<KernelVector> minimal() const {
    std::vector<KernelVector> out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      bool keep = true;
      for (std::size_t k = 0; k < gens_.size() && keep; ++k) {
        if (k == i || gens_[k].v == gens_[i].v) continue;
        if (conformal(gens_[k], gens_[i], false) ||
            conformal(gens_[k], gens_[i], true)) {
          keep = false;
        }
      }
      if (keep) out.push_back(gens_[i].v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  const Limits& limits_;
  std::vector<MaskedVector> gens_;  // canonical sign representatives
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> queue_;
  std::int64_t steps_ = 0;
};

}  // namespace detail

/// Graver basis by conformal completion of a kernel lattice basis:
/// candidates f ± g are reduced by conformal subtraction of known elements
/// until no candidate yields anything new; the ⊑-minimal survivors are the
/// primitive vectors.
inline BasisSet graver(const ToricInstance& inst, const Limits& limits = {}) {
  detail::PottierCompletion alg(limits);
  std::vector<Binomial> out;
  for (const auto& v : alg.run(kernel_lattice(inst))) {
    out.push_back(Binomial::from_vector(v));
  }
  return BasisSet(BasisKind::graver, std::move(out));
}

/// The Lawrence lifting [[A, 0], [I, I]] of A.
inline ToricInstance lawrence_lifting(const ToricInstance& inst) {
  const std::size_t n = inst.rows(), m = inst.cols();
  ToricInstance::Matrix rows(n + m, std::vector<std::int64_t>(2 * m, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < m; ++j) rows[r][j] = inst.at(r, j);
  }
  for (std::size_t j = 0; j < m; ++j) {
    rows[n + j][j] = 1;
    rows[n + j][m + j] = 1;
  }
  return ToricInstance(std::move(rows), inst.origin());
}

/// Graver basis read off a reduced Gröbner basis of the Lawrence lifting,
/// which is the same for every term order: x^a y^b - x^c y^d gives a - c.
inline BasisSet graver_by_lawrence(const ToricInstance& inst,
                                   const Limits& limits = {}) {
  const std::size_t m = inst.cols();
  const auto lifted = lawrence_lifting(inst);
  auto gens = toric_generators(lifted, limits);
  auto gb = buchberger(gens, MonomialOrder::graded_revlex(2 * m), limits);
  std::vector<Binomial> out;
  for (const auto& g : gb.elements()) {
    KernelVector v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = g.lead[j] - g.trail[j];
    out.push_back(Binomial::from_vector(v));
  }
  return BasisSet(BasisKind::graver, std::move(out));
}

/// Primitive binomials x^u - x^v with max(u_j, v_j) <= box[j] for every j,
/// by brute force: every kernel vector inside the box is enumerated (each
/// is a pair of disjoint-support monomials in one fiber) and kept iff no
/// kernel vector of smaller 1-norm is conformal to it. A non-primitive
/// vector always has such a witness inside the same box, so the scan is
/// exact for the box.
inline BasisSet graver_by_scan(const ToricInstance& inst, const std::vector<std::int64_t>& box,
                               const Limits& limits = {}) {
  const std::size_t m = inst.cols();
  if (box.size() != m) throw DimensionError("coordinate box has the wrong length");
  const auto basis = intmat::to_int64(intmat::hermite_normal_form(
      intmat::integer_kernel(intmat::to_z(inst.matrix()), m)));
  const std::size_t r = basis.size();
  std::vector<std::size_t> pivot(r);
  for (std::size_t k = 0; k < r; ++k) {
    pivot[k] = 0;
    while (basis[k][pivot[k]] == 0) ++pivot[k];
  }
  auto floor_div = [](std::int64_t a, std::int64_t b) {
    return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0);
  };
  std::vector<detail::MaskedVector> cands;
  std::int64_t count = 0;
  KernelVector cur(m, 0);
  // Coordinates before pivot[k] depend only on the first k multipliers; the
  // first nonzero multiplier is taken positive, which fixes the sign.
  auto rec = [&](auto&& self, std::size_t k, bool nonzero) -> void {
    const std::size_t upto = k < r ? pivot[k] : m;
    const std::size_t from = k == 0 ? 0 : pivot[k - 1];
    for (std::size_t j = from; j < upto; ++j) {
      if (cur[j] > box[j] || cur[j] < -box[j]) return;
    }
    if (k == r) {
      if (!nonzero) return;
      if (++count > limits.fiber_cap) {
        throw ResourceLimitError("primitivity scan exceeded the vector cap");
      }
      cands.emplace_back(canonical_sign(cur));
      return;
    }
    const auto p = basis[k][pivot[k]];
    const auto lo = nonzero ? -floor_div(box[pivot[k]] + cur[pivot[k]], p) : 0;
    const auto hi = floor_div(box[pivot[k]] - cur[pivot[k]], p);
    for (std::int64_t lam = lo; lam <= hi; ++lam) {
      for (std::size_t j = pivot[k]; j < m; ++j) {
        cur[j] = checked::add(cur[j], checked::mul(lam, basis[k][j]));
      }
      self(self, k + 1, nonzero || lam != 0);
      for (std::size_t j = pivot[k]; j < m; ++j) cur[j] -= lam * basis[k][j];
    }
    limits.check_deadline();
  };
  rec(rec, 0, false);

  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    return a.norm != b.norm ? a.norm < b.norm : a.v < b.v;
  });
  std::vector<detail::MaskedVector> prim;
  std::vector<Binomial> out;
  for (const auto& c : cands) {
    bool primitive = true;
    for (const auto& p : prim) {
      if (p.norm >= c.norm) break;
      if (detail::conformal(p, c, false) || detail::conformal(p, c, true)) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      prim.push_back(c);
      out.push_back(Binomial::from_vector(c.v));
    }
  }
  return BasisSet(BasisKind::graver, std::move(out));
}

/// Smallest coordinate box containing both sides of every element.
inline std::vector<std::int64_t> coordinate_box(const BasisSet& basis, std::size_t m) {
  std::vector<std::int64_t> box(m, 0);
  for (const auto& b : basis) {
    for (std::size_t j = 0; j < m; ++j) box[j] = std::max({box[j], b.plus()[j], b.minus()[j]});
  }
  return box;
}

}  // namespace toribase

#endif  // TORIBASE_GRAVER_HPP
