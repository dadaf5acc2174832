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

// Buchberger's algorithm specialised to pure-difference binomials
// x^a - x^b. S-binomials and reductions of such binomials are again of this
// form (or zero), so a binomial is represented by its two exponent vectors
// and reduction acts on each monomial independently.

#ifndef TORIBASE_GROEBNER_HPP
#define TORIBASE_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "toribase/binomial.hpp"
#include "toribase/errors.hpp"
#include "toribase/order.hpp"

namespace toribase {

/// x^lead - x^trail with lead > trail in the ambient order. Unlike Binomial
/// the two sides may share variables (needed for non-prime binomial ideals).
struct GbElement {
  ExponentVector lead;
  ExponentVector trail;

  friend bool operator==(const GbElement&, const GbElement&) = default;
};

/// A pair of monomials spanning a pure-difference binomial; unoriented.
struct RawBinomial {
  ExponentVector first;
  ExponentVector second;
};

inline std::vector<RawBinomial> raw(const BasisSet& basis) {
  std::vector<RawBinomial> r;
  r.reserve(basis.size());
  for (const auto& b : basis) r.push_back({b.plus(), b.minus()});
  return r;
}

inline std::vector<RawBinomial> raw(std::span<const Binomial> gens) {
  std::vector<RawBinomial> r;
  r.reserve(gens.size());
  for (const auto& b : gens) r.push_back({b.plus(), b.minus()});
  return r;
}

/// Reduced Gröbner basis: leads minimally generate the initial ideal and no
/// trail is divisible by any lead. Elements are sorted by lead exponent.
class ReducedGB {
 public:
  ReducedGB(MonomialOrder order, std::vector<GbElement> elems)
      : order_(std::move(order)), elements_(std::move(elems)) {
    std::sort(elements_.begin(), elements_.end(),
              [](const auto& a, const auto& b) {
                return a.lead != b.lead ? a.lead < b.lead : a.trail < b.trail;
              });
  }

  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<GbElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Normal form of the monomial x^u: the unique standard monomial
  /// congruent to it modulo the ideal.
  ExponentVector normal_form(ExponentVector u) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& g : elements_) {
        if (divides(g.lead, u)) {
          for (std::size_t i = 0; i < u.size(); ++i) {
            u[i] = checked::add(u[i] - g.lead[i], g.trail[i]);
          }
          changed = true;
          break;
        }
      }
    }
    return u;
  }

  /// True iff x^u - x^v lies in the ideal.
  bool contains(const ExponentVector& u, const ExponentVector& v) const {
    return normal_form(u) == normal_form(v);
  }
  bool contains(const Binomial& b) const { return contains(b.plus(), b.minus()); }

  /// The elements as canonical binomials (supports must be disjoint, which
  /// holds for reduced Gröbner bases of prime binomial ideals).
  BasisSet to_basis(BasisKind kind = BasisKind::generators) const {
    std::vector<Binomial> v;
    for (const auto& g : elements_) v.emplace_back(g.lead, g.trail);
    return BasisSet(kind, std::move(v));
  }

 private:
  MonomialOrder order_;
  std::vector<GbElement> elements_;
};

namespace detail {

class BinomialBuchberger {
 public:
  BinomialBuchberger(const MonomialOrder& order, const Limits& limits)
      : order_(order), limits_(limits) {}

  ReducedGB run(const std::vector<RawBinomial>& gens) {
    for (const auto& g : gens) {
      if (g.first.size() != order_.size() || g.second.size() != order_.size()) {
        throw DimensionError("generator length differs from order size");
      }
      auto a = reduce(g.first), b = reduce(g.second);
      if (a != b) insert(std::move(a), std::move(b));
    }
    while (!queue_.empty()) {
      auto top = queue_.top();
      queue_.pop();
      pending_.erase({top.i, top.j});
      if (chain_criterion(top)) continue;
      const auto& gi = basis_[top.i];
      const auto& gj = basis_[top.j];
      ExponentVector s1(top.lcm.size()), s2(top.lcm.size());
      for (std::size_t k = 0; k < s1.size(); ++k) {
        s1[k] = checked::add(top.lcm[k] - gi.lead[k], gi.trail[k]);
        s2[k] = checked::add(top.lcm[k] - gj.lead[k], gj.trail[k]);
      }
      auto a = reduce(std::move(s1)), b = reduce(std::move(s2));
      if (a != b) insert(std::move(a), std::move(b));
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
  };

  struct PairCmp {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      // priority_queue pops the largest; smallest lcm must compare largest
      auto c = order->compare_unchecked(a.lcm, b.lcm);
      if (c != Cmp::equal) return c == Cmp::greater;
      return std::tie(a.i, a.j) > std::tie(b.i, b.j);
    }
  };

  void tick() {
    if (++steps_ > limits_.step_cap) {
      throw ResourceLimitError("Gröbner step budget of " +
                               std::to_string(limits_.step_cap) + " exceeded");
    }
    if ((steps_ & 0x3ff) == 0) limits_.check_deadline();
  }

  ExponentVector reduce(ExponentVector u) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (dead_[k]) continue;
        const auto& g = basis_[k];
        if (divides(g.lead, u)) {
          for (std::size_t t = 0; t < u.size(); ++t) {
            u[t] = checked::add(u[t] - g.lead[t], g.trail[t]);
          }
          tick();
          changed = true;
          break;
        }
      }
    }
    return u;
  }

  void insert(ExponentVector a, ExponentVector b) {
    if (order_.greater(b, a)) std::swap(a, b);
    const std::size_t idx = basis_.size();
    basis_.push_back({std::move(a), std::move(b)});
    dead_.push_back(false);
    const auto& lead = basis_[idx].lead;
    for (std::size_t k = 0; k < idx; ++k) {
      if (dead_[k]) continue;
      // an older element whose lead is a multiple of the new lead is
      // redundant for reduction; its pairs are still covered via the new one
      if (divides(lead, basis_[k].lead)) dead_[k] = true;
    }
    for (std::size_t k = 0; k < idx; ++k) {
      const auto& other = basis_[k].lead;
      ExponentVector l(lead.size());
      bool coprime = true;
      for (std::size_t t = 0; t < l.size(); ++t) {
        l[t] = std::max(lead[t], other[t]);
        if (lead[t] != 0 && other[t] != 0) coprime = false;
      }
      if (coprime) continue;
      queue_.push({k, idx, std::move(l)});
      pending_.insert({k, idx});
    }
    tick();
  }

  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(basis_[k].lead, p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (pending_.count(key(p.i, k)) || pending_.count(key(p.j, k))) continue;
      return true;
    }
    return false;
  }

  ReducedGB finish() {
    std::vector<GbElement> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      bool redundant = false;
      for (std::size_t t = 0; t < basis_.size() && !redundant; ++t) {
        if (t == k) continue;
        if (divides(basis_[t].lead, basis_[k].lead) &&
            (basis_[t].lead != basis_[k].lead || t < k)) {
          redundant = true;
        }
      }
      if (!redundant) minimal.push_back(basis_[k]);
    }
    // tail-reduce against the minimal basis
    ReducedGB partial(order_, minimal);
    std::vector<GbElement> reduced;
    reduced.reserve(minimal.size());
    for (auto& g : minimal) {
      reduced.push_back({g.lead, partial.normal_form(g.trail)});
    }
    return ReducedGB(order_, std::move(reduced));
  }

  const MonomialOrder& order_;
  const Limits& limits_;
  std::vector<GbElement> basis_;
  std::vector<bool> dead_;
  std::priority_queue<Pair, std::vector<Pair>, PairCmp> queue_{PairCmp{&order_}};
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  std::int64_t steps_ = 0;
};

}  // namespace detail

/// Reduced Gröbner basis of the ideal generated by pure-difference
/// binomials, with respect to `order`.
inline ReducedGB buchberger(const std::vector<RawBinomial>& gens,
                            const MonomialOrder& order,
                            const Limits& limits = {}) {
  detail::BinomialBuchberger alg(order, limits);
  return alg.run(gens);
}

inline ReducedGB buchberger(const BasisSet& gens, const MonomialOrder& order,
                            const Limits& limits = {}) {
  return buchberger(raw(gens), order, limits);
}

/// Minimal monomial generators of the initial ideal.
inline std::vector<ExponentVector> initial_ideal(const ReducedGB& gb) {
  std::vector<ExponentVector> leads;
  for (const auto& g : gb.elements()) leads.push_back(g.lead);
  std::sort(leads.begin(), leads.end());
  return leads;
}

/// True iff both binomial families generate the same ideal.
inline bool ideal_equal(const std::vector<RawBinomial>& a,
                        const std::vector<RawBinomial>& b,
                        const Limits& limits = {}) {
  std::size_t m = 0;
  for (const auto& g : a) m = g.first.size();
  for (const auto& g : b) m = g.first.size();
  if (m == 0) return true;
  auto order = MonomialOrder::graded_revlex(m);
  auto ga = buchberger(a, order, limits);
  for (const auto& g : b) {
    if (!ga.contains(g.first, g.second)) return false;
  }
  auto gb = buchberger(b, order, limits);
  for (const auto& g : a) {
    if (!gb.contains(g.first, g.second)) return false;
  }
  return true;
}

inline bool ideal_equal(const BasisSet& a, const BasisSet& b,
                        const Limits& limits = {}) {
  return ideal_equal(raw(a), raw(b), limits);
}

}  // namespace toribase

#endif  // TORIBASE_GROEBNER_HPP
