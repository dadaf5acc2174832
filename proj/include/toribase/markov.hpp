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

#ifndef TORIBASE_MARKOV_HPP
#define TORIBASE_MARKOV_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "toribase/binomial.hpp"
#include "toribase/fiber.hpp"
#include "toribase/groebner.hpp"
#include "toribase/instance.hpp"
#include "toribase/saturation.hpp"

namespace toribase {

struct BettiEntry {
  std::vector<std::int64_t> degree;
  std::int64_t components = 0;    // c_b >= 2
  std::int64_t multiplicity = 0;  // c_b - 1

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Betti degrees with their multiplicities; mu is the minimal number of
/// generators of I_A.
struct BettiData {
  std::vector<BettiEntry> entries;  // sorted by degree
  std::int64_t mu = 0;

  std::vector<std::vector<std::int64_t>> degrees() const {
    std::vector<std::vector<std::int64_t>> d;
    for (const auto& e : entries) d.push_back(e.degree);
    return d;
  }
};

struct MarkovResult {
  BasisSet basis;  // kind markov_universal
  BettiData betti;
};

/// Distinct A-degrees of a generating set, ascending.
inline std::vector<std::vector<std::int64_t>> candidate_betti_degrees(
    const ToricInstance& inst, const BasisSet& gens) {
  std::set<std::vector<std::int64_t>> s;
  for (const auto& g : gens) s.insert(a_degree(inst, g.plus()));
  return {s.begin(), s.end()};
}

/// Universal Markov basis via fiber graphs: at every candidate Betti degree
/// the minimal binomials are x^u - x^v with u and v in different connected
/// components of the shared-support graph on the fiber.
inline MarkovResult universal_markov(const ToricInstance& inst,
                                     const BasisSet& generators,
                                     const Limits& limits = {}) {
  MarkovResult res;
  std::vector<Binomial> elems;
  for (const auto& b : candidate_betti_degrees(inst, generators)) {
    auto fiber = enumerate_fiber(inst, b, limits.fiber_cap);
    auto comps = fiber_graph_components(fiber);
    if (comps.size() < 2) continue;
    const auto c = static_cast<std::int64_t>(comps.size());
    res.betti.entries.push_back({b, c, c - 1});
    res.betti.mu += c - 1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        for (auto p : comps[i]) {
          for (auto q : comps[j]) {
            elems.emplace_back(fiber.points[p], fiber.points[q]);
          }
        }
      }
    }
    limits.check_deadline();
  }
  res.basis = BasisSet(BasisKind::markov_universal, std::move(elems));
  return res;
}

inline MarkovResult universal_markov(const ToricInstance& inst,
                                     const Limits& limits = {}) {
  return universal_markov(inst, toric_generators(inst, limits), limits);
}

/// Gröbner basis of the binomial ideal <x_1,...,x_m> * I, from generators
/// of I.
inline ReducedGB maximal_times_ideal_gb(const BasisSet& generators,
                                        std::size_t m,
                                        const Limits& limits = {}) {
  std::vector<RawBinomial> prods;
  for (const auto& g : generators) {
    for (std::size_t i = 0; i < m; ++i) {
      auto a = g.plus(), b = g.minus();
      ++a[i];
      ++b[i];
      prods.push_back({std::move(a), std::move(b)});
    }
  }
  return buchberger(prods, MonomialOrder::graded_revlex(m), limits);
}

/// Universal Markov basis as the binomials of I_A outside
/// <x_1,...,x_m> * I_A, decided by normal forms modulo a Gröbner basis of
/// that product ideal. Independent of the fiber-graph route.
inline BasisSet universal_markov_by_reduction(const ToricInstance& inst,
                                              const BasisSet& generators,
                                              const Limits& limits = {}) {
  auto gb = maximal_times_ideal_gb(generators, inst.cols(), limits);
  std::vector<Binomial> elems;
  for (const auto& b : candidate_betti_degrees(inst, generators)) {
    auto fiber = enumerate_fiber(inst, b, limits.fiber_cap);
    std::vector<ExponentVector> nf;
    nf.reserve(fiber.points.size());
    for (const auto& p : fiber.points) nf.push_back(gb.normal_form(p));
    for (std::size_t i = 0; i < fiber.points.size(); ++i) {
      for (std::size_t j = i + 1; j < fiber.points.size(); ++j) {
        if (supports_intersect(fiber.points[i], fiber.points[j])) continue;
        if (nf[i] != nf[j]) elems.emplace_back(fiber.points[i], fiber.points[j]);
      }
    }
  }
  return BasisSet(BasisKind::markov_universal, std::move(elems));
}

/// True iff x^u - x^v is not in <x_1,...,x_m> * I_A, i.e. is a minimal
/// binomial when it lies in I_A.
inline bool is_minimal_binomial(const ReducedGB& maximal_times_ideal,
                                const Binomial& f) {
  return !maximal_times_ideal.contains(f);
}

/// A minimal generating set extracted greedily from `generators`: visit
/// them by ascending weighted degree and keep those not already in the
/// ideal of the kept ones.
inline BasisSet minimal_generating_set(const ToricInstance& inst,
                                       const BasisSet& generators,
                                       const Limits& limits = {}) {
  const auto w = inst.column_sums();
  auto weighted = [&](const Binomial& b) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      s = checked::add(s, checked::mul(w[j], b.plus()[j]));
    }
    return s;
  };
  std::vector<Binomial> order(generators.begin(), generators.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](const auto& a, const auto& b) {
                     return weighted(a) < weighted(b);
                   });
  std::vector<Binomial> kept;
  const auto grevlex = MonomialOrder::graded_revlex(inst.cols());
  for (const auto& g : order) {
    if (!kept.empty()) {
      auto gb = buchberger(raw(kept), grevlex, limits);
      if (gb.contains(g)) continue;
    }
    kept.push_back(g);
  }
  return BasisSet(BasisKind::generators, std::move(kept));
}

}  // namespace toribase

#endif  // TORIBASE_MARKOV_HPP
