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

#ifndef TORIBASE_SEMIGROUP_CLASSIFY_HPP
#define TORIBASE_SEMIGROUP_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "toribase/groebner.hpp"
#include "toribase/markov.hpp"
#include "toribase/numsgp.hpp"
#include "toribase/robustness.hpp"

namespace toribase {

struct SemigroupClassification {
  bool is_ci = false;
  bool is_free = false;
  std::optional<FreeCertificate> certificate;
  bool has_ci_initial = false;
  std::optional<MonomialOrder> ci_order;  // lex order realizing m - 1 elements
  bool unique_betti = false;
  std::vector<std::int64_t> d;            // shape witness when unique_betti
  bool betti_divisible = false;
  bool generalized_robust = false;
  bool robust = false;

  std::int64_t mu = 0;
  std::vector<std::int64_t> betti_degrees;  // ascending
  bool algebraic_checked = false;           // U and M were compared
  std::string skipped_reason;               // why the cross-check was skipped
};

/// Lex order whose variables decrease along the certificate's arrangement.
inline MonomialOrder certificate_order(const NumericalSemigroup& s, const FreeCertificate& c) {
  return MonomialOrder::lex(arrangement_indices(s, c.arrangement));
}

/// Fills every flag from the structural tests, then checks each one
/// against the algebraic path. The full robustness comparison (Graver,
/// universal Gröbner) is skipped when it exhausts `limits`.
inline SemigroupClassification classify_semigroup(const NumericalSemigroup& s,
                                                  const Limits& limits = {},
                                                  bool algebraic_crosscheck = true) {
  SemigroupClassification c;
  const auto inst = s.instance();
  const auto m = static_cast<std::int64_t>(s.m());
  const auto gens = toric_generators(inst, limits);
  const auto mk = universal_markov(inst, gens, limits);
  c.mu = mk.betti.mu;
  for (const auto& e : mk.betti.entries) c.betti_degrees.push_back(e.degree.at(0));
  c.is_ci = c.mu == m - 1;

  c.certificate = is_free(s);
  c.is_free = c.certificate.has_value();
  if (c.is_free) {
    auto order = certificate_order(s, *c.certificate);
    auto gb = buchberger(gens, order, limits);
    if (gb.size() != s.m() - 1) {
      throw InconsistencyError("free arrangement but its lex basis has " +
                               std::to_string(gb.size()) + " elements");
    }
    if (!ideal_equal(free_generators(s, *c.certificate), gens, limits)) {
      throw InconsistencyError("certificate binomials do not generate the toric ideal");
    }
    c.has_ci_initial = true;
    c.ci_order = std::move(order);
  }

  auto shape = has_unique_betti(s);
  c.unique_betti = shape.value;
  c.d = std::move(shape.d);
  if (c.unique_betti != (mk.betti.entries.size() == 1)) {
    throw InconsistencyError("unique Betti shape test disagrees with the Betti degrees");
  }
  c.betti_divisible = betti_divisible(c.betti_degrees);
  c.generalized_robust = c.unique_betti;
  c.robust = s.m() == 2;

  if (algebraic_crosscheck) {
    try {
      auto rep = robustness_report(inst, limits);
      c.algebraic_checked = true;
      if (rep.is_generalized_robust != c.generalized_robust) {
        throw InconsistencyError("generalized robustness disagrees with the unique Betti test");
      }
      if (rep.is_robust != c.robust) {
        throw InconsistencyError("robustness disagrees with embedding dimension 2");
      }
    } catch (const ResourceLimitError& ex) {
      c.skipped_reason = ex.what();
    }
  }

  auto implies = [](bool a, bool b) { return !a || b; };
  const bool chain = implies(c.robust, c.unique_betti) &&
                     c.unique_betti == c.generalized_robust &&
                     implies(c.generalized_robust, c.is_free) &&
                     c.is_free == c.has_ci_initial && implies(c.has_ci_initial, c.is_ci) &&
                     implies(c.unique_betti, c.betti_divisible);
  if (!chain) throw InconsistencyError("classification implication chain violated");
  return c;
}

}  // namespace toribase

#endif  // TORIBASE_SEMIGROUP_CLASSIFY_HPP
