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

#ifndef TORIBASE_SATURATION_HPP
#define TORIBASE_SATURATION_HPP

#include <vector>

#include "toribase/binomial.hpp"
#include "toribase/groebner.hpp"
#include "toribase/instance.hpp"
#include "toribase/lattice.hpp"
#include "toribase/order.hpp"

namespace toribase {

/// Order used to saturate by x_var: A-graded (through the positive grading
/// 1^T A), then reverse lex with x_var least significant. Ties must go
/// straight to reverse lex: a total-degree step would let x_var divide a
/// leading term without dividing the trailing one.
inline MonomialOrder saturation_order(const ToricInstance& inst,
                                      std::size_t var) {
  std::vector<std::size_t> perm;
  for (std::size_t j = 0; j < inst.cols(); ++j) {
    if (j != var) perm.push_back(j);
  }
  perm.push_back(var);
  return MonomialOrder::weight_revlex(inst.column_sums(), std::move(perm));
}

/// A binomial generating set of I_A: the lattice-basis binomials saturated
/// by each variable in turn. For an ideal homogeneous in a positive grading,
/// dividing the reduced Gröbner basis under `saturation_order(var)` by the
/// largest power of x_var yields generators of the saturation by x_var.
inline BasisSet toric_generators(const ToricInstance& inst,
                                 const Limits& limits = {}) {
  std::vector<Binomial> gens;
  for (const auto& v : kernel_lattice(inst)) gens.push_back(Binomial::from_vector(v));
  if (gens.empty()) return BasisSet(BasisKind::generators, {});
  for (std::size_t var = 0; var < inst.cols(); ++var) {
    // Binomial's constructor divides out every common variable, which can
    // only enlarge the ideal inside I_A, so the end result is still I_A.
    auto gb = buchberger(raw(gens), saturation_order(inst, var), limits);
    std::vector<Binomial> next;
    next.reserve(gb.size());
    for (const auto& g : gb.elements()) next.emplace_back(g.lead, g.trail);
    gens = std::move(next);
    limits.check_deadline();
  }
  return BasisSet(BasisKind::generators, std::move(gens));
}

}  // namespace toribase

#endif  // TORIBASE_SATURATION_HPP
