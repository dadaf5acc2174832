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

#ifndef TORIBASE_ROBUSTNESS_HPP
#define TORIBASE_ROBUSTNESS_HPP

#include <cstdint>
#include <map>
#include <string>

#include "toribase/circuits.hpp"
#include "toribase/graver.hpp"
#include "toribase/markov.hpp"
#include "toribase/saturation.hpp"
#include "toribase/ugb.hpp"

namespace toribase {

struct InclusionFlags {
  bool circuits_in_ugb = false;
  bool ugb_in_graver = false;
  bool markov_in_graver = false;
  bool markov_in_ugb = false;
  bool markov_eq_graver = false;
  bool ugb_eq_markov = false;
};

struct RobustnessReport {
  std::int64_t mu = 0;
  std::map<BasisKind, std::size_t> sizes;
  bool is_robust = false;
  bool is_generalized_robust = false;
  InclusionFlags flags;

  BasisSet circuits;
  BasisSet graver;
  BasisSet ugb;
  BasisSet markov;
  BettiData betti;
};

/// Computes all four bases and the robustness verdicts. The containments
/// C ⊆ U ⊆ Gr and M ⊆ Gr always hold mathematically, so a violation means
/// a bug and raises InconsistencyError.
inline RobustnessReport robustness_report(const ToricInstance& inst,
                                          const Limits& limits = {}) {
  RobustnessReport r;
  auto gens = toric_generators(inst, limits);
  auto mk = universal_markov(inst, gens, limits);
  r.markov = std::move(mk.basis);
  r.betti = std::move(mk.betti);
  r.mu = r.betti.mu;
  r.circuits = circuits(inst, limits);
  r.graver = graver(inst, limits);
  r.ugb = universal_groebner(inst, r.graver, limits);

  r.sizes = {{BasisKind::circuits, r.circuits.size()},
             {BasisKind::graver, r.graver.size()},
             {BasisKind::ugb, r.ugb.size()},
             {BasisKind::markov_universal, r.markov.size()}};
  auto& f = r.flags;
  f.circuits_in_ugb = r.circuits.subset_of(r.ugb);
  f.ugb_in_graver = r.ugb.subset_of(r.graver);
  f.markov_in_graver = r.markov.subset_of(r.graver);
  f.markov_in_ugb = r.markov.subset_of(r.ugb);
  f.markov_eq_graver = r.markov.same_elements(r.graver);
  f.ugb_eq_markov = r.ugb.same_elements(r.markov);
  if (!f.circuits_in_ugb) throw InconsistencyError("circuits not contained in the universal Gröbner basis");
  if (!f.ugb_in_graver) throw InconsistencyError("universal Gröbner basis not contained in the Graver basis");
  if (!f.markov_in_graver) throw InconsistencyError("universal Markov basis not contained in the Graver basis");

  r.is_robust = static_cast<std::int64_t>(r.ugb.size()) == r.mu;
  r.is_generalized_robust = f.ugb_eq_markov;
  if (r.is_robust && !r.is_generalized_robust) {
    // |U| = mu forces U to be a minimal generating set, hence U = M
    throw InconsistencyError("robust but not generalized robust");
  }
  return r;
}

/// True iff the circuits generate I_A.
inline bool is_circuit_ideal(const ToricInstance& inst, const Limits& limits = {}) {
  return ideal_equal(circuits(inst, limits), toric_generators(inst, limits), limits);
}

}  // namespace toribase

#endif  // TORIBASE_ROBUSTNESS_HPP
