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

#ifndef TORIBASE_LATTICE_HPP
#define TORIBASE_LATTICE_HPP

#include <vector>

#include "toribase/binomial.hpp"
#include "toribase/instance.hpp"
#include "toribase/integer_matrix.hpp"

namespace toribase {

/// LLL-reduced basis of ker(A) in Z^m, m - rank vectors, each sign
/// canonical.
inline std::vector<KernelVector> kernel_lattice(const ToricInstance& inst) {
  auto k = intmat::integer_kernel(intmat::to_z(inst.matrix()), inst.cols());
  k = intmat::lll_reduce(std::move(k));
  std::vector<KernelVector> out;
  for (auto& row : intmat::to_int64(k)) out.push_back(canonical_sign(row));
  return out;
}

/// True iff the two vector families span the same sublattice of Z^m.
inline bool same_lattice(const std::vector<KernelVector>& a,
                         const std::vector<KernelVector>& b) {
  return intmat::hermite_normal_form(intmat::to_z(a)) ==
         intmat::hermite_normal_form(intmat::to_z(b));
}

inline std::vector<KernelVector> tilde_vectors(const BasisSet& gens) {
  std::vector<KernelVector> v;
  for (const auto& g : gens) v.push_back(g.vector());
  return v;
}

}  // namespace toribase

#endif  // TORIBASE_LATTICE_HPP
