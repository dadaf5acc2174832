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

#ifndef TORIBASE_CIRCUITS_HPP
#define TORIBASE_CIRCUITS_HPP

#include <cstdint>
#include <vector>

#include "toribase/binomial.hpp"
#include "toribase/errors.hpp"
#include "toribase/instance.hpp"
#include "toribase/integer_matrix.hpp"

namespace toribase {

/// Circuits of A: for each minimally dependent set of columns, the
/// primitive kernel vector supported exactly on it. A minimally dependent
/// set S has a one-dimensional kernel whose generator has full support on
/// S; at most rank + 1 columns can be involved.
inline BasisSet circuits(const ToricInstance& inst, const Limits& limits = {}) {
  const std::size_t m = inst.cols();
  const std::size_t max_size = std::min(m, inst.rank() + 1);
  std::vector<Binomial> out;
  std::int64_t visited = 0;
  std::vector<std::size_t> pick;
  for (std::size_t k = 2; k <= max_size; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (++visited > limits.subset_cap) {
        throw ResourceLimitError("circuit search exceeded the subset budget");
      }
      if ((visited & 0xfff) == 0) limits.check_deadline();
      intmat::ZMatrix sub(inst.rows(), intmat::ZRow(k));
      for (std::size_t r = 0; r < inst.rows(); ++r) {
        for (std::size_t i = 0; i < k; ++i) sub[r][i] = inst.at(r, pick[i]);
      }
      auto ker = intmat::integer_kernel(sub, k);
      if (ker.size() == 1) {
        bool full = true;
        for (const auto& x : ker[0]) full = full && x != 0;
        if (full) {
          KernelVector v(m, 0);
          for (std::size_t i = 0; i < k; ++i) v[pick[i]] = intmat::to_int64(ker[0][i]);
          out.push_back(Binomial::from_vector(v));
        }
      }
      // next k-combination of {0..m-1}
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return BasisSet(BasisKind::circuits, std::move(out));
}

}  // namespace toribase

#endif  // TORIBASE_CIRCUITS_HPP
