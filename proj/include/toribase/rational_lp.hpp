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

#ifndef TORIBASE_RATIONAL_LP_HPP
#define TORIBASE_RATIONAL_LP_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "toribase/errors.hpp"

namespace toribase::lp {

using QRow = std::vector<mpq_class>;
using QMatrix = std::vector<QRow>;

/// Decides whether {x >= 0 : a x = b} is nonempty, by phase-one simplex in
/// exact rational arithmetic with Bland's rule (no cycling).
inline bool is_feasible(QMatrix a, QRow b, const Limits& limits = {}) {
  const std::size_t rows = a.size();
  if (rows == 0) return true;
  const std::size_t n = a[0].size();
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != n) throw DimensionError("ragged constraint matrix");
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  }
  // Columns 0..n-1 structural, n..n+rows-1 artificial, last is the rhs.
  const std::size_t width = n + rows + 1;
  QMatrix t(rows, QRow(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = b[i];
    basis[i] = n + i;
  }
  // reduced costs of the phase-one objective (sum of artificials)
  QRow cost(width);
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < n + rows) continue;
    mpq_class s = 0;
    for (std::size_t i = 0; i < rows; ++i) s += t[i][j];
    cost[j] = -s;
  }
  std::int64_t pivots = 0;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = rows;
    mpq_class best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; phase one is bounded below
    const mpq_class p = t[leave][enter];
    for (auto& x : t[leave]) x /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const mpq_class f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
      }
    }
    if (cost[enter] != 0) {
      const mpq_class f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
    if (++pivots % 64 == 0) limits.check_deadline();
  }
  // objective value = -cost[rhs]
  return cost[width - 1] == 0;
}

}  // namespace toribase::lp

#endif  // TORIBASE_RATIONAL_LP_HPP
