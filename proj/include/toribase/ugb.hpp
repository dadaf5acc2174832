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

#ifndef TORIBASE_UGB_HPP
#define TORIBASE_UGB_HPP

#include <map>
#include <vector>

#include "toribase/binomial.hpp"
#include "toribase/fiber.hpp"
#include "toribase/graver.hpp"
#include "toribase/instance.hpp"
#include "toribase/rational_lp.hpp"

namespace toribase {

/// True iff [u, v] is an edge of conv(points), where u and v are among the
/// points. Uses the alternative system: the segment fails to be an edge
/// exactly when some convex combination of the directions u - w (w another
/// point) is a multiple of u - v.
inline bool is_fiber_edge(const std::vector<ExponentVector>& points,
                          const ExponentVector& u, const ExponentVector& v,
                          const Limits& limits = {}) {
  std::vector<const ExponentVector*> others;
  for (const auto& w : points) {
    if (w != u && w != v) others.push_back(&w);
  }
  if (others.empty()) return true;
  const std::size_t m = u.size();
  const std::size_t k = others.size();
  // columns: z_w (k of them), y+, y-
  lp::QMatrix a(m + 1, lp::QRow(k + 2));
  lp::QRow b(m + 1);
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t i = 0; i < k; ++i) a[t][i] = u[t] - (*others[i])[t];
    a[t][k] = u[t] - v[t];
    a[t][k + 1] = v[t] - u[t];
  }
  for (std::size_t i = 0; i < k; ++i) a[m][i] = 1;
  b[m] = 1;
  return !lp::is_feasible(std::move(a), std::move(b), limits);
}

/// Same decision through the direct system: some c with c.u = c.v and
/// c.u >= c.w + 1 for every other point w. Kept as an independent check.
inline bool is_fiber_edge_direct(const std::vector<ExponentVector>& points,
                                 const ExponentVector& u,
                                 const ExponentVector& v,
                                 const Limits& limits = {}) {
  std::vector<const ExponentVector*> others;
  for (const auto& w : points) {
    if (w != u && w != v) others.push_back(&w);
  }
  const std::size_t m = u.size();
  const std::size_t k = others.size();
  // c = p - q with p, q >= 0; one surplus variable per inequality
  lp::QMatrix a(k + 1, lp::QRow(2 * m + k));
  lp::QRow b(k + 1);
  for (std::size_t t = 0; t < m; ++t) {
    a[0][t] = u[t] - v[t];
    a[0][m + t] = v[t] - u[t];
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t t = 0; t < m; ++t) {
      a[i + 1][t] = u[t] - (*others[i])[t];
      a[i + 1][m + t] = (*others[i])[t] - u[t];
    }
    a[i + 1][2 * m + i] = -1;
    b[i + 1] = 1;
  }
  return lp::is_feasible(std::move(a), std::move(b), limits);
}

/// Universal Gröbner basis: the Graver elements whose segment is an edge of
/// the convex hull of their fiber.
inline BasisSet universal_groebner(const ToricInstance& inst,
                                   const BasisSet& graver_basis,
                                   const Limits& limits = {}) {
  std::map<std::vector<std::int64_t>, Fiber> fibers;
  std::vector<Binomial> out;
  for (const auto& g : graver_basis) {
    auto deg = a_degree(inst, g.plus());
    auto it = fibers.find(deg);
    if (it == fibers.end()) {
      it = fibers.emplace(deg, enumerate_fiber(inst, deg, limits.fiber_cap)).first;
    }
    if (is_fiber_edge(it->second.points, g.plus(), g.minus(), limits)) {
      out.push_back(g);
    }
    limits.check_deadline();
  }
  return BasisSet(BasisKind::ugb, std::move(out));
}

inline BasisSet universal_groebner(const ToricInstance& inst,
                                   const Limits& limits = {}) {
  return universal_groebner(inst, graver(inst, limits), limits);
}

}  // namespace toribase

#endif  // TORIBASE_UGB_HPP
