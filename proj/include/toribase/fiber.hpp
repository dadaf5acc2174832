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

#ifndef TORIBASE_FIBER_HPP
#define TORIBASE_FIBER_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "toribase/binomial.hpp"
#include "toribase/errors.hpp"
#include "toribase/instance.hpp"
#include "toribase/integer_matrix.hpp"

namespace toribase {

/// All w in N^m with A w = degree, sorted lexicographically.
struct Fiber {
  std::vector<std::int64_t> degree;
  std::vector<ExponentVector> points;
};

namespace detail {

/// Backtracks over the non-basic variables only. A set of rank-many
/// linearly independent columns (the basic ones) is fixed up front, and
/// once every other variable has a value the basic ones are the unique
/// solution of a square system, solved with a precomputed adjugate.
class FiberWalker {
 public:
  FiberWalker(const ToricInstance& inst, const std::vector<std::size_t>& order,
              std::int64_t cap)
      : inst_(inst), cap_(cap) {
    choose_basis(order);
    // suffix_support[k][r]: some variable walk_[k..] or a basic one has a
    // positive entry in row r. A row with remaining mass and no such
    // variable is a dead end.
    const auto f = walk_.size();
    suffix_support_.assign(f + 1, std::vector<char>(inst.rows(), 0));
    for (auto j : basic_) {
      for (std::size_t r = 0; r < inst.rows(); ++r) {
        if (inst.at(r, j) > 0) suffix_support_[f][r] = 1;
      }
    }
    for (std::size_t k = f; k-- > 0;) {
      suffix_support_[k] = suffix_support_[k + 1];
      for (std::size_t r = 0; r < inst.rows(); ++r) {
        if (inst.at(r, walk_[k]) > 0) suffix_support_[k][r] = 1;
      }
    }
  }

  std::vector<ExponentVector> run(std::vector<std::int64_t> b) {
    remaining_ = std::move(b);
    current_.assign(inst_.cols(), 0);
    points_.clear();
    recurse(0);
    std::sort(points_.begin(), points_.end());
    return std::move(points_);
  }

 private:
  using Wide = __int128;

  // Basic columns are taken greedily from the end of `order`, so the
  // leading variables of the order are the ones enumerated.
  void choose_basis(const std::vector<std::size_t>& order) {
    const std::size_t rank = inst_.rank();
    std::vector<char> is_basic(inst_.cols(), 0);
    intmat::ZMatrix cols;  // chosen columns as rows
    for (std::size_t k = order.size(); k-- > 0 && basic_.size() < rank;) {
      const auto j = order[k];
      cols.emplace_back();
      for (std::size_t r = 0; r < inst_.rows(); ++r) cols.back().emplace_back(inst_.at(r, j));
      if (intmat::rank(cols) == cols.size()) {
        basic_.insert(basic_.begin(), j);
        is_basic[j] = 1;
      } else {
        cols.pop_back();
      }
    }
    for (auto j : order) {
      if (!is_basic[j]) walk_.push_back(j);
    }
    // rank-many rows on which the basic columns are independent
    const std::size_t b = basic_.size();
    intmat::ZMatrix rows;
    for (std::size_t r = 0; r < inst_.rows() && pivot_rows_.size() < b; ++r) {
      rows.emplace_back();
      for (auto j : basic_) rows.back().emplace_back(inst_.at(r, j));
      if (intmat::rank(rows) == rows.size()) {
        pivot_rows_.push_back(r);
      } else {
        rows.pop_back();
      }
    }
    // inverse by exact Gauss-Jordan
    std::vector<std::vector<mpq_class>> a(b, std::vector<mpq_class>(2 * b));
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t k = 0; k < b; ++k) a[i][k] = inst_.at(pivot_rows_[i], basic_[k]);
      a[i][b + i] = 1;
    }
    mpq_class det = 1;
    for (std::size_t c = 0; c < b; ++c) {
      std::size_t p = c;
      while (a[p][c] == 0) ++p;
      if (p != c) {
        std::swap(a[p], a[c]);
        det = -det;
      }
      const mpq_class piv = a[c][c];
      det *= piv;
      for (auto& x : a[c]) x /= piv;
      for (std::size_t i = 0; i < b; ++i) {
        if (i == c || a[i][c] == 0) continue;
        const mpq_class f = a[i][c];
        for (std::size_t k = 0; k < 2 * b; ++k) a[i][k] -= f * a[c][k];
      }
    }
    // x = (D * inverse) * rhs / D with D = |det|, an integer matrix
    if (det < 0) det = -det;
    det_ = to_wide(det);
    adj_.assign(b, std::vector<Wide>(b));
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t k = 0; k < b; ++k) adj_[i][k] = to_wide(mpq_class(a[i][b + k] * det));
    }
  }

  static Wide to_wide(const mpq_class& q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
      throw ResourceLimitError("fiber basis system exceeds 64-bit arithmetic");
    }
    return static_cast<Wide>(q.get_num().get_si());
  }

  void emit_point() {
    points_.push_back(current_);
    if (static_cast<std::int64_t>(points_.size()) > cap_) {
      throw ResourceLimitError("fiber exceeds cap of " + std::to_string(cap_) + " points");
    }
  }

  // Solves the basic variables for the current remainder; emits a point
  // when the solution is a nonnegative integer vector satisfying every row.
  void solve_basic() {
    const std::size_t b = basic_.size();
    for (std::size_t i = 0; i < b; ++i) {
      Wide num = 0;
      for (std::size_t k = 0; k < b; ++k) {
        Wide term;
        if (__builtin_mul_overflow(adj_[i][k], static_cast<Wide>(remaining_[pivot_rows_[k]]), &term) ||
            __builtin_add_overflow(num, term, &num)) {
          throw ResourceLimitError("fiber basis system exceeds 128-bit arithmetic");
        }
      }
      if (num < 0 || num % det_ != 0) {
        for (std::size_t t = 0; t < i; ++t) current_[basic_[t]] = 0;
        return;
      }
      current_[basic_[i]] = static_cast<std::int64_t>(num / det_);
    }
    bool ok = true;
    for (std::size_t r = 0; r < inst_.rows() && ok; ++r) {
      Wide s = 0;
      for (auto j : basic_) s += static_cast<Wide>(inst_.at(r, j)) * current_[j];
      ok = s == remaining_[r];
    }
    if (ok) emit_point();
    for (auto j : basic_) current_[j] = 0;
  }

  void recurse(std::size_t k) {
    for (std::size_t r = 0; r < remaining_.size(); ++r) {
      if (remaining_[r] != 0 && !suffix_support_[k][r]) return;
    }
    if (k == walk_.size()) {
      solve_basic();
      return;
    }
    const auto j = walk_[k];
    std::int64_t bound = std::numeric_limits<std::int64_t>::max();
    for (std::size_t r = 0; r < remaining_.size(); ++r) {
      auto a = inst_.at(r, j);
      if (a > 0) bound = std::min(bound, remaining_[r] / a);
    }
    for (std::int64_t t = 0; t <= bound; ++t) {
      current_[j] = t;
      recurse(k + 1);
      for (std::size_t r = 0; r < remaining_.size(); ++r) {
        remaining_[r] -= inst_.at(r, j);
      }
    }
    for (std::size_t r = 0; r < remaining_.size(); ++r) {
      remaining_[r] += (bound + 1) * inst_.at(r, j);
    }
    current_[j] = 0;
  }

  const ToricInstance& inst_;
  std::int64_t cap_;
  std::vector<std::size_t> walk_;        // enumerated variables
  std::vector<std::size_t> basic_;       // solved variables
  std::vector<std::size_t> pivot_rows_;  // rows of the square system
  std::vector<std::vector<Wide>> adj_;
  Wide det_ = 1;
  std::vector<std::vector<char>> suffix_support_;
  std::vector<std::int64_t> remaining_;
  ExponentVector current_;
  std::vector<ExponentVector> points_;
};

}  // namespace detail

/// Exhaustive backtracking enumeration of the fiber of `degree`, visiting
/// variables in `order` (default: ascending index).
inline Fiber enumerate_fiber(const ToricInstance& inst,
                             std::vector<std::int64_t> degree,
                             std::int64_t cap,
                             std::vector<std::size_t> order = {}) {
  if (degree.size() != inst.rows()) {
    throw DimensionError("degree vector has wrong length");
  }
  for (auto x : degree) {
    if (x < 0) throw ArgumentError("negative degree");
  }
  if (cap <= 0) throw ArgumentError("fiber cap must be positive");
  if (order.empty()) {
    order.resize(inst.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else if (order.size() != inst.cols()) {
    throw DimensionError("variable order has wrong length");
  }
  detail::FiberWalker walker(inst, std::move(order), cap);
  Fiber f;
  f.points = walker.run(degree);
  f.degree = std::move(degree);
  return f;
}

/// Components of the graph on fiber points with an edge whenever two
/// monomials share a variable. Each component lists indices into
/// fiber.points, ascending; components are ordered by their first index.
inline std::vector<std::vector<std::size_t>> fiber_graph_components(
    const Fiber& fiber) {
  const auto n = fiber.points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (supports_intersect(fiber.points[i], fiber.points[j])) {
        auto a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(i);
    if (slot[r] == n) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(i);
  }
  return comps;
}

}  // namespace toribase

#endif  // TORIBASE_FIBER_HPP
