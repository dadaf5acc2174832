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

#ifndef TORIBASE_INSTANCE_HPP
#define TORIBASE_INSTANCE_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "toribase/binomial.hpp"
#include "toribase/errors.hpp"
#include "toribase/integer_matrix.hpp"

namespace toribase {

enum class InstanceOrigin { matrix, graph, numsgp };

inline std::string_view to_string(InstanceOrigin o) {
  switch (o) {
    case InstanceOrigin::matrix: return "matrix";
    case InstanceOrigin::graph: return "graph";
    case InstanceOrigin::numsgp: return "numsgp";
  }
  return "?";
}

/// The point configuration A: an n x m nonnegative integer matrix whose
/// columns a_1..a_m are the generators. Immutable after construction.
class ToricInstance {
 public:
  using Matrix = std::vector<std::vector<std::int64_t>>;

  /// `rows` is n x m. Rejects negative entries, zero columns and repeated
  /// columns.
  explicit ToricInstance(Matrix rows,
                         InstanceOrigin origin = InstanceOrigin::matrix)
      : rows_(std::move(rows)), origin_(origin) {
    if (rows_.empty() || rows_[0].empty()) {
      throw ArgumentError("instance needs at least one row and one column");
    }
    const auto m = rows_[0].size();
    for (const auto& r : rows_) {
      if (r.size() != m) throw DimensionError("ragged matrix");
      for (auto x : r) {
        if (x < 0) throw ArgumentError("negative matrix entry");
      }
    }
    std::set<std::vector<std::int64_t>> seen;
    for (std::size_t j = 0; j < m; ++j) {
      auto c = column(j);
      if (std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; })) {
        throw ArgumentError("column " + std::to_string(j + 1) + " is zero");
      }
      if (!seen.insert(c).second) {
        throw ArgumentError("column " + std::to_string(j + 1) +
                            " duplicates an earlier column");
      }
    }
    rank_ = intmat::rank(rows_);
  }

  /// 1 x m instance of a list of positive integers.
  static ToricInstance from_generators(std::span<const std::int64_t> gens,
                                       InstanceOrigin origin =
                                           InstanceOrigin::numsgp) {
    return ToricInstance(Matrix{std::vector<std::int64_t>(gens.begin(),
                                                          gens.end())},
                         origin);
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return rows_[0].size(); }
  std::size_t rank() const noexcept { return rank_; }
  InstanceOrigin origin() const noexcept { return origin_; }
  const Matrix& matrix() const noexcept { return rows_; }
  std::int64_t at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  std::vector<std::int64_t> column(std::size_t j) const {
    std::vector<std::int64_t> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i][j];
    return c;
  }

  /// Sum of each column; a strictly positive grading for which every
  /// A-homogeneous polynomial is homogeneous.
  std::vector<std::int64_t> column_sums() const {
    std::vector<std::int64_t> w(cols(), 0);
    for (const auto& r : rows_) {
      for (std::size_t j = 0; j < r.size(); ++j) w[j] = checked::add(w[j], r[j]);
    }
    return w;
  }

  friend bool operator==(const ToricInstance& a, const ToricInstance& b) {
    return a.rows_ == b.rows_;
  }

 private:
  Matrix rows_;
  InstanceOrigin origin_;
  std::size_t rank_ = 0;
};

/// deg_A(x^w) = sum_i w_i a_i.
inline std::vector<std::int64_t> a_degree(const ToricInstance& inst,
                                          std::span<const std::int64_t> w) {
  if (w.size() != inst.cols()) {
    throw DimensionError("exponent vector has length " +
                         std::to_string(w.size()) + ", expected " +
                         std::to_string(inst.cols()));
  }
  std::vector<std::int64_t> b(inst.rows(), 0);
  for (std::size_t r = 0; r < inst.rows(); ++r) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] != 0) b[r] = checked::add(b[r], checked::mul(w[j], inst.at(r, j)));
    }
  }
  return b;
}

inline bool in_ideal(const ToricInstance& inst, const Binomial& b) {
  return a_degree(inst, b.plus()) == a_degree(inst, b.minus());
}

/// Height m - rank of the toric ideal.
inline std::size_t ideal_height(const ToricInstance& inst) {
  return inst.cols() - inst.rank();
}

/// Instance on the selected columns (0-based, any order; kept sorted).
inline ToricInstance restrict(const ToricInstance& inst,
                              std::vector<std::size_t> subset) {
  if (subset.empty()) throw ArgumentError("empty column subset");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.back() >= inst.cols()) throw ArgumentError("column index out of range");
  ToricInstance::Matrix m(inst.rows());
  for (std::size_t r = 0; r < inst.rows(); ++r) {
    for (auto j : subset) m[r].push_back(inst.at(r, j));
  }
  return ToricInstance(std::move(m), inst.origin());
}

/// Binomials of `basis` supported on `subset`, renumbered to the subset's
/// variables.
inline BasisSet restrict_basis(const BasisSet& basis,
                               std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<Binomial> kept;
  for (const auto& b : basis) {
    bool inside = true;
    for (std::size_t j = 0; j < b.size() && inside; ++j) {
      if ((b.plus()[j] != 0 || b.minus()[j] != 0) &&
          !std::binary_search(subset.begin(), subset.end(), j)) {
        inside = false;
      }
    }
    if (!inside) continue;
    ExponentVector p, q;
    for (auto j : subset) {
      p.push_back(b.plus()[j]);
      q.push_back(b.minus()[j]);
    }
    kept.emplace_back(std::move(p), std::move(q));
  }
  return BasisSet(basis.kind(), std::move(kept));
}

}  // namespace toribase

#endif  // TORIBASE_INSTANCE_HPP
