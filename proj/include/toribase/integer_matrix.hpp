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

// Exact integer linear algebra on small dense matrices: rank, Hermite
// normal form, integer kernels and LLL reduction. All intermediate values
// are GMP integers; results are converted back to int64 with range checks.

#ifndef TORIBASE_INTEGER_MATRIX_HPP
#define TORIBASE_INTEGER_MATRIX_HPP

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "toribase/errors.hpp"

namespace toribase::intmat {

using ZRow = std::vector<mpz_class>;
using ZMatrix = std::vector<ZRow>;
using Int64Matrix = std::vector<std::vector<std::int64_t>>;

inline ZMatrix to_z(const Int64Matrix& m) {
  ZMatrix r;
  r.reserve(m.size());
  for (const auto& row : m) {
    ZRow zr;
    zr.reserve(row.size());
    for (auto x : row) zr.emplace_back(static_cast<long>(x));
    r.push_back(std::move(zr));
  }
  return r;
}

inline std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) {
    throw ResourceLimitError("integer does not fit in 64 bits");
  }
  return z.get_si();
}

inline Int64Matrix to_int64(const ZMatrix& m) {
  Int64Matrix r;
  r.reserve(m.size());
  for (const auto& row : m) {
    std::vector<std::int64_t> ir;
    ir.reserve(row.size());
    for (const auto& z : row) ir.push_back(to_int64(z));
    r.push_back(std::move(ir));
  }
  return r;
}

/// Rank over Q via fraction-free (Bareiss) elimination.
inline std::size_t rank(ZMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

inline std::size_t rank(const Int64Matrix& a) { return rank(to_z(a)); }

/// Row-style Hermite normal form of the lattice spanned by the rows.
/// Returns only the nonzero rows; pivots are positive and entries above each
/// pivot are reduced into [0, pivot). Two row sets span the same lattice iff
/// their normal forms are equal.
inline ZMatrix hermite_normal_form(ZMatrix a) {
  if (a.empty()) return a;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a[i][c] != 0 &&
            (best == rows || abs(a[i][c]) < abs(a[best][c]))) {
          best = i;
        }
      }
      if (best == rows) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (std::size_t j = c; j < cols; ++j) a[r][j] = -a[r][j];
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0) {
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
      }
    }
    ++r;
  }
  a.resize(r);
  return a;
}

/// Lattice basis of {x in Z^cols : a x = 0}. The basis is saturated: it
/// spans every integer kernel vector, not a finite-index sublattice.
inline ZMatrix integer_kernel(const ZMatrix& a, std::size_t cols) {
  const std::size_t rows = a.size();
  // Work on [a^T | I]; unimodular row operations keep the identity part a
  // basis of Z^cols, so the rows whose a^T part vanishes span the kernel.
  ZMatrix t(cols, ZRow(rows + cols));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < rows; ++j) t[i][j] = a[j][i];
    t[i][rows + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < rows && r < cols; ++c) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t i = r; i < cols; ++i) {
        if (t[i][c] != 0 &&
            (best == cols || abs(t[i][c]) < abs(t[best][c]))) {
          best = i;
        }
      }
      if (best == cols) break;
      std::swap(t[r], t[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < cols; ++i) {
        if (t[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), t[i][c].get_mpz_t(), t[r][c].get_mpz_t());
        for (std::size_t j = c; j < rows + cols; ++j) t[i][j] -= q * t[r][j];
        if (t[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (t[r][c] != 0) ++r;
  }
  ZMatrix kernel;
  for (std::size_t i = r; i < cols; ++i) {
    kernel.emplace_back(t[i].begin() + static_cast<std::ptrdiff_t>(rows),
                        t[i].end());
  }
  return kernel;
}

/// LLL reduction (delta = 3/4) of linearly independent rows, exact.
inline ZMatrix lll_reduce(ZMatrix b) {
  const std::size_t k = b.size();
  if (k < 2) return b;
  const std::size_t dim = b[0].size();
  auto dot = [dim](const auto& x, const auto& y) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < dim; ++j) s += mpq_class(x[j]) * y[j];
    return s;
  };
  std::vector<std::vector<mpq_class>> bstar;
  std::vector<std::vector<mpq_class>> mu;
  std::vector<mpq_class> norm;
  auto gram_schmidt = [&] {
    bstar.assign(k, std::vector<mpq_class>(dim));
    mu.assign(k, std::vector<mpq_class>(k));
    norm.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < dim; ++j) bstar[i][j] = b[i][j];
      for (std::size_t l = 0; l < i; ++l) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < dim; ++j) s += mpq_class(b[i][j]) * bstar[l][j];
        mu[i][l] = s / norm[l];
        for (std::size_t j = 0; j < dim; ++j) bstar[i][j] -= mu[i][l] * bstar[l][j];
      }
      norm[i] = dot(bstar[i], bstar[i]);
    }
  };
  gram_schmidt();
  const mpq_class delta(3, 4);
  std::size_t i = 1;
  while (i < k) {
    for (std::size_t l = i; l-- > 0;) {
      mpq_class m = mu[i][l];
      // nearest integer
      mpz_class q;
      mpq_class shifted = m + mpq_class(1, 2);
      mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(),
                 shifted.get_den_mpz_t());
      if (q != 0) {
        for (std::size_t j = 0; j < dim; ++j) b[i][j] -= q * b[l][j];
        gram_schmidt();
      }
    }
    if (norm[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]) {
      ++i;
    } else {
      std::swap(b[i], b[i - 1]);
      gram_schmidt();
      i = i > 1 ? i - 1 : 1;
    }
  }
  return b;
}

}  // namespace toribase::intmat

#endif  // TORIBASE_INTEGER_MATRIX_HPP
