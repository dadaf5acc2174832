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

#ifndef TORIBASE_BINOMIAL_HPP
#define TORIBASE_BINOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toribase/errors.hpp"

namespace toribase {

/// Monomial exponents (all entries >= 0) or signed lattice vectors.
using ExponentVector = std::vector<std::int64_t>;
using KernelVector = std::vector<std::int64_t>;

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ResourceLimitError("64-bit integer overflow");
  }
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw ResourceLimitError("64-bit integer overflow");
  }
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ResourceLimitError("64-bit integer overflow");
  }
  return r;
}

}  // namespace checked

inline std::int64_t total_degree(std::span<const std::int64_t> u) {
  std::int64_t s = 0;
  for (auto x : u) s = checked::add(s, x);
  return s;
}

inline bool divides(std::span<const std::int64_t> a,
                    std::span<const std::int64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool supports_intersect(std::span<const std::int64_t> a,
                               std::span<const std::int64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return true;
  }
  return false;
}

inline ExponentVector positive_part(std::span<const std::int64_t> v) {
  ExponentVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] > 0 ? v[i] : 0;
  return r;
}

inline ExponentVector negative_part(std::span<const std::int64_t> v) {
  ExponentVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] < 0 ? -v[i] : 0;
  return r;
}

/// Flips the sign so that the first nonzero entry is positive.
inline KernelVector canonical_sign(KernelVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
  if (it != v.end() && *it < 0) {
    for (auto& x : v) x = -x;
  }
  return v;
}

inline std::int64_t content(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

/// x^plus - x^minus with disjoint supports, stored in canonical orientation
/// (plus - minus has a positive first nonzero entry).
class Binomial {
 public:
  Binomial() = default;

  /// Builds from two exponent vectors; common factors are divided out and
  /// the orientation canonicalized. Throws if the result would be zero.
  Binomial(ExponentVector u, ExponentVector v) {
    if (u.size() != v.size()) {
      throw DimensionError("binomial sides have different lengths");
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] < 0 || v[i] < 0) {
        throw ArgumentError("negative exponent in binomial");
      }
      auto c = std::min(u[i], v[i]);
      u[i] -= c;
      v[i] -= c;
    }
    if (u == v) throw ArgumentError("zero binomial");
    plus_ = std::move(u);
    minus_ = std::move(v);
    for (std::size_t i = 0; i < plus_.size(); ++i) {
      if (plus_[i] != minus_[i]) {
        if (plus_[i] < minus_[i]) std::swap(plus_, minus_);
        break;
      }
    }
  }

  static Binomial from_vector(std::span<const std::int64_t> diff) {
    return Binomial(positive_part(diff), negative_part(diff));
  }

  const ExponentVector& plus() const noexcept { return plus_; }
  const ExponentVector& minus() const noexcept { return minus_; }
  std::size_t size() const noexcept { return plus_.size(); }

  /// plus - minus, the tilde vector of the binomial.
  KernelVector vector() const {
    KernelVector r(plus_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = plus_[i] - minus_[i];
    return r;
  }

  /// Sum of the absolute entries of plus - minus.
  std::int64_t degree() const {
    return total_degree(plus_) + total_degree(minus_);
  }

  bool is_quadric() const {
    return total_degree(plus_) == 2 && total_degree(minus_) == 2;
  }

  friend bool operator==(const Binomial&, const Binomial&) = default;

  friend bool operator<(const Binomial& a, const Binomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.plus_ != b.plus_) return a.plus_ < b.plus_;
    return a.minus_ < b.minus_;
  }

 private:
  ExponentVector plus_;
  ExponentVector minus_;
};

/// Renders a monomial as "x1^3*x3", or "1" for the constant.
inline std::string monomial_string(std::span<const std::int64_t> u,
                                   std::string_view var = "x") {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += var;
    s += std::to_string(i + 1);
    if (u[i] != 1) s += "^" + std::to_string(u[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_string(const Binomial& b, std::string_view var = "x") {
  return monomial_string(b.plus(), var) + " - " +
         monomial_string(b.minus(), var);
}

inline std::ostream& operator<<(std::ostream& os, const Binomial& b) {
  return os << to_string(b);
}

enum class BasisKind { circuits, graver, ugb, markov_universal, generators };

inline std::string_view to_string(BasisKind k) {
  switch (k) {
    case BasisKind::circuits: return "circuits";
    case BasisKind::graver: return "graver";
    case BasisKind::ugb: return "ugb";
    case BasisKind::markov_universal: return "markov";
    case BasisKind::generators: return "generators";
  }
  return "?";
}

/// A canonically sorted, duplicate-free set of binomials.
class BasisSet {
 public:
  BasisSet() = default;
  BasisSet(BasisKind kind, std::vector<Binomial> elems) : kind_(kind) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    elements_ = std::move(elems);
  }

  BasisKind kind() const noexcept { return kind_; }
  const std::vector<Binomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(const Binomial& b) const {
    return std::binary_search(elements_.begin(), elements_.end(), b);
  }

  bool subset_of(const BasisSet& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(),
                         elements_.begin(), elements_.end());
  }

  /// Set equality, ignoring the kind tag.
  bool same_elements(const BasisSet& other) const {
    return elements_ == other.elements_;
  }

 private:
  BasisKind kind_ = BasisKind::generators;
  std::vector<Binomial> elements_;
};

}  // namespace toribase

#endif  // TORIBASE_BINOMIAL_HPP
