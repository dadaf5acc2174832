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

#ifndef TORIBASE_ORDER_HPP
#define TORIBASE_ORDER_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "toribase/binomial.hpp"
#include "toribase/errors.hpp"

namespace toribase {

enum class Cmp { less = -1, equal = 0, greater = 1 };

/// A term order on monomials in m variables.
///
/// `perm` lists variables from most to least significant, so lex with
/// perm = (1, 0, 2) means x2 > x1 > x3. Weight orders compare w.u first and
/// fall back to the tiebreak order; weights are positive rationals, stored
/// scaled to integers.
class MonomialOrder {
 public:
  enum class Kind { lex, graded_lex, graded_revlex, weight };

  static MonomialOrder lex(std::vector<std::size_t> perm) {
    return MonomialOrder(Kind::lex, std::move(perm));
  }
  static MonomialOrder graded_lex(std::vector<std::size_t> perm) {
    return MonomialOrder(Kind::graded_lex, std::move(perm));
  }
  static MonomialOrder graded_revlex(std::vector<std::size_t> perm) {
    return MonomialOrder(Kind::graded_revlex, std::move(perm));
  }
  static MonomialOrder lex(std::size_t m) { return lex(identity(m)); }
  static MonomialOrder graded_lex(std::size_t m) { return graded_lex(identity(m)); }
  static MonomialOrder graded_revlex(std::size_t m) {
    return graded_revlex(identity(m));
  }

  static MonomialOrder weight(const std::vector<mpq_class>& w,
                              MonomialOrder tiebreak) {
    if (w.size() != tiebreak.size()) {
      throw DimensionError("weight vector length differs from tiebreak order");
    }
    mpz_class den = 1;
    for (const auto& x : w) {
      if (x <= 0) throw ArgumentError("weights must be positive");
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<std::int64_t> iw;
    for (const auto& x : w) {
      mpz_class v = x.get_num() * (den / x.get_den());
      if (!v.fits_slong_p()) throw ResourceLimitError("weight too large");
      iw.push_back(v.get_si());
    }
    return weight_int(std::move(iw), std::move(tiebreak));
  }

  static MonomialOrder weight_int(std::vector<std::int64_t> w,
                                  MonomialOrder tiebreak) {
    if (w.size() != tiebreak.size()) {
      throw DimensionError("weight vector length differs from tiebreak order");
    }
    for (auto x : w) {
      if (x <= 0) throw ArgumentError("weights must be positive");
    }
    MonomialOrder o(Kind::weight, tiebreak.perm_);
    o.weights_ = std::move(w);
    o.tiebreak_ = std::make_shared<const MonomialOrder>(std::move(tiebreak));
    return o;
  }

  /// Positive weight, ties broken by reverse lex along `perm` alone (no
  /// total-degree step). Needed when the weight is not a multiple of the
  /// total degree, e.g. for saturation by the last variable of `perm`.
  static MonomialOrder weight_revlex(std::vector<std::int64_t> w,
                                     std::vector<std::size_t> perm) {
    if (w.size() != perm.size()) {
      throw DimensionError("weight vector length differs from variable order");
    }
    for (auto x : w) {
      if (x <= 0) throw ArgumentError("weights must be positive");
    }
    MonomialOrder o(Kind::weight, std::move(perm));
    o.weights_ = std::move(w);
    return o;
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return perm_.size(); }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }

  Cmp compare(std::span<const std::int64_t> u,
              std::span<const std::int64_t> v) const {
    if (u.size() != perm_.size() || v.size() != perm_.size()) {
      throw DimensionError("monomial length differs from order size");
    }
    return compare_unchecked(u, v);
  }

  Cmp compare_unchecked(std::span<const std::int64_t> u,
                        std::span<const std::int64_t> v) const {
    switch (kind_) {
      case Kind::lex:
        return lex_cmp(u, v);
      case Kind::graded_lex: {
        auto c = three_way(sum(u), sum(v));
        return c != Cmp::equal ? c : lex_cmp(u, v);
      }
      case Kind::graded_revlex: {
        auto c = three_way(sum(u), sum(v));
        return c != Cmp::equal ? c : revlex_cmp(u, v);
      }
      case Kind::weight: {
        std::int64_t wu = 0, wv = 0;
        for (std::size_t j = 0; j < u.size(); ++j) {
          wu = checked::add(wu, checked::mul(weights_[j], u[j]));
          wv = checked::add(wv, checked::mul(weights_[j], v[j]));
        }
        auto c = three_way(wu, wv);
        if (c != Cmp::equal) return c;
        if (tiebreak_) return tiebreak_->compare_unchecked(u, v);
        return revlex_cmp(u, v);
      }
    }
    return Cmp::equal;
  }

  bool greater(std::span<const std::int64_t> u,
               std::span<const std::int64_t> v) const {
    return compare_unchecked(u, v) == Cmp::greater;
  }

  std::string describe() const {
    std::string vars;
    for (auto j : perm_) {
      if (!vars.empty()) vars += ">";
      vars += "x" + std::to_string(j + 1);
    }
    switch (kind_) {
      case Kind::lex: return "lex(" + vars + ")";
      case Kind::graded_lex: return "grlex(" + vars + ")";
      case Kind::graded_revlex: return "grevlex(" + vars + ")";
      case Kind::weight: {
        std::string w;
        for (auto x : weights_) {
          if (!w.empty()) w += ",";
          w += std::to_string(x);
        }
        if (!tiebreak_) return "weight(" + w + "; revlex(" + vars + "))";
        return "weight(" + w + "; " + tiebreak_->describe() + ")";
      }
    }
    return "?";
  }

  static std::vector<std::size_t> identity(std::size_t m) {
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
  }

 private:
  MonomialOrder(Kind k, std::vector<std::size_t> perm)
      : kind_(k), perm_(std::move(perm)) {
    std::vector<std::size_t> s = perm_;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != i) throw ArgumentError("variable order is not a permutation");
    }
  }

  static Cmp three_way(std::int64_t a, std::int64_t b) {
    return a < b ? Cmp::less : (a > b ? Cmp::greater : Cmp::equal);
  }

  static std::int64_t sum(std::span<const std::int64_t> u) {
    std::int64_t s = 0;
    for (auto x : u) s += x;
    return s;
  }

  Cmp revlex_cmp(std::span<const std::int64_t> u,
                 std::span<const std::int64_t> v) const {
    for (std::size_t k = perm_.size(); k-- > 0;) {
      auto j = perm_[k];
      if (u[j] != v[j]) return u[j] < v[j] ? Cmp::greater : Cmp::less;
    }
    return Cmp::equal;
  }

  Cmp lex_cmp(std::span<const std::int64_t> u,
              std::span<const std::int64_t> v) const {
    for (auto j : perm_) {
      if (u[j] != v[j]) return u[j] > v[j] ? Cmp::greater : Cmp::less;
    }
    return Cmp::equal;
  }

  Kind kind_;
  std::vector<std::size_t> perm_;
  std::vector<std::int64_t> weights_;
  std::shared_ptr<const MonomialOrder> tiebreak_;
};

inline Cmp compare(const MonomialOrder& order, std::span<const std::int64_t> u,
                   std::span<const std::int64_t> v) {
  return order.compare(u, v);
}

}  // namespace toribase

#endif  // TORIBASE_ORDER_HPP
