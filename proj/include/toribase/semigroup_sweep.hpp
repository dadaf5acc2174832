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

#ifndef TORIBASE_SEMIGROUP_SWEEP_HPP
#define TORIBASE_SEMIGROUP_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "toribase/semigroup_classify.hpp"

namespace toribase {

/// True when some lexicographic order (over all m! variable orders) has a
/// reduced Gröbner basis with exactly m - 1 elements.
inline bool some_lex_basis_is_ci(const NumericalSemigroup& s, const BasisSet& gens,
                                 const Limits& limits = {}) {
  std::vector<std::size_t> perm(s.m());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    if (buchberger(gens, MonomialOrder::lex(perm), limits).size() == s.m() - 1) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every minimally generated numerical semigroup with exactly m generators,
/// all at most max_generator, in lexicographic order of generator lists.
inline std::vector<NumericalSemigroup> semigroups_with_embdim(std::size_t m,
                                                              std::int64_t max_generator) {
  if (m < 2) throw ArgumentError("embedding dimension must be at least 2");
  std::vector<NumericalSemigroup> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t from) -> void {
    if (cur.size() == m) {
      std::int64_t g = 0;
      for (auto a : cur) g = std::gcd(g, a);
      if (g != 1) return;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::int64_t> others;
        for (std::size_t j = 0; j < m; ++j) {
          if (j != i) others.push_back(cur[j]);
        }
        if (semigroup_member(others, cur[i])) return;
      }
      out.emplace_back(cur);
      return;
    }
    for (std::int64_t a = from; a <= max_generator; ++a) {
      // a smaller element already generates a
      if (!cur.empty() && semigroup_member(cur, a)) continue;
      cur.push_back(a);
      self(self, a + 1);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

struct SemigroupSweepEntry {
  NumericalSemigroup semigroup;
  SemigroupClassification classification;
  bool lex_ci = false;              // some lex basis has m - 1 elements
  bool alg_generalized_robust = false;
  bool alg_robust = false;
  bool circuits_in_markov = false;
  std::size_t markov_size = 0, graver_size = 0, ugb_size = 0;
  std::vector<std::string> mismatches;
  std::string error;
};

struct SemigroupSweepReport {
  std::vector<SemigroupSweepEntry> entries;
  std::size_t semigroups = 0;
  std::size_t mismatches = 0;
  std::size_t errors = 0;
};

inline std::string generators_string(const NumericalSemigroup& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.m(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ">";
}

inline SemigroupSweepEntry check_semigroup(const NumericalSemigroup& s, const Limits& limits = {}) {
  SemigroupSweepEntry e;
  e.semigroup = s;
  try {
    const auto inst = s.instance();
    e.classification = classify_semigroup(s, limits, false);
    const auto& c = e.classification;
    const auto gens = toric_generators(inst, limits);
    e.lex_ci = some_lex_basis_is_ci(s, gens, limits);
    const auto rep = robustness_report(inst, limits);
    e.alg_generalized_robust = rep.is_generalized_robust;
    e.alg_robust = rep.is_robust;
    e.circuits_in_markov = rep.circuits.subset_of(rep.markov);
    e.markov_size = rep.markov.size();
    e.graver_size = rep.graver.size();
    e.ugb_size = rep.ugb.size();

    auto flag = [&](bool ok, const std::string& what) {
      if (!ok) e.mismatches.push_back(generators_string(s) + ": " + what);
    };
    flag(c.is_free == e.lex_ci, std::string("free is ") + (c.is_free ? "true" : "false") +
                                    " but a lex basis of size m-1 " +
                                    (e.lex_ci ? "exists" : "does not exist"));
    flag(e.alg_generalized_robust == c.unique_betti,
         "U = M disagrees with the unique Betti test");
    flag(e.alg_robust == (s.m() == 2), "|U| = mu disagrees with m = 2");
    flag(c.unique_betti == (c.betti_degrees.size() == 1),
         "unique Betti shape disagrees with the number of Betti degrees");
    if (s.m() == 3) {
      flag(!e.circuits_in_markov || c.betti_divisible,
           "circuits inside M but not Betti divisible");
      flag(c.is_free == c.is_ci, "free disagrees with complete intersection");
    }
  } catch (const InconsistencyError& ex) {
    e.mismatches.push_back(generators_string(s) + ": " + ex.what());
  } catch (const ResourceLimitError& ex) {
    e.error = ex.what();
  }
  return e;
}

/// Checks every semigroup with embedding dimension min_embdim..max_embdim
/// and generators at most max_generator. Entry order is deterministic.
inline SemigroupSweepReport verify_semigroup_theorems(std::int64_t max_generator,
                                                      std::size_t max_embdim,
                                                      const Limits& limits = {},
                                                      unsigned threads = 0,
                                                      std::size_t min_embdim = 2) {
  if (max_generator < 3) throw ArgumentError("max generator must be at least 3");
  if (max_embdim > 6) throw ArgumentError("semigroup sweep supports embedding dimension at most 6");
  std::vector<NumericalSemigroup> all;
  for (std::size_t m = std::max<std::size_t>(2, min_embdim); m <= max_embdim; ++m) {
    for (auto& s : semigroups_with_embdim(m, max_generator)) all.push_back(std::move(s));
  }
  SemigroupSweepReport rep;
  rep.entries.resize(all.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < all.size();) {
      rep.entries[i] = check_semigroup(all[i], limits);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  rep.semigroups = all.size();
  for (const auto& e : rep.entries) {
    rep.mismatches += e.mismatches.size();
    rep.errors += e.error.empty() ? 0 : 1;
  }
  return rep;
}

}  // namespace toribase

#endif  // TORIBASE_SEMIGROUP_SWEEP_HPP
