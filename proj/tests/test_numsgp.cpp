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

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace toribase {
namespace {

using testing::bin;
using testing::pure;
using V = std::vector<std::int64_t>;

NumericalSemigroup ns(V g) { return NumericalSemigroup(std::move(g)); }

// Plain reachability over 0..t, the reference for membership.
bool member_oracle(const V& gens, std::int64_t t) {
  std::vector<char> ok(static_cast<std::size_t>(t) + 1, 0);
  ok[0] = 1;
  for (std::int64_t v = 1; v <= t; ++v) {
    for (auto a : gens) {
      if (a <= v && ok[static_cast<std::size_t>(v - a)]) ok[static_cast<std::size_t>(v)] = 1;
    }
  }
  return ok[static_cast<std::size_t>(t)];
}

std::int64_t dot(const V& c, const V& g) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * g[i];
  return s;
}

TEST(Semigroup, RejectsInvalidGeneratorLists) {
  EXPECT_THROW(ns({5}), ArgumentError);
  EXPECT_THROW(ns({5, 3}), ArgumentError);
  EXPECT_THROW(ns({4, 6}), ArgumentError);
  EXPECT_THROW(ns({2, 3, 5}), ArgumentError);  // 5 = 2 + 3
  EXPECT_NO_THROW(ns({8, 9, 10, 12}));
}

TEST(Normalize, Goldens) {
  auto [d, s] = make_semigroup({4, 6, 10});
  EXPECT_EQ(d, 2);
  EXPECT_EQ(s.generators(), (V{2, 3}));
  auto [d2, s2] = make_semigroup({12, 10, 9, 8});
  EXPECT_EQ(d2, 1);
  EXPECT_EQ(s2.generators(), (V{8, 9, 10, 12}));
  EXPECT_EQ(make_semigroup({10, 14, 15, 21}).second.generators(), (V{10, 14, 15, 21}));
  EXPECT_THROW(make_semigroup({4, 8}), ArgumentError);
  EXPECT_THROW(make_semigroup({7, 7, 7}), ArgumentError);
}

TEST(Membership, Goldens) {
  EXPECT_FALSE(contains(ns({4, 5, 6}), 7));
  EXPECT_TRUE(contains(ns({4, 5, 6}), 0));
  const auto c = semigroup_member(V{8, 10, 12}, 18);
  ASSERT_TRUE(c);
  EXPECT_EQ(dot(*c, V{8, 10, 12}), 18);
  EXPECT_EQ(lex_max_decomposition(V{8, 10, 12}, 18), (V{1, 1, 0}));
  EXPECT_FALSE(semigroup_member(V{4, 5, 6}, -1));
}

TEST(Membership, TableAndResidueMethodsAgreeWithReachability) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 200; ++t) {
    V gens(2 + rng() % 3);
    for (auto& a : gens) a = 2 + static_cast<std::int64_t>(rng() % 40);
    const auto target = static_cast<std::int64_t>(rng() % 400);
    const bool want = member_oracle(gens, target);
    const auto a = detail::member_by_table(gens, target);
    const auto b = detail::member_by_residues(gens, target);
    EXPECT_EQ(a.has_value(), want);
    EXPECT_EQ(b.has_value(), want);
    if (a) {
      EXPECT_EQ(dot(*a, gens), target);
    }
    if (b) {
      EXPECT_EQ(dot(*b, gens), target);
    }
  }
}

TEST(Membership, LargeTargetsUseResidues) {
  const V g{390, 546, 770, 1155};
  const std::int64_t big = 3'000'000'000;  // above the table cap
  const auto r = semigroup_member(g, big);
  ASSERT_TRUE(r);
  EXPECT_EQ(dot(*r, g), big);
  EXPECT_EQ(semigroup_member(g, 30030).has_value(), member_oracle(g, 30030));
}

TEST(Freeness, EightNineTenTwelve) {
  const auto s = ns({8, 9, 10, 12});
  const auto bad = free_for_arrangement(s, V{8, 9, 10, 12});
  EXPECT_FALSE(bad.certificate);
  EXPECT_EQ(bad.failing_level, std::optional<std::size_t>(0));

  const auto good = free_for_arrangement(s, V{9, 10, 8, 12});
  ASSERT_TRUE(good.certificate);
  const auto& lv = good.certificate->levels;
  ASSERT_EQ(lv.size(), 3u);
  EXPECT_EQ(lv[0].mu, 18);
  EXPECT_EQ(lv[1].mu, 20);
  EXPECT_EQ(lv[2].mu, 24);
  // alpha is indexed like the generators (8, 9, 10, 12)
  EXPECT_EQ(lv[0].alpha, (V{1, 0, 1, 0}));  // 18 = 8 + 10
  EXPECT_EQ(lv[1].alpha, (V{1, 0, 0, 1}));  // 20 = 8 + 12
  EXPECT_EQ(lv[2].alpha, (V{0, 0, 0, 2}));  // 24 = 2 * 12

  const auto cert = is_free(s);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->arrangement, (V{9, 10, 8, 12}));
}

TEST(Freeness, TenFourteenFifteenTwentyOneHasNoFreeArrangement) {
  const auto s = ns({10, 14, 15, 21});
  V arr = s.generators();
  int tried = 0;
  do {
    EXPECT_FALSE(free_for_arrangement(s, arr).certificate);
    ++tried;
  } while (std::next_permutation(arr.begin(), arr.end()));
  EXPECT_EQ(tried, 24);
  EXPECT_FALSE(is_free(s));
}

TEST(Freeness, SixTenFifteen) {
  const auto cert = is_free(ns({6, 10, 15}));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->arrangement, (V{6, 10, 15}));
  EXPECT_EQ(cert->levels[0].mu, 30);
  EXPECT_EQ(cert->levels[0].alpha, (V{0, 3, 0}));
  EXPECT_EQ(cert->levels[1].mu, 30);
  EXPECT_EQ(cert->levels[1].alpha, (V{0, 0, 2}));
}

TEST(Freeness, SearchAgreesWithExhaustiveArrangements) {
  for (std::size_t m = 3; m <= 4; ++m) {
    for (const auto& s : semigroups_with_embdim(m, m == 3 ? 16 : 12)) {
      V arr = s.generators();
      std::optional<V> first;
      do {
        if (free_for_arrangement(s, arr).certificate) {
          first = arr;
          break;
        }
      } while (std::next_permutation(arr.begin(), arr.end()));
      const auto cert = is_free(s);
      ASSERT_EQ(cert.has_value(), first.has_value()) << generators_string(s);
      if (cert) {
        EXPECT_EQ(cert->arrangement, *first);
      }
    }
  }
}

TEST(FreeGenerators, Goldens) {
  const auto s = ns({8, 9, 10, 12});
  const auto g = free_generators(s, *free_for_arrangement(s, V{9, 10, 8, 12}).certificate);
  EXPECT_TRUE(g.same_elements(testing::basis(
      {bin({0, 2, 0, 0}, {1, 0, 1, 0}), bin({0, 0, 2, 0}, {1, 0, 0, 1}), pure(4, 0, 3, 3, 2)})));
  EXPECT_TRUE(free_generators(ns({2, 3}), *is_free(ns({2, 3}))).same_elements(testing::basis({pure(2, 0, 3, 1, 2)})));
  const auto t = ns({6, 10, 15});
  const auto h = free_generators(t, *is_free(t));
  EXPECT_TRUE(h.same_elements(testing::basis({pure(3, 0, 5, 1, 3), pure(3, 1, 3, 2, 2)})));
  EXPECT_TRUE(ideal_equal(h, toric_generators(t.instance())));
}

// m - 1 binomials with pure-power leads in distinct variables form a lex
// Gröbner basis of the toric ideal, and their tilde vectors span ker.
TEST(FreeGenerators, PropertiesOnAllFreeSemigroups) {
  std::size_t seen = 0;
  for (std::size_t m = 2; m <= 4; ++m) {
    for (const auto& s : semigroups_with_embdim(m, m == 4 ? 13 : 18)) {
      const auto cert = is_free(s);
      if (!cert) continue;
      ++seen;
      const auto gens = free_generators(s, *cert);
      ASSERT_EQ(gens.size(), s.m() - 1);
      const auto inst = s.instance();
      const auto gb = buchberger(gens, MonomialOrder::lex(arrangement_indices(s, cert->arrangement)));
      ASSERT_EQ(gb.size(), s.m() - 1);
      std::set<std::size_t> lead_vars;
      for (const auto& e : gb.elements()) {
        std::size_t support = 0;
        for (std::size_t j = 0; j < e.lead.size(); ++j) {
          if (e.lead[j] != 0) {
            ++support;
            lead_vars.insert(j);
          }
        }
        EXPECT_EQ(support, 1u);
      }
      EXPECT_EQ(lead_vars.size(), s.m() - 1);
      EXPECT_TRUE(ideal_equal(gens, toric_generators(inst)));
      EXPECT_TRUE(same_lattice(tilde_vectors(gens), kernel_lattice(inst)));
    }
  }
  EXPECT_GT(seen, 50u);
}

// If d = gcd(a_2..a_m) and d a_1 lies in <a_2..a_m>, then I_S is the
// extension of the ideal of <a_2/d..a_m/d> plus x_1^d - x^alpha.
TEST(FreeGenerators, GluingIdentity) {
  std::size_t checked = 0;
  for (const auto& s : semigroups_with_embdim(3, 20)) {
    for (std::size_t first = 0; first < s.m(); ++first) {
      V rest;
      std::vector<std::size_t> rest_idx;
      std::int64_t d = 0;
      for (std::size_t j = 0; j < s.m(); ++j) {
        if (j == first) continue;
        rest.push_back(s[j]);
        rest_idx.push_back(j);
        d = std::gcd(d, s[j]);
      }
      const auto alpha = semigroup_member(rest, d * s[first]);
      if (d == 1 || !alpha) continue;
      V reduced;
      for (auto a : rest) reduced.push_back(a / d);
      std::vector<Binomial> gens;
      for (const auto& b : toric_generators(ToricInstance::from_generators(reduced))) {
        ExponentVector u(s.m(), 0), v(s.m(), 0);
        for (std::size_t k = 0; k < rest_idx.size(); ++k) {
          u[rest_idx[k]] = b.plus()[k];
          v[rest_idx[k]] = b.minus()[k];
        }
        gens.emplace_back(u, v);
      }
      ExponentVector lead(s.m(), 0), trail(s.m(), 0);
      lead[first] = d;
      for (std::size_t k = 0; k < rest_idx.size(); ++k) trail[rest_idx[k]] = (*alpha)[k];
      gens.emplace_back(lead, trail);
      EXPECT_TRUE(ideal_equal(BasisSet(BasisKind::generators, gens), toric_generators(s.instance())))
          << generators_string(s);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST(Lattice, GeneratorsSpanTheKernel) {
  for (const auto& s : semigroups_with_embdim(3, 15)) {
    const auto inst = s.instance();
    const auto k = kernel_lattice(inst);
    EXPECT_TRUE(same_lattice(tilde_vectors(toric_generators(inst)), k));
    EXPECT_TRUE(same_lattice(tilde_vectors(universal_markov(inst).basis), k));
  }
}

TEST(CriticalExponents, Goldens) {
  auto ns_of = [](const CriticalData& c) {
    V out;
    for (const auto& e : c) out.push_back(e.n);
    return out;
  };
  const auto c = critical_exponents(ns({4, 5, 6}));
  EXPECT_EQ(ns_of(c), (V{3, 2, 2}));
  EXPECT_EQ(c[0].witness, (V{0, 0, 2}));  // 12 = 2 * 6
  EXPECT_EQ(c[1].witness, (V{1, 0, 1}));  // 10 = 4 + 6
  EXPECT_EQ(c[2].witness, (V{3, 0, 0}));  // 12 = 3 * 4
  EXPECT_EQ(ns_of(critical_exponents(ns({2, 3}))), (V{3, 2}));
  EXPECT_EQ(ns_of(critical_exponents(ns({10, 12, 15}))), (V{3, 5, 2}));
}

TEST(CriticalExponents, AreMinimal) {
  for (const auto& s : semigroups_with_embdim(4, 14)) {
    const auto c = critical_exponents(s);
    for (std::size_t i = 0; i < s.m(); ++i) {
      V others;
      for (std::size_t j = 0; j < s.m(); ++j) {
        if (j != i) others.push_back(s[j]);
      }
      EXPECT_TRUE(member_oracle(others, c[i].n * s[i]));
      EXPECT_FALSE(member_oracle(others, (c[i].n - 1) * s[i]) && c[i].n > 1);
      EXPECT_EQ(dot(c[i].witness, s.generators()), c[i].n * s[i]);
      EXPECT_EQ(c[i].witness[i], 0);
    }
  }
}

TEST(SemigroupCircuits, Goldens) {
  EXPECT_TRUE(semigroup_circuits(ns({2, 3})).same_elements(testing::basis({pure(2, 0, 3, 1, 2)})));
  EXPECT_TRUE(semigroup_circuits(ns({10, 12, 15}))
                  .same_elements(testing::basis({pure(3, 0, 6, 1, 5), pure(3, 0, 3, 2, 2), pure(3, 1, 5, 2, 4)})));
  // <15,10,6> in sorted order is <6,10,15>: x1^5 - x2^3, x1^5 - x3^2, x2^3 - x3^2
  EXPECT_TRUE(semigroup_circuits(ns({6, 10, 15}))
                  .same_elements(testing::basis({pure(3, 0, 5, 1, 3), pure(3, 0, 5, 2, 2), pure(3, 1, 3, 2, 2)})));
  // unsorted instance, as written
  EXPECT_TRUE(circuits(testing::sg({15, 10, 6}))
                  .same_elements(testing::basis({pure(3, 0, 2, 1, 3), pure(3, 0, 2, 2, 5), pure(3, 1, 3, 2, 5)})));
}

TEST(SemigroupCircuits, MatchTheMatroidCircuits) {
  for (const auto& s : semigroups_with_embdim(4, 14)) {
    EXPECT_TRUE(semigroup_circuits(s).same_elements(circuits(s.instance()))) << generators_string(s);
  }
}

TEST(UniqueBetti, Goldens) {
  // <15,10,6> has d = (2,3,5); sorted as <6,10,15> the same d reads (5,3,2)
  const auto u = has_unique_betti(ns({6, 10, 15}));
  EXPECT_TRUE(u.value);
  EXPECT_EQ(u.d, (V{5, 3, 2}));
  EXPECT_FALSE(has_unique_betti(ns({10, 12, 15})).value);
  const auto two = has_unique_betti(ns({2, 3}));
  EXPECT_TRUE(two.value);
  EXPECT_EQ(two.d, (V{3, 2}));
}

TEST(UniqueBetti, ShapeMatchesBettiDegreeCount) {
  for (const auto& s : semigroups_with_embdim(3, 30)) {
    const auto m = universal_markov(s.instance());
    EXPECT_EQ(has_unique_betti(s).value, m.betti.entries.size() == 1) << generators_string(s);
  }
}

TEST(BettiDivisible, Goldens) {
  EXPECT_TRUE(betti_divisible({30, 60}));
  EXPECT_FALSE(betti_divisible({2730, 2310, 30030}));
  EXPECT_TRUE(betti_divisible({30}));
}

TEST(Classify, EightNineTenTwelve) {
  const auto c = classify_semigroup(ns({8, 9, 10, 12}));
  EXPECT_TRUE(c.is_free);
  EXPECT_TRUE(c.is_ci);
  EXPECT_TRUE(c.has_ci_initial);
  ASSERT_TRUE(c.ci_order);
  EXPECT_EQ(c.ci_order->perm(), (std::vector<std::size_t>{1, 2, 0, 3}));
  EXPECT_FALSE(c.generalized_robust);
  EXPECT_FALSE(c.robust);
  EXPECT_TRUE(c.algebraic_checked);
}

TEST(Classify, TenFourteenFifteenTwentyOne) {
  const auto s = ns({10, 14, 15, 21});
  const auto c = classify_semigroup(s);
  EXPECT_TRUE(c.is_ci);
  EXPECT_EQ(c.mu, 3);
  EXPECT_FALSE(c.is_free);
  EXPECT_FALSE(c.has_ci_initial);
  const auto m = universal_markov(s.instance()).basis;
  EXPECT_TRUE(m.same_elements(
      testing::basis({pure(4, 0, 3, 2, 2), pure(4, 1, 3, 3, 2), bin({2, 0, 1, 0}, {0, 1, 0, 1})})));
  EXPECT_FALSE(some_lex_basis_is_ci(s, toric_generators(s.instance())));
}

TEST(Classify, SixTenFifteen) {
  const auto c = classify_semigroup(ns({6, 10, 15}));
  EXPECT_TRUE(c.unique_betti);
  EXPECT_TRUE(c.generalized_robust);
  EXPECT_TRUE(c.is_free);
  EXPECT_FALSE(c.robust);
  EXPECT_EQ(c.betti_degrees, V{30});
}

TEST(Classify, TenTwelveFifteen) {
  const auto c = classify_semigroup(ns({10, 12, 15}));
  EXPECT_EQ(c.mu, 2);
  EXPECT_FALSE(c.unique_betti);
  EXPECT_FALSE(c.generalized_robust);
  EXPECT_TRUE(c.betti_divisible);
  EXPECT_EQ(c.betti_degrees, (V{30, 60}));
}

TEST(Classify, ThreeNinetyFamily) {
  const auto s = ns({390, 546, 770, 1155});
  const auto c = classify_semigroup(s);
  EXPECT_EQ(c.mu, 3);
  EXPECT_EQ(c.betti_degrees, (V{2310, 2730, 30030}));
  EXPECT_FALSE(c.betti_divisible);
  EXPECT_TRUE(c.is_ci);
  EXPECT_TRUE(ideal_equal(toric_generators(s.instance()),
                          testing::basis({pure(4, 0, 7, 1, 5), pure(4, 2, 3, 3, 2), pure(4, 1, 55, 3, 26)})));
}

TEST(Sweep, EmbeddingDimensionTwoIsRobustAndFree) {
  const auto rep = verify_semigroup_theorems(25, 2, {}, 1);
  EXPECT_EQ(rep.mismatches, 0u);
  EXPECT_EQ(rep.errors, 0u);
  for (const auto& e : rep.entries) {
    EXPECT_TRUE(e.classification.robust);
    EXPECT_TRUE(e.classification.is_free);
    EXPECT_TRUE(e.alg_robust);
  }
}

TEST(Sweep, SmallEmbeddingDimensionThree) {
  const auto rep = verify_semigroup_theorems(14, 3, {}, 1, 3);
  EXPECT_GT(rep.semigroups, 50u);
  EXPECT_EQ(rep.mismatches, 0u);
  EXPECT_EQ(rep.errors, 0u);
}

}  // namespace
}  // namespace toribase
