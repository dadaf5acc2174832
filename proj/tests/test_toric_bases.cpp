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
using testing::sg;

BasisSet k4_quadrics() {
  return testing::basis({bin({1, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0}),
                         bin({1, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1}),
                         bin({0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1})});
}

// x1^3 - x3^2, x2^5 - x1^6, x2^5 - x1^3 x3^2, x2^5 - x3^4
BasisSet ten_twelve_fifteen_graver() {
  return testing::basis({pure(3, 0, 3, 2, 2), pure(3, 1, 5, 0, 6), bin({0, 5, 0}, {3, 0, 2}),
                         pure(3, 1, 5, 2, 4)});
}

TEST(RationalLp, SmallSystems) {
  using lp::QMatrix;
  using lp::QRow;
  EXPECT_TRUE(lp::is_feasible(QMatrix{{1, 1}}, QRow{1}));
  EXPECT_FALSE(lp::is_feasible(QMatrix{{1, 1}}, QRow{-1}));
  // x - y = 0, x + y = 1, x >= 0, y >= 0: x = y = 1/2
  EXPECT_TRUE(lp::is_feasible(QMatrix{{1, -1}, {1, 1}}, QRow{0, 1}));
  // x + y = 1, 2x + 2y = 3
  EXPECT_FALSE(lp::is_feasible(QMatrix{{1, 1}, {2, 2}}, QRow{1, 3}));
  // redundant equations
  EXPECT_TRUE(lp::is_feasible(QMatrix{{1, 2, 3}, {2, 4, 6}}, QRow{mpq_class(1, 3), mpq_class(2, 3)}));
  EXPECT_FALSE(lp::is_feasible(QMatrix{{1, 2, -1}, {-1, -2, 1}, {0, 0, 1}}, QRow{-1, 1, 0}));
}

// A column subset supports a circuit iff it is dependent and every proper
// subset is independent.
std::size_t count_circuit_supports(const ToricInstance& inst) {
  const std::size_t m = inst.cols();
  auto rank_of = [&](std::uint32_t mask) {
    ToricInstance::Matrix a(inst.rows());
    for (std::size_t i = 0; i < inst.rows(); ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (mask >> j & 1) a[i].push_back(inst.at(i, j));
      }
    }
    return intmat::rank(a);
  };
  std::size_t count = 0;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (rank_of(mask) != k - 1) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < m && minimal; ++j) {
      if (mask >> j & 1) minimal = rank_of(mask & ~(1u << j)) == k - 1;
    }
    if (minimal) ++count;
  }
  return count;
}

TEST(Circuits, Goldens) {
  EXPECT_TRUE(circuits(sg({3, 7})).same_elements(testing::basis({pure(2, 0, 7, 1, 3)})));
  EXPECT_TRUE(circuits(sg({10, 12, 15}))
                  .same_elements(testing::basis({pure(3, 0, 6, 1, 5), pure(3, 0, 3, 2, 2), pure(3, 1, 5, 2, 4)})));
  EXPECT_TRUE(circuits(graph_instance(testing::k4())).same_elements(k4_quadrics()));
}

TEST(Circuits, OnePerMinimalDependentSubset) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const auto inst = testing::random_instance(rng);
    const auto c = circuits(inst);
    EXPECT_EQ(c.size(), count_circuit_supports(inst));
    for (const auto& b : c) {
      EXPECT_TRUE(in_ideal(inst, b));
      const auto v = b.vector();
      std::int64_t g = 0;
      for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
      EXPECT_EQ(g, 1);
    }
  }
}

TEST(Graver, Goldens) {
  EXPECT_TRUE(graver(sg({10, 12, 15})).same_elements(ten_twelve_fifteen_graver()));
  EXPECT_TRUE(graver(graph_instance(testing::k4())).same_elements(k4_quadrics()));
  EXPECT_TRUE(graver(sg({2, 3})).same_elements(testing::basis({pure(2, 0, 3, 1, 2)})));
}

TEST(Graver, ThreeOraclesAgree) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 25; ++t) {
    const auto inst = testing::random_instance(rng);
    const auto g = graver(inst);
    EXPECT_TRUE(g.same_elements(graver_by_lawrence(inst)));
    EXPECT_TRUE(g.same_elements(graver_by_scan(inst, coordinate_box(g, inst.cols()))));
  }
  const auto k4 = graph_instance(testing::k4());
  EXPECT_TRUE(graver_by_lawrence(k4).same_elements(k4_quadrics()));
  EXPECT_TRUE(graver_by_scan(k4, std::vector<std::int64_t>(6, 1)).same_elements(k4_quadrics()));
}

TEST(Graver, ScanIsExactForItsBox) {
  // with box 1 only the K4 quadrics fit; a larger box must add nothing new
  const auto k4 = graph_instance(testing::k4());
  EXPECT_TRUE(graver_by_scan(k4, std::vector<std::int64_t>(6, 3)).same_elements(k4_quadrics()));
  // the box keeps exactly the Graver elements that fit in it
  const auto s = sg({10, 12, 15});
  EXPECT_TRUE(graver_by_scan(s, {3, 4, 4}).same_elements(testing::basis({pure(3, 0, 3, 2, 2)})));
  EXPECT_TRUE(graver_by_scan(s, {3, 5, 4})
                  .same_elements(testing::basis(
                      {pure(3, 0, 3, 2, 2), bin({0, 5, 0}, {3, 0, 2}), pure(3, 1, 5, 2, 4)})));
  Limits tiny;
  tiny.fiber_cap = 5;
  EXPECT_THROW(graver_by_scan(s, {20, 20, 20}, tiny), ResourceLimitError);
}

TEST(Ugb, Goldens) {
  EXPECT_TRUE(universal_groebner(graph_instance(testing::k4())).same_elements(k4_quadrics()));
  EXPECT_TRUE(universal_groebner(sg({2, 3})).same_elements(testing::basis({pure(2, 0, 3, 1, 2)})));
  // x1^3 and x3^2 always lead in x1^3 - x3^2, so
  // x1^3 x3^2 never minimally generates an initial ideal.
  const auto u = universal_groebner(sg({10, 12, 15}));
  EXPECT_FALSE(u.contains(bin({0, 5, 0}, {3, 0, 2})));
  EXPECT_EQ(u.size(), 3u);
}

TEST(Ugb, EdgeTestsAgree) {
  // the direct system has a row per fiber point, so keep fibers small
  std::mt19937_64 rng(41);
  int compared = 0;
  for (int t = 0; t < 25; ++t) {
    const auto inst = testing::random_instance(rng);
    for (const auto& g : graver(inst)) {
      const auto fiber = enumerate_fiber(inst, a_degree(inst, g.plus()), 1'000'000);
      if (fiber.points.size() > 150) continue;
      ++compared;
      EXPECT_EQ(is_fiber_edge(fiber.points, g.plus(), g.minus()),
                is_fiber_edge_direct(fiber.points, g.plus(), g.minus()));
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(Ugb, ContainsEverySampledReducedBasis) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    const auto inst = testing::random_instance(rng);
    const auto gens = toric_generators(inst);
    const auto u = universal_groebner(inst);
    for (int s = 0; s < 4; ++s) {
      const auto perm = testing::random_permutation(inst.cols(), rng);
      std::vector<std::int64_t> w(inst.cols());
      for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 9);
      for (const auto& o : {MonomialOrder::lex(perm), MonomialOrder::graded_revlex(perm),
                            MonomialOrder::weight_int(w, MonomialOrder::lex(perm))}) {
        EXPECT_TRUE(buchberger(gens, o).to_basis().subset_of(u)) << o.describe();
      }
    }
  }
}

TEST(Robustness, Goldens) {
  const auto k4 = robustness_report(graph_instance(testing::k4()));
  EXPECT_TRUE(k4.is_generalized_robust);
  EXPECT_FALSE(k4.is_robust);
  EXPECT_EQ(k4.mu, 2);
  EXPECT_EQ(k4.sizes.at(BasisKind::ugb), 3u);

  EXPECT_TRUE(robustness_report(sg({2, 3})).is_robust);

  const auto s = robustness_report(sg({10, 12, 15}));
  EXPECT_FALSE(s.is_generalized_robust);
  EXPECT_FALSE(s.flags.markov_in_ugb);
  EXPECT_TRUE(s.markov.same_elements(ten_twelve_fifteen_graver()));
  EXPECT_TRUE(s.flags.markov_eq_graver);
}

TEST(Robustness, InvariantsOnRandomInstances) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 30; ++t) {
    const auto inst = testing::random_instance(rng);
    const auto r = robustness_report(inst);
    EXPECT_TRUE(r.circuits.subset_of(r.ugb));
    EXPECT_TRUE(r.ugb.subset_of(r.graver));
    EXPECT_TRUE(r.markov.subset_of(r.graver));
    EXPECT_EQ(r.is_generalized_robust, r.ugb.same_elements(r.markov));
    EXPECT_EQ(r.is_robust, static_cast<std::int64_t>(r.ugb.size()) == r.mu);
    if (r.is_robust) {
      EXPECT_TRUE(r.is_generalized_robust);
      // U is then itself a minimal generating set
      EXPECT_TRUE(ideal_equal(r.ugb, toric_generators(inst)));
      EXPECT_EQ(minimal_generating_set(inst, r.ugb).size(), r.ugb.size());
    }
  }
}

TEST(CircuitIdeal, Goldens) {
  EXPECT_TRUE(is_circuit_ideal(sg({390, 546, 770, 1155})));
  EXPECT_TRUE(is_circuit_ideal(sg({10, 12, 15})));
  EXPECT_TRUE(is_circuit_ideal(sg({2, 3})));
  // x2^2 - x1 x3 sits in degree 10, below every circuit degree
  EXPECT_FALSE(is_circuit_ideal(sg({4, 5, 6})));
}

std::vector<std::size_t> random_subset(std::size_t m, std::mt19937_64& rng) {
  std::vector<std::size_t> s;
  while (s.size() < 2) {
    s.clear();
    for (std::size_t j = 0; j < m; ++j) {
      if (rng() % 3 != 0) s.push_back(j);
    }
  }
  return s;
}

TEST(Elimination, RestrictionCommutesWithCircuitsGraverAndUgb) {
  std::mt19937_64 rng(53);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const auto inst = testing::random_instance(rng);
    const auto s = random_subset(inst.cols(), rng);
    const auto sub = restrict(inst, s);
    if (sub.rank() == sub.cols()) continue;
    ++checked;
    const auto full = robustness_report(inst);
    const auto part = robustness_report(sub);
    EXPECT_TRUE(part.circuits.same_elements(restrict_basis(full.circuits, s)));
    EXPECT_TRUE(part.graver.same_elements(restrict_basis(full.graver, s)));
    EXPECT_TRUE(part.ugb.same_elements(restrict_basis(full.ugb, s)));
    EXPECT_TRUE(restrict_basis(full.markov, s).subset_of(part.markov));
    // containments survive elimination
    if (full.ugb.subset_of(full.markov)) {
      EXPECT_TRUE(part.ugb.subset_of(part.markov));
    }
    if (full.circuits.subset_of(full.markov)) {
      EXPECT_TRUE(part.circuits.subset_of(part.markov));
    }
    if (full.flags.markov_eq_graver) {
      EXPECT_TRUE(part.flags.markov_eq_graver);
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(Elimination, ToricIdealOfASubsetIsTheIntersection) {
  const auto inst = sg({4, 5, 6});
  const auto gb = buchberger(toric_generators(inst), MonomialOrder::lex({2, 0, 1}));
  std::vector<Binomial> kept;
  for (const auto& g : gb.elements()) {
    if (g.lead[2] == 0 && g.trail[2] == 0) kept.emplace_back(g.lead, g.trail);
  }
  BasisSet eliminated(BasisKind::generators, kept);
  EXPECT_TRUE(ideal_equal(restrict_basis(eliminated, {0, 1}), toric_generators(sg({4, 5}))));
}

}  // namespace
}  // namespace toribase
