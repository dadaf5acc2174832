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
using testing::sg;

// Independent check of a claimed reduced Gröbner basis: leads dominate,
// no term of one element is divisible by another lead, and every S-pair
// reduces to zero modulo the basis.
void expect_reduced_groebner(const ReducedGB& gb) {
  const auto& order = gb.order();
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    EXPECT_EQ(order.compare(el[i].lead, el[i].trail), Cmp::greater);
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      EXPECT_FALSE(divides(el[j].lead, el[i].lead));
      EXPECT_FALSE(divides(el[j].lead, el[i].trail));
    }
  }
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      const std::size_t m = el[i].lead.size();
      ExponentVector a(m), b(m);
      for (std::size_t t = 0; t < m; ++t) {
        const auto l = std::max(el[i].lead[t], el[j].lead[t]);
        a[t] = l - el[i].lead[t] + el[i].trail[t];
        b[t] = l - el[j].lead[t] + el[j].trail[t];
      }
      EXPECT_EQ(gb.normal_form(a), gb.normal_form(b));
    }
  }
}

TEST(MonomialOrder, Goldens) {
  const ExponentVector x1{1, 0}, x2_5{0, 5};
  EXPECT_EQ(compare(MonomialOrder::lex(2), x1, x2_5), Cmp::greater);
  EXPECT_EQ(compare(MonomialOrder::graded_lex(2), ExponentVector{1, 1}, ExponentVector{3, 0}), Cmp::less);
  for (const auto& o : {MonomialOrder::lex(2), MonomialOrder::graded_lex(2), MonomialOrder::graded_revlex(2)}) {
    EXPECT_EQ(o.compare(x2_5, x2_5), Cmp::equal);
  }
  EXPECT_THROW(MonomialOrder::lex(2).compare(ExponentVector{1}, x1), DimensionError);
}

TEST(MonomialOrder, RevlexAndWeights) {
  // x1 x3 vs x2^2 in three variables: grevlex punishes the last variable
  const auto grevlex = MonomialOrder::graded_revlex(3);
  EXPECT_EQ(grevlex.compare(ExponentVector{0, 2, 0}, ExponentVector{1, 0, 1}), Cmp::greater);
  EXPECT_EQ(MonomialOrder::graded_lex(3).compare(ExponentVector{0, 2, 0}, ExponentVector{1, 0, 1}),
            Cmp::less);
  const auto w = MonomialOrder::weight({mpq_class(1, 2), 1, 3}, grevlex);
  EXPECT_EQ(w.compare(ExponentVector{2, 0, 0}, ExponentVector{0, 1, 0}), Cmp::greater);
  EXPECT_EQ(w.compare(ExponentVector{0, 0, 1}, ExponentVector{0, 2, 0}), Cmp::greater);
  EXPECT_THROW(MonomialOrder::weight({0, 1, 1}, grevlex), ArgumentError);
  EXPECT_THROW(MonomialOrder::weight({1, 1}, grevlex), DimensionError);
}

TEST(MonomialOrder, IsATotalMonomialOrderOnRandomPairs) {
  std::mt19937_64 rng(17);
  const auto perm = testing::random_permutation(4, rng);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(perm), MonomialOrder::graded_lex(perm),
                                    MonomialOrder::graded_revlex(perm),
                                    MonomialOrder::weight_revlex({3, 1, 4, 1}, perm),
                                    MonomialOrder::weight_int({2, 7, 1, 8}, MonomialOrder::lex(4))};
  auto draw = [&] {
    ExponentVector u(4);
    for (auto& x : u) x = static_cast<std::int64_t>(rng() % 4);
    return u;
  };
  for (const auto& o : orders) {
    for (int t = 0; t < 300; ++t) {
      auto u = draw(), v = draw(), w = draw();
      const auto c = o.compare(u, v);
      EXPECT_EQ(c == Cmp::equal, u == v);
      EXPECT_EQ(o.compare(v, u), static_cast<Cmp>(-static_cast<int>(c)));
      for (std::size_t i = 0; i < 4; ++i) {
        u[i] += w[i];
        v[i] += w[i];
      }
      EXPECT_EQ(o.compare(u, v), c);  // multiplicative
      EXPECT_NE(o.compare(w, ExponentVector(4, 0)), Cmp::less);
    }
  }
}

TEST(Buchberger, PrincipalIdeal) {
  const auto f = testing::basis({bin({3, 0}, {0, 2})});
  for (const auto& o : {MonomialOrder::lex(2), MonomialOrder::lex({1, 0}), MonomialOrder::graded_revlex(2)}) {
    EXPECT_TRUE(buchberger(f, o).to_basis().same_elements(f));
  }
}

TEST(Buchberger, EightNineTenTwelveLexOrders) {
  const auto gens = toric_generators(sg({8, 9, 10, 12}));
  const auto gb = buchberger(gens, MonomialOrder::lex({1, 2, 0, 3}));
  expect_reduced_groebner(gb);
  EXPECT_TRUE(gb.to_basis().same_elements(testing::basis(
      {bin({0, 2, 0, 0}, {1, 0, 1, 0}), bin({0, 0, 2, 0}, {1, 0, 0, 1}), bin({3, 0, 0, 0}, {0, 0, 0, 2})})));
  EXPECT_EQ(initial_ideal(gb), (std::vector<ExponentVector>{{0, 0, 2, 0}, {0, 2, 0, 0}, {3, 0, 0, 0}}));
  const auto natural = buchberger(gens, MonomialOrder::lex(4));
  expect_reduced_groebner(natural);
  EXPECT_EQ(natural.size(), 8u);
}

TEST(Buchberger, StepCapRaises) {
  Limits tight;
  tight.step_cap = 3;
  EXPECT_THROW(buchberger(toric_generators(sg({8, 9, 10, 12})), MonomialOrder::lex(4), tight),
               ResourceLimitError);
}

TEST(Buchberger, RandomOrdersGiveReducedBasesOfTheSameIdeal) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 25; ++t) {
    const auto inst = testing::random_instance(rng);
    const auto gens = toric_generators(inst);
    const auto perm = testing::random_permutation(inst.cols(), rng);
    for (const auto& o : {MonomialOrder::lex(perm), MonomialOrder::graded_revlex(perm)}) {
      const auto gb = buchberger(gens, o);
      expect_reduced_groebner(gb);
      for (const auto& g : gens) EXPECT_TRUE(gb.contains(g));
      for (const auto& g : gb.elements()) EXPECT_TRUE(in_ideal(inst, Binomial(g.lead, g.trail)));
    }
  }
}

TEST(InitialIdeal, TwoThree) {
  const auto f = testing::basis({bin({3, 0}, {0, 2})});
  EXPECT_EQ(initial_ideal(buchberger(f, MonomialOrder::lex(2))), (std::vector<ExponentVector>{{3, 0}}));
  EXPECT_EQ(initial_ideal(buchberger(f, MonomialOrder::lex({1, 0}))), (std::vector<ExponentVector>{{0, 2}}));
}

TEST(IdealEqual, Goldens) {
  EXPECT_TRUE(ideal_equal(testing::basis({bin({3, 0}, {0, 2})}), testing::basis({bin({0, 2}, {3, 0})})));
  const auto b1 = bin({1, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0});
  const auto b2 = bin({1, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1});
  const auto b3 = bin({0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1});
  EXPECT_TRUE(ideal_equal(testing::basis({b1, b2}), testing::basis({b1, b2, b3})));
  EXPECT_FALSE(ideal_equal(testing::basis({bin({3, 0, 0}, {0, 0, 2})}), toric_generators(sg({4, 5, 6}))));
}

TEST(ToricGenerators, Goldens) {
  EXPECT_TRUE(toric_generators(sg({2, 3})).same_elements(testing::basis({bin({3, 0}, {0, 2})})));
  EXPECT_TRUE(ideal_equal(toric_generators(sg({4, 5, 6})),
                          testing::basis({bin({3, 0, 0}, {0, 0, 2}), bin({0, 2, 0}, {1, 0, 1})})));
  EXPECT_TRUE(ideal_equal(toric_generators(sg({10, 14, 15, 21})),
                          testing::basis({testing::pure(4, 0, 3, 2, 2), testing::pure(4, 1, 3, 3, 2),
                                          bin({2, 0, 1, 0}, {0, 1, 0, 1})})));
}

// Graver elements generate I_A and are computed without saturation, so
// they are an independent oracle. Non-homogeneous instances guard the
// choice of saturation order.
TEST(ToricGenerators, AgreeWithGraverOnNonHomogeneousInstances) {
  EXPECT_TRUE(ideal_equal(toric_generators(sg({3, 10, 11})), graver(sg({3, 10, 11}))));
  const auto inst = sg({3, 10, 11});
  EXPECT_EQ(static_cast<std::size_t>(universal_markov(inst).betti.mu),
            minimal_generating_set(inst, graver(inst)).size());
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const auto inst = testing::random_instance(rng);
    const auto gens = toric_generators(inst);
    for (const auto& g : gens) EXPECT_TRUE(in_ideal(inst, g));
    EXPECT_TRUE(ideal_equal(gens, graver(inst)));
  }
}

TEST(ToricGenerators, SaturationOrderEndsWithTheVariable) {
  const auto o = saturation_order(sg({3, 10, 11}), 0);
  EXPECT_EQ(o.perm().back(), 0u);
  EXPECT_EQ(o.weights(), (std::vector<std::int64_t>{3, 10, 11}));
}

}  // namespace
}  // namespace toribase
