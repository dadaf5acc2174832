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

// Combinatorial test for a graph's toric ideal to be generated by
// quadrics (Ohsugi and Hibi). Terminology for a cycle v_0 ... v_{l-1}:
//   * a chord {v_i, v_j}, i < j, is even when j - i is odd (it splits the
//     cycle into two even cycles) and odd otherwise;
//   * chords {v_i, v_j} and {v_k, v_l} cross when i < k < j < l or
//     k < i < l < j;
//   * a bridge between cycles c1 and c2 is an edge {a, b} with a on c1 but
//     not c2 and b on c2 but not c1.

#ifndef TORIBASE_QUADRATIC_HPP
#define TORIBASE_QUADRATIC_HPP

#include <set>
#include <string>
#include <vector>

#include "toribase/graph.hpp"

namespace toribase {

struct QuadraticVerdict {
  bool value = true;
  int failed_condition = 0;  // 1, 2 or 3 when value is false
  std::vector<Cycle> witness;
  std::string explanation;
};

inline std::string cycle_string(const Graph& g, const Cycle& c) {
  std::string s = "(";
  for (auto v : c) s += g.label(v) + ",";
  return s + g.label(c.front()) + ")";
}

inline bool chords_cross(std::pair<std::size_t, std::size_t> a,
                         std::pair<std::size_t, std::size_t> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

/// Condition (i) for one even cycle of length >= 6.
inline bool even_cycle_ok(const Graph& g, const Cycle& c) {
  auto chords = cycle_chords(g, c);
  std::vector<std::pair<std::size_t, std::size_t>> odd;
  for (const auto& ch : chords) {
    if ((ch.second - ch.first) % 2 == 1) return true;  // even chord
    odd.push_back(ch);
  }
  if (odd.size() < 3) return false;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      if (chords_cross(odd[i], odd[j])) return true;  // a third odd chord exists
    }
  }
  return false;
}

inline std::size_t bridge_count(const Graph& g, const Cycle& c1, const Cycle& c2) {
  std::set<std::size_t> s1(c1.begin(), c1.end()), s2(c2.begin(), c2.end());
  std::size_t count = 0;
  for (const auto& [u, v] : g.edges()) {
    const bool u1 = s1.count(u) && !s2.count(u), u2 = s2.count(u) && !s1.count(u);
    const bool v1 = s1.count(v) && !s2.count(v), v2 = s2.count(v) && !s1.count(v);
    if ((u1 && v2) || (u2 && v1)) ++count;
  }
  return count;
}

inline QuadraticVerdict quadratic_generation(const Graph& g, const Limits& limits = {}) {
  QuadraticVerdict res;
  auto cycles = simple_cycles(g, limits);
  for (const auto& c : cycles) {
    if (c.size() >= 6 && c.size() % 2 == 0 && !even_cycle_ok(g, c)) {
      res.value = false;
      res.failed_condition = 1;
      res.witness = {c};
      res.explanation = "even cycle " + cycle_string(g, c) +
                        " has no even chord and no crossing odd chords";
      return res;
    }
  }
  std::vector<Cycle> odd_chordless;
  for (const auto& c : cycles) {
    if (c.size() % 2 == 1 && cycle_chords(g, c).empty()) odd_chordless.push_back(c);
  }
  for (std::size_t i = 0; i < odd_chordless.size(); ++i) {
    for (std::size_t j = i + 1; j < odd_chordless.size(); ++j) {
      const auto& c1 = odd_chordless[i];
      const auto& c2 = odd_chordless[j];
      std::set<std::size_t> s1(c1.begin(), c1.end());
      std::size_t common = 0;
      for (auto v : c2) common += s1.count(v);
      const auto bridges = bridge_count(g, c1, c2);
      if (common == 1 && bridges == 0) {
        res.value = false;
        res.failed_condition = 2;
        res.witness = {c1, c2};
        res.explanation = "odd chordless cycles " + cycle_string(g, c1) + " and " +
                          cycle_string(g, c2) + " share one vertex and have no bridge";
        return res;
      }
      if (common == 0 && bridges < 2) {
        res.value = false;
        res.failed_condition = 3;
        res.witness = {c1, c2};
        res.explanation = "disjoint odd chordless cycles " + cycle_string(g, c1) +
                          " and " + cycle_string(g, c2) + " have fewer than two bridges";
        return res;
      }
    }
  }
  return res;
}

}  // namespace toribase

#endif  // TORIBASE_QUADRATIC_HPP
