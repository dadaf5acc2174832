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

#ifndef TORIBASE_GRAPH_ENUM_HPP
#define TORIBASE_GRAPH_ENUM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "toribase/graph.hpp"

namespace toribase {

namespace detail {

/// Index of the unordered pair {i, j}, i < j, among all pairs of [n].
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace detail

/// Canonical key of a graph on n <= 8 vertices: the smallest pair bitmask
/// over all vertex relabelings, rendered as n followed by the mask.
inline std::string canonical_key(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 8) throw ArgumentError("canonical keys are limited to 8 vertices");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    for (const auto& [u, v] : g.edges()) {
      mask |= std::uint64_t{1} << detail::pair_index(n, perm[u], perm[v]);
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + std::to_string(best);
}

/// All connected simple graphs on exactly n vertices up to isomorphism,
/// each given by its canonical (lexicographically least) edge mask with
/// edges listed in pair order. Sorted by edge count, then mask.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  if (n < 2 || n > 6) throw ArgumentError("graph enumeration supports 2 to 6 vertices");
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<Edge> all;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);
  }
  std::vector<std::vector<std::size_t>> perm_maps;
  {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::vector<std::size_t> m(pairs);
      for (std::size_t k = 0; k < pairs; ++k) {
        m[k] = detail::pair_index(n, perm[all[k].first], perm[all[k].second]);
      }
      perm_maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  auto connected = [&](std::uint32_t mask) {
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::size_t k = 0; k < pairs; ++k) {
        if (!((mask >> k) & 1u)) continue;
        auto [a, b] = all[k];
        if ((frontier >> a) & 1u) next |= 1u << b;
        if ((frontier >> b) & 1u) next |= 1u << a;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (1u << n) - 1;
  };
  std::set<std::pair<int, std::uint32_t>> canon;
  for (std::uint32_t mask = 1; mask < (1u << pairs); ++mask) {
    if (!connected(mask)) continue;
    std::uint32_t best = mask;
    for (const auto& pm : perm_maps) {
      std::uint32_t img = 0;
      for (std::size_t k = 0; k < pairs; ++k) {
        if ((mask >> k) & 1u) img |= 1u << pm[k];
      }
      best = std::min(best, img);
      if (best < mask) break;  // mask is not its own canonical form
    }
    if (best == mask) canon.insert({__builtin_popcount(mask), mask});
  }
  std::vector<Graph> out;
  for (const auto& [cnt, mask] : canon) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs; ++k) {
      if ((mask >> k) & 1u) edges.push_back(all[k]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace toribase

#endif  // TORIBASE_GRAPH_ENUM_HPP
