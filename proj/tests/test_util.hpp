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

// Shared fixtures for the test suites.

#ifndef TORIBASE_TESTS_TEST_UTIL_HPP
#define TORIBASE_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "toribase/toribase.hpp"

namespace toribase::testing {

inline Binomial bin(ExponentVector plus, ExponentVector minus) {
  return Binomial(std::move(plus), std::move(minus));
}

inline BasisSet basis(std::initializer_list<Binomial> elems) {
  return BasisSet(BasisKind::generators, std::vector<Binomial>(elems));
}

inline ToricInstance sg(std::vector<std::int64_t> gens) {
  return ToricInstance::from_generators(gens);
}

/// x_i^a - x_j^b in m variables (0-based indices).
inline Binomial pure(std::size_t m, std::size_t i, std::int64_t a, std::size_t j, std::int64_t b) {
  ExponentVector u(m, 0), v(m, 0);
  u[i] = a;
  v[j] = b;
  return bin(u, v);
}

/// K4 with edges 12, 23, 34, 41, 13, 24 (variables e1..e4, f1, f2).
inline Graph k4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}); }

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

/// Appends K_{2,l} on hubs h1, h2 with l fresh leaves numbered from `next`.
inline void add_k2l(std::vector<Edge>& e, std::size_t h1, std::size_t h2, std::size_t& next,
                    std::size_t l) {
  for (std::size_t i = 0; i < l; ++i, ++next) {
    e.emplace_back(h1, next);
    e.emplace_back(h2, next);
  }
}

inline Graph k2l(std::size_t l) {
  std::vector<Edge> e;
  std::size_t next = 2;
  add_k2l(e, 0, 1, next, l);
  return Graph(next, std::move(e));
}

inline Graph k2l_plus_edge(std::size_t l) {
  std::vector<Edge> e;
  std::size_t next = 2;
  add_k2l(e, 0, 1, next, l);
  e.emplace_back(0, 1);
  return Graph(next, std::move(e));
}

inline Graph k33() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 3; j < 6; ++j) e.emplace_back(i, j);
  }
  return Graph(6, std::move(e));
}

/// Double-K_{2,(3,4)} with the extra edge joining the two hubs of K_{2,3}.
inline Graph double_k234_hub_edge() {
  std::vector<Edge> e;
  std::size_t next = 2;
  add_k2l(e, 0, 1, next, 3);
  e.emplace_back(0, 1);
  const auto hub = next++;
  e.emplace_back(hub, 1);
  add_k2l(e, 0, hub, next, 3);
  return Graph(next, std::move(e));
}

/// Double-K_{2,(3,4)} with the extra edge joining two leaves of K_{2,3}.
inline Graph double_k234_leaf_edge() {
  std::vector<Edge> e;
  std::size_t next = 2;
  add_k2l(e, 0, 1, next, 3);
  e.emplace_back(2, 3);
  const auto hub = next++;
  e.emplace_back(hub, 3);
  add_k2l(e, 2, hub, next, 3);
  return Graph(next, std::move(e));
}

/// Two 4-cycles joined through a cut edge and closed by a path of length
/// two on each side; a 2-connected non-bipartite block.
inline Graph necklace_block() {
  return Graph(7, {{0, 1}, {0, 2}, {3, 1}, {3, 2}, {3, 4}, {4, 5}, {4, 6}, {0, 5}, {0, 6}});
}

/// Glues blocks into a graph: each block is attached by identifying its
/// vertex 0 with an existing vertex; its other vertices are fresh.
class BlockGluer {
 public:
  explicit BlockGluer(const Graph& first) {
    n_ = first.vertex_count();
    edges_ = first.edges();
  }

  /// Returns the global ids of the block's vertices.
  std::vector<std::size_t> attach(const Graph& block, std::size_t at) {
    std::vector<std::size_t> ids(block.vertex_count());
    ids[0] = at;
    for (std::size_t v = 1; v < ids.size(); ++v) ids[v] = n_++;
    for (auto [u, v] : block.edges()) edges_.emplace_back(ids[u], ids[v]);
    return ids;
  }

  std::size_t vertex_count() const { return n_; }
  Graph build() const { return Graph(n_, edges_); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

inline Graph single_edge() { return Graph(2, {{0, 1}}); }

/// Five blocks in a tree: two cut edges, K_{2,4}, K_{2,6} and K_4.
inline Graph k4_tail_graph() {
  BlockGluer g(k2l(4));
  g.attach(single_edge(), 0);
  auto k26 = g.attach(k2l(6), 1);
  auto tail = g.attach(single_edge(), k26[2]);
  g.attach(k4(), tail[1]);
  return g.build();
}

/// Cut edges, K_{2,2}, K_{2,4}, K_{2,6} and a necklace block in a tree.
inline Graph necklace_chain_graph() {
  BlockGluer g(necklace_block());
  auto e1 = g.attach(single_edge(), 1);
  g.attach(k2l(2), e1[1]);
  g.attach(k2l(4), 4);
  auto e2 = g.attach(single_edge(), 5);
  g.attach(k2l(6), e2[1]);
  return g.build();
}

/// Same graph with vertices renamed by `perm` and the edge list shuffled.
inline Graph relabel(const Graph& g, const std::vector<std::size_t>& perm, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    if (rng() & 1) e.emplace_back(perm[u], perm[v]);
    else e.emplace_back(perm[v], perm[u]);
  }
  std::shuffle(e.begin(), e.end(), rng);
  return Graph(g.vertex_count(), std::move(e));
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Random instance with 1-3 rows, 2-5 columns, entries 0..max_entry and a
/// nonzero toric ideal. Invalid draws (zero or repeated columns, full
/// column rank) are redrawn.
inline ToricInstance random_instance(std::mt19937_64& rng, std::size_t max_cols = 5,
                                     std::int64_t max_entry = 12) {
  while (true) {
    const std::size_t n = 1 + rng() % 3;
    std::size_t m = std::max<std::size_t>(n + 1, 2 + rng() % (max_cols - 1));
    m = std::min(m, max_cols);
    ToricInstance::Matrix a(n, std::vector<std::int64_t>(m));
    for (auto& row : a) {
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_entry + 1));
    }
    try {
      ToricInstance inst(std::move(a));
      if (inst.rank() < inst.cols()) return inst;
    } catch (const ArgumentError&) {
    }
  }
}

}  // namespace toribase::testing

#endif  // TORIBASE_TESTS_TEST_UTIL_HPP
