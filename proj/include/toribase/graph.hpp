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

#ifndef TORIBASE_GRAPH_HPP
#define TORIBASE_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toribase/binomial.hpp"
#include "toribase/errors.hpp"
#include "toribase/instance.hpp"

namespace toribase {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple connected graph on vertices 0..n-1. Edges keep their input order,
/// which fixes the variable order of the toric ideal (edge k is variable k).
class Graph {
 public:
  Graph() = default;

  /// Throws ArgumentError on loops, repeated edges, out-of-range endpoints,
  /// an empty edge set, or a disconnected graph. `labels` (optional) names
  /// the vertices for printing.
  Graph(std::size_t n, std::vector<Edge> edges,
        std::vector<std::string> labels = {})
      : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 2) throw ArgumentError("a graph needs at least two vertices");
    if (edges_.empty()) throw ArgumentError("a graph needs at least one edge");
    if (!labels_.empty() && labels_.size() != n_) {
      throw ArgumentError("label count differs from vertex count");
    }
    adj_.assign(n_, {});
    std::set<Edge> seen;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      auto [u, v] = edges_[k];
      if (u >= n_ || v >= n_) throw ArgumentError("edge endpoint out of range");
      if (u == v) throw ArgumentError("loops are not allowed");
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
        throw ArgumentError("repeated edge");
      }
      adj_[u].push_back({v, k});
      adj_[v].push_back({u, k});
    }
    std::vector<bool> vis(n_, false);
    std::vector<std::size_t> stack{0};
    vis[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto [v, k] : adj_[u]) {
        if (!vis[v]) {
          vis[v] = true;
          ++reached;
          stack.push_back(v);
        }
      }
    }
    if (reached != n_) throw ArgumentError("graph is not connected");
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_[k]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::string label(std::size_t v) const {
    return labels_.empty() ? std::to_string(v + 1) : labels_[v];
  }

  /// Neighbours of v paired with the connecting edge index.
  const std::vector<std::pair<std::size_t, std::size_t>>& neighbours(
      std::size_t v) const {
    return adj_[v];
  }

  std::size_t degree(std::size_t v) const { return adj_[v].size(); }

  /// Index of edge {u, v}, if present.
  std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    for (auto [w, k] : adj_[u]) {
      if (w == v) return k;
    }
    return std::nullopt;
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    return edge_index(u, v).has_value();
  }

  /// 2-colouring, or nullopt when an odd cycle exists.
  std::optional<std::vector<int>> two_colouring() const {
    std::vector<int> col(n_, -1);
    col[0] = 0;
    std::vector<std::size_t> queue{0};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      auto u = queue[h];
      for (auto [v, k] : adj_[u]) {
        if (col[v] < 0) {
          col[v] = 1 - col[u];
          queue.push_back(v);
        } else if (col[v] == col[u]) {
          return std::nullopt;
        }
      }
    }
    return col;
  }

  bool is_bipartite() const { return two_colouring().has_value(); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
};

/// Toric instance of a graph: column k is e_u + e_v for edge k = {u, v}.
inline ToricInstance graph_instance(const Graph& g) {
  ToricInstance::Matrix m(g.vertex_count(),
                          std::vector<std::int64_t>(g.edge_count(), 0));
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    m[g.edge(k).first][k] = 1;
    m[g.edge(k).second][k] = 1;
  }
  return ToricInstance(std::move(m), InstanceOrigin::graph);
}

/// Subgraph on a set of edges, with vertices renumbered in order of first
/// appearance. `vertex_map` (if given) receives new index -> old index.
inline Graph edge_subgraph(const Graph& g, const std::vector<std::size_t>& edge_ids,
                           std::vector<std::size_t>* vertex_map = nullptr) {
  std::map<std::size_t, std::size_t> renum;
  std::vector<std::size_t> back;
  std::vector<Edge> edges;
  auto id = [&](std::size_t v) {
    auto [it, fresh] = renum.emplace(v, back.size());
    if (fresh) back.push_back(v);
    return it->second;
  };
  for (auto k : edge_ids) {
    auto a = id(g.edge(k).first);
    auto b = id(g.edge(k).second);
    edges.emplace_back(a, b);
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (auto v : back) labels.push_back(g.labels()[v]);
  }
  if (vertex_map) *vertex_map = back;
  return Graph(back.size(), std::move(edges), std::move(labels));
}

/// Biconnected blocks (edge sets), cut vertices and block tree.
struct BlockDecomposition {
  std::vector<std::vector<std::size_t>> blocks;  // edge indices, ascending
  std::vector<std::size_t> cut_vertices;         // ascending
  std::vector<std::pair<std::size_t, std::size_t>> block_tree;  // (block, cut vertex)
  std::vector<bool> bipartite;                   // per block
  int b = 0;                                     // 1 iff the graph is bipartite

  std::size_t non_bipartite_count() const {
    return static_cast<std::size_t>(std::count(bipartite.begin(), bipartite.end(), false));
  }
};

/// Tarjan's lowpoint algorithm with an edge stack.
inline BlockDecomposition blocks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  BlockDecomposition d;
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<std::size_t> edge_stack;
  std::size_t timer = 0;
  std::vector<bool> is_cut(n, false);

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u,
                                                          std::size_t parent_edge) {
    disc[u] = low[u] = ++timer;
    std::size_t children = 0;
    for (auto [v, k] : g.neighbours(u)) {
      if (k == parent_edge) continue;
      if (disc[v] == 0) {
        edge_stack.push_back(k);
        ++children;
        dfs(v, k);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent_edge != SIZE_MAX || children > 1) is_cut[u] = true;
          std::vector<std::size_t> blk;
          while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            blk.push_back(e);
            if (e == k) break;
          }
          std::sort(blk.begin(), blk.end());
          d.blocks.push_back(std::move(blk));
        }
      } else if (disc[v] < disc[u]) {
        edge_stack.push_back(k);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  dfs(0, SIZE_MAX);
  std::sort(d.blocks.begin(), d.blocks.end());
  for (std::size_t v = 0; v < n; ++v) {
    if (is_cut[v]) d.cut_vertices.push_back(v);
  }
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    std::set<std::size_t> verts;
    for (auto k : d.blocks[bi]) {
      verts.insert(g.edge(k).first);
      verts.insert(g.edge(k).second);
    }
    for (auto c : d.cut_vertices) {
      if (verts.count(c)) d.block_tree.emplace_back(bi, c);
    }
    d.bipartite.push_back(edge_subgraph(g, d.blocks[bi]).is_bipartite());
  }
  d.b = g.is_bipartite() ? 1 : 0;
  return d;
}

/// Binomial of an even closed walk given as a vertex sequence with the
/// start repeated at the end: odd-position edges form the positive side.
inline Binomial binomial_of_walk(const Graph& g, const std::vector<std::size_t>& walk) {
  if (walk.size() < 2 || walk.front() != walk.back()) {
    throw ArgumentError("walk is not closed");
  }
  const std::size_t len = walk.size() - 1;
  if (len % 2 != 0) throw ArgumentError("walk has odd length");
  ExponentVector plus(g.edge_count(), 0), minus(g.edge_count(), 0);
  for (std::size_t i = 0; i < len; ++i) {
    auto k = g.edge_index(walk[i], walk[i + 1]);
    if (!k) throw ArgumentError("walk uses a non-edge");
    ++(i % 2 == 0 ? plus : minus)[*k];
  }
  return Binomial(std::move(plus), std::move(minus));  // throws if it cancels
}

/// A simple cycle as a vertex sequence v0, ..., v_{l-1} (not repeating v0).
using Cycle = std::vector<std::size_t>;

/// All simple cycles (length >= 3), each once: it starts at its least
/// vertex and its second vertex is smaller than its last.
inline std::vector<Cycle> simple_cycles(const Graph& g, const Limits& limits = {}) {
  std::vector<Cycle> out;
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  Cycle path;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t s,
                                                             std::size_t u) {
    for (auto [v, k] : g.neighbours(u)) {
      if (v == s && path.size() >= 3 && path[1] < path.back()) {
        out.push_back(path);
        if (static_cast<std::int64_t>(out.size()) > limits.cycle_cap) {
          throw ResourceLimitError("cycle enumeration exceeded the cycle budget");
        }
      }
      if (v <= s || on_path[v]) continue;
      on_path[v] = true;
      path.push_back(v);
      extend(s, v);
      path.pop_back();
      on_path[v] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
  return out;
}

/// Chords of a cycle as position pairs (i, j), i < j, in cycle order.
inline std::vector<std::pair<std::size_t, std::size_t>> cycle_chords(const Graph& g,
                                                                     const Cycle& c) {
  std::vector<std::pair<std::size_t, std::size_t>> chords;
  const std::size_t l = c.size();
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 2; j < l; ++j) {
      if (i == 0 && j == l - 1) continue;
      if (g.adjacent(c[i], c[j])) chords.emplace_back(i, j);
    }
  }
  return chords;
}

/// Even closed walks up to `max_length` edges (starting at their least
/// vertex), as binomials; walks whose two sides cancel are skipped.
inline BasisSet walk_binomials(const Graph& g, std::size_t max_length,
                               const Limits& limits = {}) {
  std::vector<Binomial> out;
  std::vector<std::size_t> walk;
  std::int64_t visited = 0;
  ExponentVector plus(g.edge_count(), 0), minus(g.edge_count(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t u) {
    if (++visited > limits.cycle_cap * 100) {
      throw ResourceLimitError("walk enumeration exceeded its budget");
    }
    const std::size_t len = walk.size() - 1;
    if (len >= 2 && len % 2 == 0 && u == walk.front()) {
      bool cancels = plus == minus;
      if (!cancels) out.emplace_back(plus, minus);
    }
    if (len == max_length) return;
    for (auto [v, k] : g.neighbours(u)) {
      if (v < walk.front()) continue;
      auto& side = len % 2 == 0 ? plus : minus;
      ++side[k];
      walk.push_back(v);
      go(v);
      walk.pop_back();
      --side[k];
    }
  };
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    walk = {s};
    go(s);
  }
  return BasisSet(BasisKind::generators, std::move(out));
}

}  // namespace toribase

#endif  // TORIBASE_GRAPH_HPP
