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

#ifndef TORIBASE_BLOCK_PATTERNS_HPP
#define TORIBASE_BLOCK_PATTERNS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toribase/graph.hpp"

namespace toribase {

struct BlockPattern {
  enum class Kind { cut_edge, k2l, k2l_plus_edge, k4, double_k2rs, necklace, other };

  Kind kind = Kind::other;
  std::size_t ell = 0;      // K2L, K2LPlusEdge
  std::size_t r = 0, s = 0; // DoubleK2RS
  std::string chain;        // necklace: blocks of the unfolded chain, in order

  std::string describe() const {
    switch (kind) {
      case Kind::cut_edge: return "cut edge";
      case Kind::k2l: return "K2," + std::to_string(ell);
      case Kind::k2l_plus_edge: return "K2," + std::to_string(ell) + "+e";
      case Kind::k4: return "K4";
      case Kind::double_k2rs:
        return "double-K2,(" + std::to_string(r) + "," + std::to_string(s) + ")";
      case Kind::necklace: return "necklace[" + chain + "]";
      case Kind::other: return "other";
    }
    return "?";
  }
};

namespace detail {

/// ell when g is K_{2,ell} with ell >= 2.
inline std::optional<std::size_t> complete_bipartite_2l(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 4) return std::nullopt;
  const std::size_t ell = n - 2;
  if (g.edge_count() != 2 * ell) return std::nullopt;
  for (std::size_t a = 0; a < n; ++a) {
    if (g.degree(a) != ell) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (g.degree(b) != ell || g.adjacent(a, b)) continue;
      bool ok = true;
      for (std::size_t v = 0; v < n && ok; ++v) {
        if (v == a || v == b) continue;
        ok = g.degree(v) == 2 && g.adjacent(v, a) && g.adjacent(v, b);
      }
      if (ok) return ell;
    }
  }
  return std::nullopt;
}

inline std::vector<std::size_t> all_but(std::size_t m, std::size_t skip) {
  std::vector<std::size_t> ids;
  for (std::size_t k = 0; k < m; ++k) {
    if (k != skip) ids.push_back(k);
  }
  return ids;
}

inline std::optional<std::size_t> k2l_plus_edge(const Graph& g) {
  if (g.edge_count() % 2 == 0) return std::nullopt;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    try {
      auto sub = edge_subgraph(g, all_but(g.edge_count(), e));
      if (sub.vertex_count() != g.vertex_count()) continue;
      if (auto ell = complete_bipartite_2l(sub)) return ell;
    } catch (const ArgumentError&) {
    }
  }
  return std::nullopt;
}

/// 2-clique sum of K_{2,r} + e and K_{2,s} along e.
inline std::optional<std::pair<std::size_t, std::size_t>> double_k2rs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [p, q] = g.edge(e);
    // components of g - {p, q}
    std::vector<int> comp(n, -1);
    int count = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == p || v == q || comp[v] >= 0) continue;
      std::vector<std::size_t> stack{v};
      comp[v] = count;
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto [w, k] : g.neighbours(u)) {
          if (w == p || w == q || comp[w] >= 0) continue;
          comp[w] = count;
          stack.push_back(w);
        }
      }
      ++count;
    }
    if (count < 2 || count > 16) continue;
    for (std::uint32_t mask = 1; mask + 1 < (1u << count); ++mask) {
      std::vector<std::size_t> e1, e2;  // edges of G1 - e and of G2
      for (std::size_t k = 0; k < g.edge_count(); ++k) {
        if (k == e) {
          e2.push_back(k);
          continue;
        }
        auto [a, b] = g.edge(k);
        auto side_of = [&](std::size_t v) { return comp[v]; };
        int c = side_of(a) >= 0 ? side_of(a) : side_of(b);
        ((mask >> c) & 1u ? e1 : e2).push_back(k);
      }
      try {
        std::vector<std::size_t> back;
        auto g1 = edge_subgraph(g, e1, &back);
        // e must join two vertices of the first part
        if (std::find(back.begin(), back.end(), p) == back.end() ||
            std::find(back.begin(), back.end(), q) == back.end()) {
          continue;
        }
        auto r = complete_bipartite_2l(g1);
        auto s = complete_bipartite_2l(edge_subgraph(g, e2));
        if (r && s) return std::make_pair(*r, *s);
      } catch (const ArgumentError&) {
      }
    }
  }
  return std::nullopt;
}

/// Chain description when splitting some vertex unfolds g into a chain of
/// K_{2,n}/cut-edge blocks with the two copies of the vertex non-adjacent,
/// at odd distance, not cut vertices, and in the two end blocks. Different
/// splits can unfold the same graph differently, so the description is the
/// smallest over all valid splits and both reading directions.
inline std::optional<std::string> necklace(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::optional<std::string> best;
  for (std::size_t x = 0; x < n; ++x) {
    const auto& inc = g.neighbours(x);
    const std::size_t d = inc.size();
    if (d < 2) continue;
    if (d > 16) throw ResourceLimitError("vertex degree above 16 in necklace test");
    for (std::uint32_t mask = 0; mask < (1u << (d - 1)); ++mask) {
      // incident edge 0 always goes to x; edges with a set bit go to the copy
      std::vector<bool> moved(g.edge_count(), false);
      bool any = false;
      for (std::size_t i = 1; i < d; ++i) {
        if ((mask >> (i - 1)) & 1u) {
          moved[inc[i].second] = true;
          any = true;
        }
      }
      if (!any) continue;
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < g.edge_count(); ++k) {
        auto [a, b] = g.edge(k);
        if (moved[k]) {
          if (a == x) a = n;
          if (b == x) b = n;
        }
        edges.emplace_back(a, b);
      }
      std::optional<Graph> rg;
      try {
        rg.emplace(n + 1, edges);
      } catch (const ArgumentError&) {
        continue;
      }
      const Graph& R = *rg;
      auto col = R.two_colouring();
      if (!col || (*col)[x] == (*col)[n]) continue;
      auto dec = blocks(R);
      const std::size_t k = dec.blocks.size();
      if (k < 2) continue;
      if (std::binary_search(dec.cut_vertices.begin(), dec.cut_vertices.end(), x) ||
          std::binary_search(dec.cut_vertices.begin(), dec.cut_vertices.end(), n)) {
        continue;
      }
      // block tree must be a path
      std::vector<std::size_t> cuts_per_block(k, 0);
      std::map<std::size_t, std::size_t> blocks_per_cut;
      for (auto [bi, c] : dec.block_tree) {
        ++cuts_per_block[bi];
        ++blocks_per_cut[c];
      }
      bool path = true;
      std::size_t ends = 0;
      for (auto c : cuts_per_block) {
        if (c == 1) ++ends;
        else if (c != 2) path = false;
      }
      for (auto [c, cnt] : blocks_per_cut) {
        if (cnt != 2) path = false;
      }
      if (!path || ends != 2) continue;
      std::vector<std::string> kinds(k);
      bool shapes = true;
      std::vector<std::set<std::size_t>> verts(k);
      for (std::size_t bi = 0; bi < k && shapes; ++bi) {
        for (auto e : dec.blocks[bi]) {
          verts[bi].insert(R.edge(e).first);
          verts[bi].insert(R.edge(e).second);
        }
        if (dec.blocks[bi].size() == 1) {
          kinds[bi] = "cut";
        } else if (auto ell = complete_bipartite_2l(edge_subgraph(R, dec.blocks[bi]))) {
          kinds[bi] = "K2," + std::to_string(*ell);
        } else {
          shapes = false;
        }
      }
      if (!shapes) continue;
      // x and its copy must sit in different end blocks
      std::optional<std::size_t> bx, bc;
      for (std::size_t bi = 0; bi < k; ++bi) {
        if (verts[bi].count(x)) bx = bi;
        if (verts[bi].count(n)) bc = bi;
      }
      if (!bx || !bc || *bx == *bc) continue;
      if (cuts_per_block[*bx] != 1 || cuts_per_block[*bc] != 1) continue;
      // walk the chain from x's block
      std::vector<std::string> parts;
      std::size_t cur = *bx;
      std::set<std::size_t> used_cuts;
      for (std::size_t step = 0; step < k; ++step) {
        parts.push_back(kinds[cur]);
        std::optional<std::size_t> next;
        for (auto [bi, c] : dec.block_tree) {
          if (bi != cur || used_cuts.count(c)) continue;
          used_cuts.insert(c);
          for (auto [bj, c2] : dec.block_tree) {
            if (c2 == c && bj != cur) next = bj;
          }
          break;
        }
        if (!next) break;
        cur = *next;
      }
      auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (const auto& p : v) out += (out.empty() ? "" : "-") + p;
        return out;
      };
      auto chain = join(parts);
      std::reverse(parts.begin(), parts.end());
      chain = std::min(chain, join(parts));
      if (!best || chain < *best) best = chain;
    }
  }
  return best;
}

}  // namespace detail

/// Pattern of a biconnected block (or single edge). Checked in the order
/// cut edge, K_{2,l}, K4, K_{2,l}+e, double-K_{2,(r,s)}, necklace.
inline BlockPattern recognize_block(const Graph& block) {
  BlockPattern p;
  using K = BlockPattern::Kind;
  if (block.edge_count() == 1) {
    p.kind = K::cut_edge;
    return p;
  }
  if (auto ell = detail::complete_bipartite_2l(block)) {
    p.kind = K::k2l;
    p.ell = *ell;
    return p;
  }
  if (block.vertex_count() == 4 && block.edge_count() == 6) {
    p.kind = K::k4;
    return p;
  }
  if (block.is_bipartite()) return p;
  if (auto ell = detail::k2l_plus_edge(block)) {
    p.kind = K::k2l_plus_edge;
    p.ell = *ell;
    return p;
  }
  if (auto rs = detail::double_k2rs(block)) {
    p.kind = K::double_k2rs;
    p.r = rs->first;
    p.s = rs->second;
    return p;
  }
  if (auto chain = detail::necklace(block)) {
    p.kind = K::necklace;
    p.chain = *chain;
    return p;
  }
  return p;
}

}  // namespace toribase

#endif  // TORIBASE_BLOCK_PATTERNS_HPP
