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

#ifndef TORIBASE_GRAPH_CLASSIFY_HPP
#define TORIBASE_GRAPH_CLASSIFY_HPP

#include <string>
#include <vector>

#include "toribase/block_patterns.hpp"
#include "toribase/graph.hpp"
#include "toribase/quadratic.hpp"

namespace toribase {

/// Structural verdicts computed from the graph alone.
struct GraphClassification {
  bool quadratic_generated = false;
  bool generalized_robust_quadratic = false;
  bool robust_quadratic = false;
  std::string witness;  // why a flag is false; empty when all hold

  BlockDecomposition decomposition;
  std::vector<BlockPattern> patterns;  // per block
};

/// Quadratic generation by the cycle criterion; generalized robustness with
/// quadrics by block shapes: every bipartite block is K_{2,l} or a cut edge
/// and at most one block is non-bipartite, which must be K4, K_{2,l}+e, a
/// double-K_{2,(r,s)} or a necklace. Robustness additionally rules out K4.
inline GraphClassification classify_graph(const Graph& g, const Limits& limits = {}) {
  GraphClassification c;
  auto q = quadratic_generation(g, limits);
  c.quadratic_generated = q.value;
  c.decomposition = blocks(g);
  const auto& dec = c.decomposition;
  using K = BlockPattern::Kind;
  std::size_t non_bipartite = 0;
  bool shapes_ok = true;
  bool has_k4 = false;
  std::string why;
  for (std::size_t bi = 0; bi < dec.blocks.size(); ++bi) {
    auto p = recognize_block(edge_subgraph(g, dec.blocks[bi]));
    const bool bip = dec.bipartite[bi];
    if (!bip) ++non_bipartite;
    const bool ok = bip ? (p.kind == K::k2l || p.kind == K::cut_edge)
                        : (p.kind == K::k4 || p.kind == K::k2l_plus_edge ||
                           p.kind == K::double_k2rs || p.kind == K::necklace);
    if (!ok && shapes_ok) {
      shapes_ok = false;
      why = "block " + std::to_string(bi + 1) + " has no admissible shape";
    }
    if (p.kind == K::k4) has_k4 = true;
    c.patterns.push_back(std::move(p));
  }
  if (non_bipartite > 1 && shapes_ok) {
    shapes_ok = false;
    why = std::to_string(non_bipartite) + " non-bipartite blocks";
  }
  c.generalized_robust_quadratic = shapes_ok;
  c.robust_quadratic = shapes_ok && !has_k4;
  if (!q.value) {
    c.witness = "not generated by quadrics: " + q.explanation;
  } else if (!shapes_ok) {
    c.witness = why;
  } else if (has_k4) {
    c.witness = "a K4 block prevents robustness";
  }
  return c;
}

}  // namespace toribase

#endif  // TORIBASE_GRAPH_CLASSIFY_HPP
