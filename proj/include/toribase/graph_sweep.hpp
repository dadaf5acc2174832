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

#ifndef TORIBASE_GRAPH_SWEEP_HPP
#define TORIBASE_GRAPH_SWEEP_HPP

#include <atomic>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "toribase/graph_classify.hpp"
#include "toribase/graph_enum.hpp"
#include "toribase/robustness.hpp"

namespace toribase {

/// Verdicts computed from the bases of I_G.
struct AlgebraicGraphVerdict {
  bool quadratic = false;            // every minimal binomial is a quadric
  bool generalized_robust = false;   // U = M
  bool robust = false;               // |U| = mu
  bool markov_in_ugb = false;
  bool markov_eq_graver = false;
  std::int64_t mu = 0;
  std::size_t height = 0;
};

struct GraphSweepEntry {
  std::string key;
  Graph graph;
  GraphClassification structural;
  AlgebraicGraphVerdict algebraic;
  RobustnessReport report;
  std::vector<std::string> mismatches;
  std::vector<std::string> findings;  // noteworthy, not failures
  std::string error;  // budget exhaustion, if any
};

struct GraphSweepReport {
  std::vector<GraphSweepEntry> entries;
  std::size_t graphs = 0;
  std::size_t mismatches = 0;
  std::size_t findings = 0;
  std::size_t errors = 0;
};

inline std::string edge_list_string(const Graph& g) {
  std::string s;
  for (const auto& [u, v] : g.edges()) {
    if (!s.empty()) s += " ";
    s += g.label(u) + "-" + g.label(v);
  }
  return s;
}

/// Pairs of edge-disjoint odd cycles, split by whether they meet in at
/// most one vertex (`loose`) or in two or more (`tight`).
struct OddCyclePairs {
  std::size_t loose = 0;
  std::size_t tight = 0;
};

inline OddCyclePairs edge_disjoint_odd_cycles(const Graph& g, const std::vector<Cycle>& cycles) {
  std::vector<std::set<std::size_t>> edges, verts;
  for (const auto& c : cycles) {
    if (c.size() % 2 == 0) continue;
    std::set<std::size_t> es;
    for (std::size_t i = 0; i < c.size(); ++i) {
      es.insert(*g.edge_index(c[i], c[(i + 1) % c.size()]));
    }
    edges.push_back(std::move(es));
    verts.emplace_back(c.begin(), c.end());
  }
  OddCyclePairs out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      bool disjoint = true;
      for (auto e : edges[i]) disjoint = disjoint && !edges[j].count(e);
      if (!disjoint) continue;
      std::size_t common = 0;
      for (auto v : verts[i]) common += verts[j].count(v);
      ++(common <= 1 ? out.loose : out.tight);
    }
  }
  return out;
}

/// Compares structural and algebraic verdicts for one graph and records
/// every disagreement.
inline GraphSweepEntry check_graph(const Graph& g, const Limits& limits = {}) {
  GraphSweepEntry e;
  e.key = g.vertex_count() <= 8 ? canonical_key(g) : std::string();
  e.graph = g;
  try {
    e.structural = classify_graph(g, limits);
    const auto inst = graph_instance(g);
    e.report = robustness_report(inst, limits);
    auto& a = e.algebraic;
    a.mu = e.report.mu;
    a.height = ideal_height(inst);
    a.quadratic = true;
    for (const auto& b : e.report.markov) a.quadratic = a.quadratic && b.is_quadric();
    a.generalized_robust = e.report.is_generalized_robust;
    a.robust = e.report.is_robust;
    a.markov_in_ugb = e.report.flags.markov_in_ugb;
    a.markov_eq_graver = e.report.flags.markov_eq_graver;

    auto& s = e.structural;
    auto flag = [&](bool structural, bool algebraic, const std::string& what) {
      if (structural != algebraic) {
        e.mismatches.push_back(what + ": structural " + (structural ? "true" : "false") +
                               ", algebraic " + (algebraic ? "true" : "false"));
      }
    };
    flag(s.quadratic_generated, a.quadratic, "quadratic generation");
    flag(s.generalized_robust_quadratic, a.quadratic && a.generalized_robust,
         "generalized robust with quadrics");
    flag(s.robust_quadratic, a.quadratic && a.robust, "robust with quadrics");
    const auto expected_height =
        g.edge_count() - g.vertex_count() + static_cast<std::size_t>(e.structural.decomposition.b);
    if (a.height != expected_height) {
      e.mismatches.push_back("height " + std::to_string(a.height) + " differs from |E|-|V|+b = " +
                             std::to_string(expected_height));
    }
    if (!a.markov_in_ugb) e.mismatches.push_back("universal Markov basis not inside U");
    if (a.generalized_robust != a.markov_eq_graver) {
      e.mismatches.push_back("U = M disagrees with M = Gr");
    }
    if (a.quadratic && a.generalized_robust) {
      auto cycles = simple_cycles(g, limits);
      for (const auto& c : cycles) {
        if (c.size() >= 6 && c.size() % 2 == 0) {
          e.mismatches.push_back("generalized robust with quadrics but has even cycle " +
                                 cycle_string(g, c));
          break;
        }
      }
      // Two edge-disjoint odd cycles meeting in at most one vertex give a
      // primitive walk of degree >= 3, which cannot happen here. Cycles
      // meeting in two or more vertices give no such walk; they do occur
      // (e.g. in double-K_{2,(2,2)}) and are recorded as findings only.
      auto pairs = edge_disjoint_odd_cycles(g, cycles);
      if (pairs.loose > 0) {
        e.mismatches.push_back(
            "generalized robust with quadrics but has edge-disjoint odd cycles meeting in at most one vertex");
      }
      if (pairs.tight > 0) {
        e.findings.push_back(std::to_string(pairs.tight) +
                             " pair(s) of edge-disjoint odd cycles sharing two or more vertices");
      }
    }
  } catch (const InconsistencyError& ex) {
    e.mismatches.push_back(ex.what());
  } catch (const ResourceLimitError& ex) {
    e.error = ex.what();
  }
  return e;
}

/// Runs check_graph on every connected graph with min_vertices..max_vertices
/// vertices, using `threads` workers. Entries keep enumeration order.
inline GraphSweepReport verify_graph_theorems(std::size_t max_vertices,
                                              const Limits& limits = {},
                                              unsigned threads = 0,
                                              std::size_t min_vertices = 2) {
  if (max_vertices > 6) throw ArgumentError("graph sweep supports at most 6 vertices");
  std::vector<Graph> graphs;
  for (std::size_t n = std::max<std::size_t>(2, min_vertices); n <= max_vertices; ++n) {
    for (auto& g : connected_graphs(n)) graphs.push_back(std::move(g));
  }
  GraphSweepReport rep;
  rep.entries.resize(graphs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) {
      rep.entries[i] = check_graph(graphs[i], limits);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  rep.graphs = graphs.size();
  for (const auto& e : rep.entries) {
    rep.mismatches += e.mismatches.size();
    rep.findings += e.findings.size();
    rep.errors += e.error.empty() ? 0 : 1;
  }
  return rep;
}

}  // namespace toribase

#endif  // TORIBASE_GRAPH_SWEEP_HPP
