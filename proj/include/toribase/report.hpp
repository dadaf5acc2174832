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

// JSON encodings of library results. Binomials are {"plus": [...],
// "minus": [...]} in canonical orientation; basis arrays follow BasisSet
// order, i.e. (degree, plus, minus).

#ifndef TORIBASE_REPORT_HPP
#define TORIBASE_REPORT_HPP

#include <string>

#include <json.hpp>

#include "toribase/cache.hpp"
#include "toribase/graph_classify.hpp"
#include "toribase/graph_sweep.hpp"
#include "toribase/groebner.hpp"
#include "toribase/io.hpp"
#include "toribase/markov.hpp"
#include "toribase/robustness.hpp"
#include "toribase/semigroup_classify.hpp"
#include "toribase/semigroup_sweep.hpp"

namespace toribase {

using nlohmann::json;

inline json to_json(const Binomial& b) {
  return json{{"plus", b.plus()}, {"minus", b.minus()}};
}

inline json to_json(const BasisSet& s) {
  json arr = json::array();
  for (const auto& b : s) arr.push_back(to_json(b));
  return arr;
}

inline json to_json(const BettiData& b) {
  json entries = json::array();
  for (const auto& e : b.entries) {
    entries.push_back({{"degree", e.degree},
                       {"components", e.components},
                       {"multiplicity", e.multiplicity}});
  }
  return json{{"mu", b.mu}, {"entries", entries}};
}

inline json to_json(const ReducedGB& gb) {
  json arr = json::array();
  for (const auto& g : gb.elements()) arr.push_back({{"lead", g.lead}, {"trail", g.trail}});
  return json{{"order", gb.order().describe()}, {"size", gb.size()}, {"elements", arr}};
}

inline json to_json(const InclusionFlags& f) {
  return json{{"circuits_in_ugb", f.circuits_in_ugb},   {"ugb_in_graver", f.ugb_in_graver},
              {"markov_in_graver", f.markov_in_graver}, {"markov_in_ugb", f.markov_in_ugb},
              {"markov_eq_graver", f.markov_eq_graver}, {"ugb_eq_markov", f.ugb_eq_markov}};
}

/// Verdicts and sizes; the bases themselves are added separately.
inline json robustness_json(const RobustnessReport& r) {
  json sizes;
  for (const auto& [k, n] : r.sizes) sizes[std::string(to_string(k))] = n;
  return json{{"mu", r.mu},
              {"robust", r.is_robust},
              {"generalized_robust", r.is_generalized_robust},
              {"sizes", sizes},
              {"inclusions", to_json(r.flags)}};
}

inline json to_json(const BlockPattern& p) { return p.describe(); }

inline json to_json(const GraphClassification& c) {
  json pats = json::array();
  for (const auto& p : c.patterns) pats.push_back(to_json(p));
  return json{{"quadratic_generated", c.quadratic_generated},
              {"generalized_robust_quadratic", c.generalized_robust_quadratic},
              {"robust_quadratic", c.robust_quadratic},
              {"witness", c.witness},
              {"blocks", c.decomposition.blocks.size()},
              {"bipartite_blocks", c.decomposition.b},
              {"block_patterns", pats}};
}

inline json to_json(const FreeCertificate& c) {
  json levels = json::array();
  for (const auto& l : c.levels) {
    levels.push_back({{"generator", l.generator},
                      {"mu", l.mu},
                      {"beta", l.beta},
                      {"alpha", l.alpha}});
  }
  return json{{"arrangement", c.arrangement}, {"levels", levels}};
}

inline json to_json(const SemigroupClassification& c) {
  json j{{"is_ci", c.is_ci},
         {"is_free", c.is_free},
         {"has_ci_initial", c.has_ci_initial},
         {"unique_betti", c.unique_betti},
         {"betti_divisible", c.betti_divisible},
         {"generalized_robust", c.generalized_robust},
         {"robust", c.robust},
         {"mu", c.mu},
         {"betti_degrees", c.betti_degrees},
         {"algebraic_crosscheck", c.algebraic_checked}};
  if (c.certificate) j["free_certificate"] = to_json(*c.certificate);
  if (c.ci_order) j["ci_order"] = c.ci_order->describe();
  if (c.unique_betti) j["d"] = c.d;
  if (!c.skipped_reason.empty()) j["crosscheck_skipped"] = c.skipped_reason;
  return j;
}

inline json to_json(const InstanceFile& f) {
  json j{{"kind", to_string(f.kind)}, {"rank", f.toric().rank()}};
  switch (f.kind) {
    case InstanceKind::matrix: j["matrix"] = f.toric().matrix(); break;
    case InstanceKind::graph: {
      json edges = json::array();
      for (const auto& [u, v] : f.graph->edges()) {
        edges.push_back({f.graph->label(u), f.graph->label(v)});
      }
      j["vertices"] = f.graph->vertex_count();
      j["edges"] = edges;
      break;
    }
    case InstanceKind::numsgp:
      j["generators"] = f.semigroup->generators();
      j["scale"] = f.scale;
      break;
  }
  return j;
}

/// SHA-256 of the canonical serialization.
inline std::string instance_hash(const InstanceFile& f) {
  return sha256_hex(serialize_instance(f));
}

inline json to_json(const GraphSweepReport& r) {
  json bad = json::array();
  json findings = json::array();
  for (const auto& e : r.entries) {
    if (!e.mismatches.empty() || !e.error.empty()) {
      bad.push_back({{"graph", edge_list_string(e.graph)},
                     {"key", e.key},
                     {"mismatches", e.mismatches},
                     {"error", e.error},
                     {"structural", to_json(e.structural)},
                     {"algebraic", robustness_json(e.report)}});
    }
    for (const auto& f : e.findings) findings.push_back(edge_list_string(e.graph) + ": " + f);
  }
  return json{{"graphs", r.graphs},       {"mismatches", r.mismatches},
              {"errors", r.errors},       {"findings", findings},
              {"failures", bad},
              {"summary", std::to_string(r.graphs) + " graphs, " + std::to_string(r.mismatches) +
                              " mismatches, " + std::to_string(r.errors) + " errors"}};
}

inline json to_json(const SemigroupSweepReport& r) {
  json bad = json::array();
  for (const auto& e : r.entries) {
    if (!e.mismatches.empty() || !e.error.empty()) {
      bad.push_back({{"semigroup", e.semigroup.generators()},
                     {"mismatches", e.mismatches},
                     {"error", e.error},
                     {"classification", to_json(e.classification)},
                     {"lex_ci", e.lex_ci},
                     {"algebraic_generalized_robust", e.alg_generalized_robust},
                     {"algebraic_robust", e.alg_robust},
                     {"circuits_in_markov", e.circuits_in_markov}});
    }
  }
  return json{{"semigroups", r.semigroups},
              {"mismatches", r.mismatches},
              {"errors", r.errors},
              {"failures", bad},
              {"summary", std::to_string(r.semigroups) + " semigroups, " +
                              std::to_string(r.mismatches) + " mismatches, " +
                              std::to_string(r.errors) + " errors"}};
}

}  // namespace toribase

#endif  // TORIBASE_REPORT_HPP
