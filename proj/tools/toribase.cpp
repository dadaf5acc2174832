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

// toribase: command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 resource limit,
// 3 internal inconsistency (including sweep mismatches).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "toribase/toribase.hpp"

namespace {

using namespace toribase;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kResource = 2, kInconsistent = 3 };

struct Common {
  std::string input;
  std::int64_t fiber_cap = 1'000'000;
  std::int64_t step_cap = 10'000'000;
  double timeout_secs = 0;
  std::string cache_dir;
  bool no_cache = false;
  std::string format = "json";
  unsigned threads = 0;

  Limits limits() const {
    Limits l;
    l.fiber_cap = fiber_cap;
    l.step_cap = step_cap;
    if (timeout_secs > 0) {
      l.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(timeout_secs));
    }
    return l;
  }
};

struct OrderFlags {
  std::string order = "grevlex";
  std::vector<std::string> perm;
  std::vector<std::string> weights;
};

std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read input file '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

MonomialOrder build_order(const OrderFlags& o, std::size_t m) {
  std::vector<std::size_t> perm;
  if (o.perm.empty()) {
    perm = MonomialOrder::identity(m);
  } else {
    if (o.perm.size() != m) {
      throw ArgumentError("--perm needs " + std::to_string(m) + " entries");
    }
    for (const auto& s : o.perm) {
      std::size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(s, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != s.size() || v < 1 || static_cast<std::size_t>(v) > m) {
        throw ArgumentError("--perm entry '" + s + "' is not a variable index 1.." +
                            std::to_string(m));
      }
      perm.push_back(static_cast<std::size_t>(v - 1));
    }
  }
  MonomialOrder base = o.order == "lex"     ? MonomialOrder::lex(perm)
                       : o.order == "grlex" ? MonomialOrder::graded_lex(perm)
                                            : MonomialOrder::graded_revlex(perm);
  if (o.weights.empty()) return base;
  if (o.weights.size() != m) {
    throw ArgumentError("--weights needs " + std::to_string(m) + " entries");
  }
  std::vector<mpq_class> w;
  for (const auto& s : o.weights) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ArgumentError("--weights entry '" + s + "' is not a rational");
    q.canonicalize();
    w.push_back(q);
  }
  return MonomialOrder::weight(w, base);
}

json bases_result(const InstanceFile& f, const std::string& which, const Limits& limits) {
  const auto& inst = f.toric();
  json r;
  if (which == "all") {
    auto rep = robustness_report(inst, limits);
    r["circuits"] = to_json(rep.circuits);
    r["graver"] = to_json(rep.graver);
    r["ugb"] = to_json(rep.ugb);
    r["markov"] = to_json(rep.markov);
    r["betti"] = to_json(rep.betti);
    r["verdicts"] = robustness_json(rep);
  } else if (which == "circuits") {
    r["circuits"] = to_json(circuits(inst, limits));
  } else if (which == "graver") {
    r["graver"] = to_json(graver(inst, limits));
  } else if (which == "ugb") {
    r["ugb"] = to_json(universal_groebner(inst, limits));
  } else {
    auto mk = universal_markov(inst, limits);
    r["markov"] = to_json(mk.basis);
    r["betti"] = to_json(mk.betti);
  }
  return r;
}

json classify_result(const InstanceFile& f, const Limits& limits) {
  json r;
  switch (f.kind) {
    case InstanceKind::graph: {
      auto e = check_graph(*f.graph, limits);
      if (!e.error.empty()) throw ResourceLimitError(e.error);
      if (!e.mismatches.empty()) {
        std::string all;
        for (const auto& m : e.mismatches) all += (all.empty() ? "" : "; ") + m;
        throw InconsistencyError("structural and algebraic verdicts disagree: " + all);
      }
      r["structural"] = to_json(e.structural);
      r["algebraic"] = robustness_json(e.report);
      r["quadratic_generated"] = e.algebraic.quadratic;
      r["generalized_robust"] = e.algebraic.generalized_robust;
      r["robust"] = e.algebraic.robust;
      r["height"] = e.algebraic.height;
      if (!e.findings.empty()) r["findings"] = e.findings;
      break;
    }
    case InstanceKind::numsgp: {
      r = to_json(classify_semigroup(*f.semigroup, limits));
      break;
    }
    case InstanceKind::matrix: {
      auto rep = robustness_report(f.toric(), limits);
      r = robustness_json(rep);
      r["circuit_ideal"] = is_circuit_ideal(f.toric(), limits);
      break;
    }
  }
  return r;
}

json gb_result(const InstanceFile& f, const OrderFlags& o, const Limits& limits) {
  const auto order = build_order(o, f.toric().cols());
  auto gb = buchberger(toric_generators(f.toric(), limits), order, limits);
  json r = to_json(gb);
  r["initial_ideal"] = initial_ideal(gb);
  return r;
}

std::string render_binomials(const json& arr) {
  std::string out;
  for (const auto& b : arr) {
    Binomial bin(b["plus"].get<ExponentVector>(), b["minus"].get<ExponentVector>());
    out += "  " + to_string(bin) + "\n";
  }
  return out;
}

/// Human-readable rendering of a report document.
std::string render_text(const json& doc) {
  std::ostringstream os;
  const auto& res = doc["result"];
  if (doc.contains("instance")) {
    os << "instance: " << doc["instance"]["kind"].get<std::string>() << " ("
       << doc["instance_hash"].get<std::string>().substr(0, 16) << ")"
       << (doc.value("cached", false) ? " [cached]" : "") << "\n";
  }
  for (const auto& key : {"circuits", "graver", "ugb", "markov"}) {
    if (res.contains(key) && res[key].is_array()) {
      os << key << " (" << res[key].size() << "):\n" << render_binomials(res[key]);
    }
  }
  if (res.contains("elements") && res.contains("order")) {
    os << "order: " << res["order"].get<std::string>() << "\n";
    os << "reduced Groebner basis (" << res["size"].get<std::size_t>() << "):\n";
    for (const auto& e : res["elements"]) {
      os << "  " << monomial_string(e["lead"].get<ExponentVector>()) << " - "
         << monomial_string(e["trail"].get<ExponentVector>()) << "\n";
    }
  }
  const bool gb_shown = res.contains("elements") && res.contains("order");
  for (auto it = res.begin(); it != res.end(); ++it) {
    if (gb_shown && (it.key() == "order" || it.key() == "size")) continue;
    if (it.value().is_boolean() || it.value().is_number() || it.value().is_string()) {
      os << it.key() << ": " << it.value().dump() << "\n";
    }
  }
  for (const auto& key : {"verdicts", "structural", "algebraic", "betti", "free_certificate"}) {
    if (res.contains(key)) os << key << ": " << res[key].dump() << "\n";
  }
  if (res.contains("failures")) {
    for (const auto& f : res["failures"]) os << "failure: " << f.dump() << "\n";
  }
  if (res.contains("findings")) {
    for (const auto& f : res["findings"]) os << "finding: " << f.get<std::string>() << "\n";
  }
  return os.str();
}

void emit(const json& doc, const std::string& format) {
  if (format == "text") {
    std::cout << render_text(doc);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

/// Shared driver for bases, classify and gb: parse, look up the cache,
/// compute, store, print.
int run_instance_command(const std::string& command, const Common& c, const json& flags,
                         const std::function<json(const InstanceFile&, const Limits&)>& compute) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto file = parse_instance(read_input(c.input));
  const auto ihash = instance_hash(file);
  const auto flag_text = json{{"command", command}, {"flags", flags}}.dump();
  auto warn = [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };
  ResultCache cache(default_cache_dir(c.cache_dir), kToolVersion, warn);
  const auto key = ResultCache::key(ihash, flag_text);

  json doc;
  bool cached = false;
  if (!c.no_cache) {
    if (auto hit = cache.load(key, ihash)) {
      doc = std::move(*hit);
      cached = true;
    }
  }
  if (!cached) {
    doc = json{{"tool_version", kToolVersion},
               {"command", command},
               {"flags", flags},
               {"instance", to_json(file)},
               {"instance_hash", ihash},
               {"result", compute(file, c.limits())}};
    doc["document_hash"] = document_hash(doc);
    if (!c.no_cache) cache.store(key, doc);
  }
  doc["cached"] = cached;
  doc["timings"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  emit(doc, c.format);
  return kOk;
}

void add_common(CLI::App* app, Common& c, bool needs_input) {
  if (needs_input) {
    app->add_option("-i,--input", c.input, "Instance file ('-' for stdin)")->required();
    app->add_option("--cache-dir", c.cache_dir, "Result cache directory");
    app->add_flag("--no-cache", c.no_cache, "Always compute; never read or write the cache");
  } else {
    app->add_option("--threads", c.threads, "Worker threads (0 = hardware)");
  }
  app->add_option("--fiber-cap", c.fiber_cap, "Largest fiber or monomial set enumerated")
      ->capture_default_str();
  app->add_option("--step-cap", c.step_cap, "Reduction step budget")->capture_default_str();
  app->add_option("--timeout-secs", c.timeout_secs, "Wall-clock budget (0 = none)");
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric ideal bases, robustness classification and verification sweeps"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Common common;
  std::string basis = "all";
  OrderFlags order;
  std::size_t max_vertices = 6, min_vertices = 2;
  std::int64_t max_gen = 25;
  std::size_t embdim = 4, min_embdim = 2;

  auto* bases = app.add_subcommand("bases", "Compute circuits, Graver, universal Groebner and Markov bases");
  add_common(bases, common, true);
  bases->add_option("--basis", basis, "Which basis")
      ->check(CLI::IsMember({"circuits", "graver", "ugb", "markov", "all"}))
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Robustness classification");
  add_common(classify, common, true);

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of the toric ideal");
  add_common(gb, common, true);
  gb->add_option("--order", order.order, "Monomial order")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}))
      ->capture_default_str();
  gb->add_option("--perm", order.perm, "Variable order, most significant first (1-based)")
      ->delimiter(',');
  gb->add_option("--weights", order.weights, "Positive rational weights, ties broken by --order")
      ->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify->require_subcommand(1);
  auto* vg = verify->add_subcommand("graphs", "All connected graphs up to a vertex bound");
  add_common(vg, common, false);
  vg->add_option("--max-vertices", max_vertices, "Largest vertex count (2..6)")->capture_default_str();
  vg->add_option("--min-vertices", min_vertices, "Smallest vertex count")->capture_default_str();
  auto* vn = verify->add_subcommand("numsgp", "All numerical semigroups up to bounds");
  add_common(vn, common, false);
  vn->add_option("--max-gen", max_gen, "Largest generator")->capture_default_str();
  vn->add_option("--embdim", embdim, "Largest embedding dimension")->capture_default_str();
  vn->add_option("--min-embdim", min_embdim, "Smallest embedding dimension")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (bases->parsed()) {
      return run_instance_command("bases", common, json{{"basis", basis}},
                                  [&](const InstanceFile& f, const Limits& l) {
                                    return bases_result(f, basis, l);
                                  });
    }
    if (classify->parsed()) {
      return run_instance_command("classify", common, json::object(), classify_result);
    }
    if (gb->parsed()) {
      json flags{{"order", order.order}, {"perm", order.perm}, {"weights", order.weights}};
      return run_instance_command("gb", common, flags,
                                  [&](const InstanceFile& f, const Limits& l) {
                                    return gb_result(f, order, l);
                                  });
    }
    const auto t0 = std::chrono::steady_clock::now();
    json doc{{"tool_version", kToolVersion}};
    std::size_t mismatches = 0;
    if (vg->parsed()) {
      auto rep = verify_graph_theorems(max_vertices, common.limits(), common.threads, min_vertices);
      mismatches = rep.mismatches;
      doc["command"] = "verify graphs";
      doc["flags"] = {{"max_vertices", max_vertices}, {"min_vertices", min_vertices}};
      doc["result"] = to_json(rep);
    } else {
      auto rep = verify_semigroup_theorems(max_gen, embdim, common.limits(), common.threads,
                                           min_embdim);
      mismatches = rep.mismatches;
      doc["command"] = "verify numsgp";
      doc["flags"] = {{"max_gen", max_gen}, {"embdim", embdim}, {"min_embdim", min_embdim}};
      doc["result"] = to_json(rep);
    }
    doc["timings"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    if (common.format == "text") {
      std::cout << render_text(doc);
    } else {
      std::cout << doc.dump(2) << "\n";
    }
    return mismatches == 0 ? kOk : kInconsistent;
  } catch (const ParseError& e) {
    std::cerr << "error: parse error at " << e.what() << "\n";
    return kUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InconsistencyError& e) {
    std::cerr << "error: internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: internal failure: " << e.what() << "\n";
    return kInconsistent;
  }
}
