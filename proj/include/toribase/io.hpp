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

// Line-oriented instance files:
//
//   matrix n m        graph        numsgp a1 ... am
//   <n rows of m>     u v
//                     ...
//
// Everything after '#' on a line is a comment. Graph vertices are positive
// integer labels; vertex order follows the numeric order of the labels.

#ifndef TORIBASE_IO_HPP
#define TORIBASE_IO_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toribase/errors.hpp"
#include "toribase/graph.hpp"
#include "toribase/instance.hpp"
#include "toribase/numsgp.hpp"

namespace toribase {

enum class InstanceKind { matrix, graph, numsgp };

inline std::string_view to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::matrix: return "matrix";
    case InstanceKind::graph: return "graph";
    case InstanceKind::numsgp: return "numsgp";
  }
  return "?";
}

/// A parsed and validated instance. `instance` is always set; `graph` and
/// `semigroup` are set for their kinds. For semigroups, `scale` is the gcd
/// divided out and `raw` the generators as written.
struct InstanceFile {
  InstanceKind kind = InstanceKind::matrix;
  std::optional<ToricInstance> instance;
  std::optional<Graph> graph;
  std::optional<NumericalSemigroup> semigroup;
  std::int64_t scale = 1;
  std::vector<std::int64_t> raw;

  const ToricInstance& toric() const { return instance.value(); }
};

namespace detail {

struct Token {
  std::string_view text;
  int line;
  int column;
};

/// Non-empty lines split into tokens, comments removed.
inline std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) toks.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    pos = end + 1;
  }
  return lines;
}

inline std::int64_t to_int(const Token& t) {
  std::int64_t v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (*first == '+') ++first;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("integer out of range: " + std::string(t.text), t.line, t.column);
  }
  if (ec != std::errc() || p != last || first == last) {
    throw ParseError("expected an integer, found '" + std::string(t.text) + "'", t.line, t.column);
  }
  return v;
}

inline void expect_count(const std::vector<Token>& line, std::size_t n, const std::string& what) {
  if (line.size() < n) {
    const auto& last = line.back();
    throw ParseError("expected " + what, last.line,
                     last.column + static_cast<int>(last.text.size()));
  }
  if (line.size() > n) {
    throw ParseError("unexpected token '" + std::string(line[n].text) + "'", line[n].line,
                     line[n].column);
  }
}

}  // namespace detail

/// Parses and validates an instance. Syntax errors raise ParseError with
/// the offending position; invariant violations raise ArgumentError.
inline InstanceFile parse_instance(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty instance", 1, 1);
  const auto& head = lines[0];
  const auto keyword = head[0].text;
  InstanceFile f;
  if (keyword == "matrix") {
    detail::expect_count(head, 3, "'matrix n m'");
    const auto n = detail::to_int(head[1]);
    const auto m = detail::to_int(head[2]);
    if (n <= 0) throw ParseError("row count must be positive", head[1].line, head[1].column);
    if (m <= 0) throw ParseError("column count must be positive", head[2].line, head[2].column);
    if (static_cast<std::int64_t>(lines.size()) - 1 < n) {
      const auto& last = lines.back().back();
      throw ParseError("expected " + std::to_string(n) + " matrix rows", last.line + 1, 1);
    }
    ToricInstance::Matrix rows;
    for (std::int64_t r = 1; r <= n; ++r) {
      const auto& line = lines[static_cast<std::size_t>(r)];
      detail::expect_count(line, static_cast<std::size_t>(m),
                           std::to_string(m) + " entries in row " + std::to_string(r));
      std::vector<std::int64_t> row;
      for (const auto& t : line) {
        auto v = detail::to_int(t);
        if (v < 0) throw ParseError("matrix entries must be nonnegative", t.line, t.column);
        row.push_back(v);
      }
      rows.push_back(std::move(row));
    }
    if (static_cast<std::int64_t>(lines.size()) > n + 1) {
      const auto& t = lines[static_cast<std::size_t>(n) + 1][0];
      throw ParseError("unexpected line after the matrix rows", t.line, t.column);
    }
    f.kind = InstanceKind::matrix;
    f.instance.emplace(std::move(rows), InstanceOrigin::matrix);
    return f;
  }
  if (keyword == "graph") {
    detail::expect_count(head, 1, "'graph' alone on its line");
    std::vector<std::pair<std::int64_t, std::int64_t>> raw_edges;
    std::map<std::int64_t, std::size_t> index;
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const auto& line = lines[k];
      detail::expect_count(line, 2, "an edge 'u v'");
      const auto u = detail::to_int(line[0]);
      const auto v = detail::to_int(line[1]);
      if (u <= 0) throw ParseError("vertex labels must be positive", line[0].line, line[0].column);
      if (v <= 0) throw ParseError("vertex labels must be positive", line[1].line, line[1].column);
      if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line[0].line, line[0].column);
      raw_edges.emplace_back(u, v);
      index[u] = 0;
      index[v] = 0;
    }
    if (raw_edges.empty()) throw ParseError("graph has no edges", head[0].line, head[0].column);
    std::vector<std::string> labels;
    for (auto& [label, idx] : index) {
      idx = labels.size();
      labels.push_back(std::to_string(label));
    }
    std::vector<Edge> edges;
    for (auto [u, v] : raw_edges) edges.emplace_back(index[u], index[v]);
    f.kind = InstanceKind::graph;
    f.graph.emplace(labels.size(), std::move(edges), std::move(labels));
    f.instance.emplace(graph_instance(*f.graph));
    return f;
  }
  if (keyword == "numsgp") {
    if (head.size() < 2) {
      throw ParseError("expected generators after 'numsgp'", head[0].line,
                       head[0].column + static_cast<int>(head[0].text.size()));
    }
    for (std::size_t k = 1; k < head.size(); ++k) {
      auto a = detail::to_int(head[k]);
      if (a <= 0) throw ParseError("generators must be positive", head[k].line, head[k].column);
      f.raw.push_back(a);
    }
    if (lines.size() > 1) {
      throw ParseError("unexpected line after the generators", lines[1][0].line, lines[1][0].column);
    }
    auto [d, s] = make_semigroup(f.raw);
    f.kind = InstanceKind::numsgp;
    f.scale = d;
    f.semigroup = std::move(s);
    f.instance.emplace(f.semigroup->instance());
    return f;
  }
  throw ParseError("unknown instance kind '" + std::string(keyword) +
                       "' (expected matrix, graph or numsgp)",
                   head[0].line, head[0].column);
}

/// Canonical text of a (normalized) instance. Parsing it gives back the
/// same instance; semigroups are written in reduced form.
inline std::string serialize_instance(const InstanceFile& f) {
  std::string out;
  switch (f.kind) {
    case InstanceKind::matrix: {
      out = "matrix " + std::to_string(f.toric().rows()) + " " + std::to_string(f.toric().cols()) + "\n";
      for (const auto& row : f.toric().matrix()) {
        for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
        out += "\n";
      }
      break;
    }
    case InstanceKind::graph: {
      out = "graph\n";
      for (const auto& [u, v] : f.graph->edges()) {
        out += f.graph->label(u) + " " + f.graph->label(v) + "\n";
      }
      break;
    }
    case InstanceKind::numsgp: {
      out = "numsgp";
      for (auto a : f.semigroup->generators()) out += " " + std::to_string(a);
      out += "\n";
      break;
    }
  }
  return out;
}

/// Same kind and same underlying object (matrix, edge list, generators).
inline bool same_instance(const InstanceFile& a, const InstanceFile& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case InstanceKind::matrix: return a.toric() == b.toric();
    case InstanceKind::graph:
      return a.graph->vertex_count() == b.graph->vertex_count() &&
             a.graph->edges() == b.graph->edges() && a.graph->labels() == b.graph->labels();
    case InstanceKind::numsgp: return *a.semigroup == *b.semigroup;
  }
  return false;
}

}  // namespace toribase

#endif  // TORIBASE_IO_HPP
