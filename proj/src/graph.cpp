// Copyright 2026 The tricover Authors
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

#include "tricover/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "tricover/errors.hpp"

namespace tricover {

Graph Graph::FromPairs(VertexId n, std::span<const Edge> pairs,
                       NormalizationSummary* summary) {
  NormalizationSummary local;
  local.input_pairs = pairs.size();

  std::vector<Edge> canon;
  canon.reserve(pairs.size());
  for (const Edge& e : pairs) {
    if (e.u >= n || e.v >= n) {
      throw DomainError("edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") outside vertex range [0," +
                        std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      ++local.self_loops_dropped;
      continue;
    }
    canon.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(canon.begin(), canon.end());
  const auto last = std::unique(canon.begin(), canon.end());
  local.duplicates_dropped = static_cast<std::uint64_t>(canon.end() - last);
  canon.erase(last, canon.end());

  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : canon) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];

  // Filling in canonical (u, v) order makes each range sorted: lower
  // neighbors arrive first (as the v side of earlier u's), then higher ones.
  std::vector<VertexId> neighbors(canon.size() * 2);
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : canon) neighbors[cursor[e.v]++] = e.u;
  for (const Edge& e : canon) neighbors[cursor[e.u]++] = e.v;

  if (summary != nullptr) *summary = local;
  Graph g(std::move(offsets), std::move(neighbors));
  g.Validate();
  return g;
}

Graph Graph::FromCsr(std::vector<std::uint64_t> offsets,
                     std::vector<VertexId> neighbors) {
  if (offsets.empty()) throw DomainError("row offsets must have n+1 entries");
  Graph g(std::move(offsets), std::move(neighbors));
  g.Validate();
  return g;
}

void Graph::Validate() const {
  const auto n = offsets_.size() - 1;
  if (n > std::numeric_limits<VertexId>::max()) {
    throw DomainError("too many vertices for 32-bit ids");
  }
  if (offsets_.front() != 0 || offsets_.back() != neighbors_.size() ||
      neighbors_.size() % 2 != 0) {
    throw ConsistencyError("row offsets do not span an even adjacency array");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (offsets_[v] > offsets_[v + 1]) {
      throw ConsistencyError("row offsets not monotone at vertex " +
                             std::to_string(v));
    }
    const auto adj = neighbors(static_cast<VertexId>(v));
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i] >= n) throw ConsistencyError("neighbor id out of range");
      if (adj[i] == v) {
        throw ConsistencyError("self-loop at vertex " + std::to_string(v));
      }
      if (i > 0 && adj[i - 1] >= adj[i]) {
        throw ConsistencyError("adjacency of vertex " + std::to_string(v) +
                               " not strictly increasing");
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (VertexId w : neighbors(static_cast<VertexId>(v))) {
      const auto back = neighbors(w);
      if (!std::binary_search(back.begin(), back.end(),
                              static_cast<VertexId>(v))) {
        throw ConsistencyError("asymmetric adjacency between " +
                               std::to_string(v) + " and " + std::to_string(w));
      }
    }
  }
}

bool Graph::HasEdge(VertexId u, VertexId v) const {
  const VertexId n = num_vertices();
  if (u >= n || v >= n) {
    throw DomainError("vertex id out of range: (" + std::to_string(u) + "," +
                      std::to_string(v) + ") with n=" + std::to_string(n));
  }
  // Search the shorter list.
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  ForEachEdge([&](VertexId u, VertexId v) { edges.push_back({u, v}); });
  return edges;
}

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view NextToken(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && IsSpace(rest[i])) ++i;
  std::size_t j = i;
  while (j < rest.size() && !IsSpace(rest[j])) ++j;
  const auto token = rest.substr(i, j - i);
  rest.remove_prefix(j);
  return token;
}

std::uint64_t ParseId(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected a non-negative integer vertex id, got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

LoadedGraph LoadEdgeList(std::istream& in, const LoadOptions& options) {
  LoadedGraph out;
  std::unordered_map<std::uint64_t, VertexId> dense;
  std::vector<Edge> pairs;

  std::uint64_t max_id = 0;
  bool any_id = false;
  auto intern = [&](std::uint64_t external, std::size_t line) -> VertexId {
    if (options.one_indexed) {
      if (external == 0) {
        throw ParseError(line, "vertex id 0 in a one-indexed edge list");
      }
      --external;
    }
    if (!options.compact_ids) {
      if (external >= std::numeric_limits<VertexId>::max()) {
        throw ParseError(line, "vertex id exceeds 32-bit range");
      }
      max_id = any_id ? std::max(max_id, external) : external;
      any_id = true;
      return static_cast<VertexId>(external);
    }
    const auto [it, inserted] =
        dense.try_emplace(external, static_cast<VertexId>(dense.size()));
    if (inserted) {
      if (dense.size() > std::numeric_limits<VertexId>::max()) {
        throw ParseError(line, "more distinct vertices than 32-bit ids allow");
      }
      out.external_ids.push_back(external);
    }
    return it->second;
  };

  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string_view rest(text);
    const auto first = NextToken(rest);
    if (first.empty()) continue;
    if (first.front() == '#' || first.front() == '%') {
      if (options.skip_comments) continue;
      throw ParseError(line, "comment line while comments are disabled");
    }
    const auto second = NextToken(rest);
    if (second.empty()) throw ParseError(line, "expected two vertex ids");
    if (!NextToken(rest).empty()) {
      throw ParseError(line, "unexpected third token");
    }
    const VertexId u = intern(ParseId(first, line), line);
    const VertexId v = intern(ParseId(second, line), line);
    pairs.push_back({u, v});
  }
  out.lines_read = line;
  VertexId n = static_cast<VertexId>(dense.size());
  if (!options.compact_ids) {
    n = any_id ? static_cast<VertexId>(max_id + 1) : 0;
    out.external_ids.resize(n);
    for (VertexId v = 0; v < n; ++v) out.external_ids[v] = v;
  }
  out.graph = Graph::FromPairs(n, pairs, &out.summary);
  return out;
}

LoadedGraph LoadEdgeListFile(const std::string& path,
                             const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  return LoadEdgeList(in, options);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  g.ForEachEdge([&](VertexId u, VertexId v) { out << u << ' ' << v << '\n'; });
}

const char* ToString(WedgeDefinition def) {
  return def == WedgeDefinition::kTotal ? "total" : "oriented";
}

WedgeDefinition ParseWedgeDefinition(const std::string& name) {
  if (name == "total") return WedgeDefinition::kTotal;
  if (name == "oriented") return WedgeDefinition::kDegreeOriented;
  throw DomainError("unknown wedge definition '" + name +
                    "' (expected total or oriented)");
}

namespace {

std::uint64_t Choose2(std::uint64_t d) {
  // d < 2^32, so d * (d - 1) fits in 64 bits.
  return d < 2 ? 0 : d * (d - 1) / 2;
}

void CheckedAdd(std::uint64_t& acc, std::uint64_t x) {
  if (__builtin_add_overflow(acc, x, &acc)) {
    throw OverflowError("wedge count exceeds 64 bits");
  }
}

}  // namespace

std::uint64_t WedgeSum(std::span<const std::uint32_t> degrees) {
  std::uint64_t total = 0;
  for (auto d : degrees) CheckedAdd(total, Choose2(d));
  return total;
}

DegreeStats ComputeDegreeStats(const Graph& g) {
  const VertexId n = g.num_vertices();
  DegreeStats s;
  s.degrees.resize(n);
  s.out_degrees.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto d = g.degree(v);
    s.degrees[v] = d;
    s.d_max = std::max(s.d_max, d);
    std::uint32_t out = 0;
    for (VertexId w : g.neighbors(v)) {
      if (DegreeRankLess(g, v, w)) ++out;
    }
    s.out_degrees[v] = out;
  }
  s.wedge_total = WedgeSum(s.degrees);
  s.wedge_oriented = WedgeSum(s.out_degrees);
  return s;
}

}  // namespace tricover
