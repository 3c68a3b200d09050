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

#ifndef TRICOVER_GRAPH_HPP_
#define TRICOVER_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tricover {

using VertexId = std::uint32_t;

/// Undirected edge. Canonical form has first < second.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Counts of what normalization threw away while building a Graph.
struct NormalizationSummary {
  std::uint64_t input_pairs = 0;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
};

/// Immutable undirected simple graph in CSR form.
///
/// Every undirected edge {u,v} is stored twice, as v in N(u) and u in N(v).
/// Each adjacency range is strictly increasing and never contains its own
/// vertex. Construction validates all of this; a Graph that exists is valid.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds from arbitrary vertex pairs over ids [0, n). Self-loops and
  /// duplicate or reversed pairs are dropped. Throws DomainError on ids >= n.
  static Graph FromPairs(VertexId n, std::span<const Edge> pairs,
                         NormalizationSummary* summary = nullptr);

  /// Adopts prebuilt CSR arrays after checking every structural invariant.
  static Graph FromCsr(std::vector<std::uint64_t> offsets,
                       std::vector<VertexId> neighbors);

  VertexId num_vertices() const {
    return static_cast<VertexId>(offsets_.size() - 1);
  }
  std::uint64_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const std::uint64_t> row_offsets() const { return offsets_; }
  std::span<const VertexId> adjacency() const { return neighbors_; }

  /// Edge membership by binary search in N(u). Throws DomainError when u or
  /// v is not a vertex.
  bool HasEdge(VertexId u, VertexId v) const;

  /// Canonical edge list: u < v, ascending.
  std::vector<Edge> Edges() const;

  /// Calls f(u, v) for each edge once with u < v, in canonical order.
  template <typename F>
  void ForEachEdge(F&& f) const {
    const VertexId n = num_vertices();
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v : neighbors(u)) {
        if (v > u) f(u, v);
      }
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::vector<std::uint64_t> offsets, std::vector<VertexId> neighbors)
      : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {}

  void Validate() const;

  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
};

struct LoadOptions {
  bool skip_comments = true;
  // External ids start at 1; they are shifted down by one in the id map.
  bool one_indexed = false;
  // Dense ids by first appearance. When false, ids are used as given and
  // n = largest id + 1.
  bool compact_ids = true;
};

/// A graph read from text plus the external id of each dense vertex.
struct LoadedGraph {
  Graph graph;
  std::vector<std::uint64_t> external_ids;
  NormalizationSummary summary;
  std::uint64_t lines_read = 0;
};

/// Reads a SNAP-style whitespace edge list. Dense ids are assigned in order of
/// first appearance. Throws ParseError naming the line for malformed tokens.
LoadedGraph LoadEdgeList(std::istream& in, const LoadOptions& options = {});

/// File variant of LoadEdgeList. Throws std::runtime_error if unreadable.
LoadedGraph LoadEdgeListFile(const std::string& path,
                             const LoadOptions& options = {});

/// Writes one "u v" line per edge, u < v, ascending.
void WriteEdgeList(const Graph& g, std::ostream& out);

/// How a wedge (2-path) is counted.
enum class WedgeDefinition {
  // sum over v of C(d(v), 2)
  kTotal,
  // sum over v of C(d+(v), 2), edges directed from lower to higher
  // (degree, id) rank
  kDegreeOriented,
};

const char* ToString(WedgeDefinition def);
WedgeDefinition ParseWedgeDefinition(const std::string& name);

struct DegreeStats {
  std::vector<std::uint32_t> degrees;
  std::vector<std::uint32_t> out_degrees;  // under degree ordering
  std::uint32_t d_max = 0;
  std::uint64_t wedge_total = 0;
  std::uint64_t wedge_oriented = 0;

  std::uint64_t wedges(WedgeDefinition def) const {
    return def == WedgeDefinition::kTotal ? wedge_total : wedge_oriented;
  }
};

/// True when a precedes b in the degree ordering (degree, then id).
inline bool DegreeRankLess(const Graph& g, VertexId a, VertexId b) {
  const auto da = g.degree(a);
  const auto db = g.degree(b);
  return da != db ? da < db : a < b;
}

/// Sum of C(d, 2) over the given degrees. Throws OverflowError past 64 bits.
std::uint64_t WedgeSum(std::span<const std::uint32_t> degrees);

/// Exact degree and wedge statistics. Throws OverflowError rather than wrap.
DegreeStats ComputeDegreeStats(const Graph& g);

}  // namespace tricover

#endif  // TRICOVER_GRAPH_HPP_
