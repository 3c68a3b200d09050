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

#ifndef TRICOVER_BFS_COVER_HPP_
#define TRICOVER_BFS_COVER_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "tricover/graph.hpp"

namespace tricover {

inline constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();

enum class RootPolicy {
  kLowestId,      // lowest unvisited id starts each component
  kGivenRoots,    // caller's roots first, then lowest-id for the rest
  kSeededRandom,  // a uniformly random vertex of each component
};

const char* ToString(RootPolicy policy);
RootPolicy ParseRootPolicy(const std::string& name);

struct BfsOptions {
  RootPolicy policy = RootPolicy::kLowestId;
  std::vector<VertexId> roots;  // used by kGivenRoots
  std::uint64_t seed = 0;       // used by kSeededRandom
};

/// Result of a BFS forest over every component.
struct BfsLabels {
  std::vector<std::uint32_t> level;      // L(v), distance from its root
  std::vector<VertexId> component;       // root of v's component
  std::vector<VertexId> parent;          // kNoParent for roots
  std::vector<VertexId> roots;           // in traversal order
  std::vector<std::uint32_t> max_depth;  // eccentricity of each root
};

/// Level-synchronous BFS from each root, neighbors visited in ascending id
/// order, so levels and parents are fully determined by the root choice.
BfsLabels BfsForest(const Graph& g, const BfsOptions& options = {});

enum class EdgeClass : std::uint8_t { kTree, kStrut, kHorizontal };

const char* ToString(EdgeClass c);

struct EdgeClassification {
  // Indexed like Graph::Edges(): canonical (u < v) order.
  std::vector<EdgeClass> class_of;
  // Horizontal edges with u < v; this is the cover-edge set.
  std::vector<Edge> cover_edges;
  std::uint64_t tree_count = 0;
  std::uint64_t strut_count = 0;
  double k = 0.0;  // |cover_edges| / m, 0 for an edgeless graph

  std::uint64_t horizontal_count() const { return cover_edges.size(); }
};

/// Tags every edge as tree, strut or horizontal. Throws ConsistencyError when
/// an edge spans more than one level (labels are not a BFS of g) and
/// DomainError when label sizes do not match g.
EdgeClassification ClassifyEdges(const Graph& g, const BfsLabels& labels);

/// Largest root eccentricity over all components; stands in for the diameter.
std::uint32_t DiameterProxy(const BfsLabels& labels);

/// "id level parent" per vertex; roots print parent as -1.
void WriteLevels(const BfsLabels& labels, std::ostream& out);
/// "u v class" per edge in canonical order.
void WriteEdgeClasses(const Graph& g, const EdgeClassification& cls,
                      std::ostream& out);

}  // namespace tricover

#endif  // TRICOVER_BFS_COVER_HPP_
