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

#ifndef TRICOVER_TRIANGLE_COUNT_HPP_
#define TRICOVER_TRIANGLE_COUNT_HPP_

#include <cstdint>
#include <functional>
#include <string>

#include "tricover/bfs_cover.hpp"
#include "tricover/graph.hpp"
#include "tricover/intersect.hpp"

namespace tricover {

struct TriangleCountReport {
  std::uint64_t total = 0;
  std::string algorithm;
  std::uint64_t horizontal_edges_scanned = 0;
  std::uint64_t intersections_performed = 0;
  double elapsed_seconds = 0.0;
};

/// Receives (u, v, w) where {u,v} is the horizontal edge (u < v) and w the
/// apex, once per triangle.
using TriangleSink = std::function<void(VertexId, VertexId, VertexId)>;

/// The counting rule shared by the sequential and distributed cover-edge
/// counters. With {u,v} horizontal, the apex w closes a triangle that is
/// counted here iff w is on another level (the edge is the triangle's only
/// horizontal edge) or, when all three share a level, v < w so only the
/// lowest edge of the triple counts it.
inline bool CountsApex(const std::vector<std::uint32_t>& level, VertexId u,
                       VertexId v, VertexId w) {
  return level[u] != level[w] || v < w;
}

struct CetcOptions {
  IntersectKernel kernel = IntersectKernel::kMerge;
  // Worker threads splitting the cover-edge loop; forced to 1 with a sink.
  unsigned threads = 1;
  TriangleSink sink;
};

/// Cover-edge triangle counting: one intersection per horizontal edge.
TriangleCountReport CountCetc(const Graph& g, const BfsLabels& labels,
                              const EdgeClassification& cls,
                              const CetcOptions& options = {});

/// Convenience: lowest-id BFS, classification, then CountCetc.
TriangleCountReport CountCetc(const Graph& g, const CetcOptions& options = {});

inline constexpr VertexId kBruteForceMaxVertices = 512;

/// Tests all C(n,3) triples. Refuses graphs above kBruteForceMaxVertices.
TriangleCountReport CountBruteForce(const Graph& g);

/// Degree-oriented edge iterator: every edge directed low to high
/// (degree, id) rank, each triangle counted at its lowest-ranked edge.
TriangleCountReport CountEdgeIterator(const Graph& g);

}  // namespace tricover

#endif  // TRICOVER_TRIANGLE_COUNT_HPP_
