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

#ifndef TRICOVER_DIST_SIM_HPP_
#define TRICOVER_DIST_SIM_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tricover/bfs_cover.hpp"
#include "tricover/graph.hpp"

namespace tricover {

using ProcessorId = std::uint32_t;

/// Contiguous vertex ranges, one per processor, sized by edge endpoints.
struct Partition {
  std::uint32_t p = 1;
  std::vector<ProcessorId> owner;          // per vertex
  std::vector<VertexId> range_begin;       // p + 1 entries; V_i = [b_i, b_{i+1})
  std::vector<std::uint64_t> endpoint_load;  // sum of degrees on each processor

  VertexId first_vertex(ProcessorId i) const { return range_begin[i]; }
  VertexId end_vertex(ProcessorId i) const { return range_begin[i + 1]; }
  std::vector<VertexId> local_vertices(ProcessorId i) const;
};

/// Splits vertices in id order so each processor holds about 2m/p edge
/// endpoints: cut i lands on the vertex prefix whose degree sum is closest to
/// i*2m/p. p must be a power of two (XOR exchange) and at most n.
Partition PartitionVertices(const Graph& g, std::uint32_t p);

/// Round j (1..p-1) pairs processor i with i XOR j. Entry [j-1] lists the
/// round's pairs (a, b) with a < b.
std::vector<std::vector<std::pair<ProcessorId, ProcessorId>>>
XorExchangeSchedule(std::uint32_t p);

std::uint32_t CeilLog2(std::uint64_t x);

/// Simulated communication, in bits.
struct CommLedger {
  std::uint32_t p = 1;
  std::uint64_t bfs_bits = 0;             // m * (ceil lg D + 3 ceil lg n)
  std::uint64_t cover_exchange_bits = 0;  // shipped edges * 2 ceil lg n
  std::uint64_t reduction_bits = 0;       // (p - 1) ceil lg n
  std::uint64_t total_bits = 0;
  std::uint32_t rounds = 0;
  std::uint64_t edges_shipped = 0;
  // The closed-form exchange term, |S| * p * ceil lg n, for comparison.
  std::uint64_t formula_exchange_bits = 0;
  std::uint32_t diameter_proxy = 0;
};

/// Ledger implied by the partition: every S_i travels to each of the other
/// p - 1 processors once.
CommLedger ChargeLedger(const Graph& g, const Partition& part,
                        const EdgeClassification& cls, const BfsLabels& labels);

/// Observes each counted triangle: (processor, round, u, v, w). Round 0 is the
/// local phase.
using SimTriangleSink = std::function<void(ProcessorId, std::uint32_t,
                                           VertexId, VertexId, VertexId)>;

struct SimResult {
  std::uint64_t total_triangles = 0;
  std::vector<std::uint64_t> per_processor_counts;
  std::vector<std::uint64_t> cover_set_sizes;  // |S_i|
  CommLedger ledger;
  // Largest number of cover edges one processor held at once (own + received).
  std::uint64_t peak_edges_held = 0;
};

/// Deterministic lockstep simulation of the cover-edge exchange algorithm.
/// Horizontal edge {u,v} (u < v) belongs to owner(u). Processor i counts the
/// apexes it owns for its own edges, then for S_{i xor j} in round j.
SimResult SimulateCommCetc(const Graph& g, const BfsLabels& labels,
                           const EdgeClassification& cls,
                           const Partition& part,
                           const SimTriangleSink& sink = {});

/// key=value lines.
void WriteLedger(const CommLedger& ledger, std::ostream& out);
/// Single-line JSON object for downstream tooling.
std::string LedgerRecord(const std::string& graph_name, double k,
                         const SimResult& result);

}  // namespace tricover

#endif  // TRICOVER_DIST_SIM_HPP_
