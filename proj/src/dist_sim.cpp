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

#include "tricover/dist_sim.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "tricover/errors.hpp"
#include "tricover/intersect.hpp"
#include "tricover/triangle_count.hpp"

namespace tricover {

std::vector<VertexId> Partition::local_vertices(ProcessorId i) const {
  std::vector<VertexId> out(end_vertex(i) - first_vertex(i));
  std::iota(out.begin(), out.end(), first_vertex(i));
  return out;
}

std::uint32_t CeilLog2(std::uint64_t x) {
  return x <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(x - 1));
}

Partition PartitionVertices(const Graph& g, std::uint32_t p) {
  const VertexId n = g.num_vertices();
  if (p == 0 || !std::has_single_bit(p)) {
    throw DomainError("processor count " + std::to_string(p) +
                      " is not a power of two, which the XOR exchange "
                      "schedule requires");
  }
  if (p > n) {
    throw DomainError("processor count " + std::to_string(p) +
                      " exceeds vertex count " + std::to_string(n));
  }
  std::vector<std::uint64_t> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 0; v < n; ++v) prefix[v + 1] = prefix[v] + g.degree(v);
  const auto endpoints = prefix.back();

  Partition part;
  part.p = p;
  part.range_begin.assign(p + 1, 0);
  part.range_begin[p] = n;
  std::size_t cut = 0;
  for (std::uint32_t i = 1; i < p; ++i) {
    // Exact comparison of |prefix - i*2m/p| scaled by p.
    const auto target = static_cast<unsigned __int128>(endpoints) * i;
    auto dist = [&](std::size_t j) {
      const auto have = static_cast<unsigned __int128>(prefix[j]) * p;
      return have > target ? have - target : target - have;
    };
    const auto above = std::partition_point(
        prefix.begin() + static_cast<std::ptrdiff_t>(cut), prefix.end(),
        [&](std::uint64_t s) {
          return static_cast<unsigned __int128>(s) * p < target;
        });
    std::size_t j = static_cast<std::size_t>(above - prefix.begin());
    if (j > cut && (j > n || dist(j - 1) <= dist(j))) --j;
    cut = j;
    part.range_begin[i] = static_cast<VertexId>(cut);
  }
  part.owner.resize(n);
  part.endpoint_load.assign(p, 0);
  for (ProcessorId i = 0; i < p; ++i) {
    for (VertexId v = part.range_begin[i]; v < part.range_begin[i + 1]; ++v) {
      part.owner[v] = i;
    }
    part.endpoint_load[i] =
        prefix[part.range_begin[i + 1]] - prefix[part.range_begin[i]];
  }
  return part;
}

std::vector<std::vector<std::pair<ProcessorId, ProcessorId>>>
XorExchangeSchedule(std::uint32_t p) {
  if (p == 0 || !std::has_single_bit(p)) {
    throw DomainError("XOR exchange needs a power-of-two processor count");
  }
  std::vector<std::vector<std::pair<ProcessorId, ProcessorId>>> rounds;
  for (std::uint32_t j = 1; j < p; ++j) {
    auto& pairs = rounds.emplace_back();
    for (ProcessorId i = 0; i < p; ++i) {
      const ProcessorId partner = i ^ j;
      if (i < partner) pairs.emplace_back(i, partner);
    }
  }
  return rounds;
}

namespace {

void CheckInputs(const Graph& g, const BfsLabels& labels,
                 const EdgeClassification& cls, const Partition& part) {
  if (part.owner.size() != g.num_vertices() ||
      part.range_begin.size() != part.p + 1 ||
      part.range_begin.back() != g.num_vertices()) {
    throw DomainError("partition does not match the graph's vertex count");
  }
  if (labels.level.size() != g.num_vertices() ||
      cls.class_of.size() != g.num_edges()) {
    throw DomainError("BFS labels or edge classes do not belong to this graph");
  }
}

std::vector<std::vector<Edge>> SplitCoverEdges(const EdgeClassification& cls,
                                               const Partition& part) {
  std::vector<std::vector<Edge>> sets(part.p);
  for (const Edge& e : cls.cover_edges) sets[part.owner[e.u]].push_back(e);
  return sets;
}

std::span<const VertexId> Clip(std::span<const VertexId> adj, VertexId lo,
                               VertexId hi) {
  const auto first = std::lower_bound(adj.begin(), adj.end(), lo);
  const auto last = std::lower_bound(first, adj.end(), hi);
  return {first, last};
}

}  // namespace

CommLedger ChargeLedger(const Graph& g, const Partition& part,
                        const EdgeClassification& cls,
                        const BfsLabels& labels) {
  const std::uint64_t m = g.num_edges();
  const std::uint64_t lg_n = CeilLog2(g.num_vertices());
  CommLedger ledger;
  ledger.p = part.p;
  ledger.diameter_proxy = DiameterProxy(labels);
  ledger.bfs_bits = m * (CeilLog2(ledger.diameter_proxy) + 3 * lg_n);
  ledger.rounds = part.p - 1;
  ledger.edges_shipped = cls.cover_edges.size() * (part.p - 1);
  ledger.cover_exchange_bits = ledger.edges_shipped * 2 * lg_n;
  ledger.reduction_bits = (part.p - 1) * lg_n;
  ledger.total_bits =
      ledger.bfs_bits + ledger.cover_exchange_bits + ledger.reduction_bits;
  ledger.formula_exchange_bits = cls.cover_edges.size() * part.p * lg_n;
  return ledger;
}

SimResult SimulateCommCetc(const Graph& g, const BfsLabels& labels,
                           const EdgeClassification& cls,
                           const Partition& part, const SimTriangleSink& sink) {
  CheckInputs(g, labels, cls, part);
  const std::uint32_t p = part.p;
  const auto sets = SplitCoverEdges(cls, part);

  SimResult result;
  result.per_processor_counts.assign(p, 0);
  for (const auto& s : sets) result.cover_set_sizes.push_back(s.size());

  // Processor i sees only apexes in its own range. N(x) clipped to that
  // range is what i can rebuild from its local adjacency by symmetry.
  auto count_on = [&](ProcessorId i, std::uint32_t round,
                      const std::vector<Edge>& edges) {
    const VertexId lo = part.first_vertex(i);
    const VertexId hi = part.end_vertex(i);
    std::uint64_t t = 0;
    for (const Edge& e : edges) {
      ForEachCommon(Clip(g.neighbors(e.u), lo, hi),
                    Clip(g.neighbors(e.v), lo, hi), IntersectKernel::kMerge,
                    [&](VertexId w) {
                      if (CountsApex(labels.level, e.u, e.v, w)) {
                        ++t;
                        if (sink) sink(i, round, e.u, e.v, w);
                      }
                    });
    }
    result.per_processor_counts[i] += t;
  };

  for (ProcessorId i = 0; i < p; ++i) {
    count_on(i, 0, sets[i]);
    result.peak_edges_held = std::max<std::uint64_t>(result.peak_edges_held,
                                                     sets[i].size());
  }

  std::uint64_t shipped = 0;
  for (std::uint32_t j = 1; j < p; ++j) {
    for (ProcessorId i = 0; i < p; ++i) {
      // Received set lives for this round only.
      const auto& received = sets[i ^ j];
      shipped += received.size();
      result.peak_edges_held = std::max<std::uint64_t>(
          result.peak_edges_held, sets[i].size() + received.size());
      count_on(i, j, received);
    }
  }

  result.ledger = ChargeLedger(g, part, cls, labels);
  if (shipped != result.ledger.edges_shipped) {
    throw ConsistencyError("simulated shipments disagree with the ledger");
  }
  for (auto t : result.per_processor_counts) result.total_triangles += t;
  return result;
}

void WriteLedger(const CommLedger& ledger, std::ostream& out) {
  out << "p=" << ledger.p << '\n'
      << "rounds=" << ledger.rounds << '\n'
      << "diameter_proxy=" << ledger.diameter_proxy << '\n'
      << "edges_shipped=" << ledger.edges_shipped << '\n'
      << "bfs_bits=" << ledger.bfs_bits << '\n'
      << "cover_exchange_bits=" << ledger.cover_exchange_bits << '\n'
      << "reduction_bits=" << ledger.reduction_bits << '\n'
      << "total_bits=" << ledger.total_bits << '\n'
      << "formula_exchange_bits=" << ledger.formula_exchange_bits << '\n';
}

std::string LedgerRecord(const std::string& graph_name, double k,
                         const SimResult& result) {
  const auto& l = result.ledger;
  nlohmann::ordered_json j;
  j["graph"] = graph_name;
  j["p"] = l.p;
  j["k"] = k;
  j["triangles"] = result.total_triangles;
  j["rounds"] = l.rounds;
  j["diameter_proxy"] = l.diameter_proxy;
  j["edges_shipped"] = l.edges_shipped;
  j["bfs_bits"] = l.bfs_bits;
  j["cover_exchange_bits"] = l.cover_exchange_bits;
  j["reduction_bits"] = l.reduction_bits;
  j["total_bits"] = l.total_bits;
  j["formula_exchange_bits"] = l.formula_exchange_bits;
  j["peak_edges_held"] = result.peak_edges_held;
  return j.dump();
}

}  // namespace tricover
