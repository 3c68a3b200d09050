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

#include "tricover/triangle_count.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "tricover/errors.hpp"

namespace tricover {

const char* ToString(IntersectKernel kernel) {
  switch (kernel) {
    case IntersectKernel::kMerge:
      return "merge";
    case IntersectKernel::kBinarySearch:
      return "bsearch";
    case IntersectKernel::kHash:
      return "hash";
  }
  return "?";
}

IntersectKernel ParseIntersectKernel(const std::string& name) {
  if (name == "merge") return IntersectKernel::kMerge;
  if (name == "bsearch" || name == "binary_search") {
    return IntersectKernel::kBinarySearch;
  }
  if (name == "hash") return IntersectKernel::kHash;
  throw DomainError("unknown intersection kernel '" + name +
                    "' (expected merge, bsearch or hash)");
}

std::vector<VertexId> Intersect(std::span<const VertexId> a,
                                std::span<const VertexId> b,
                                IntersectKernel kernel) {
  std::vector<VertexId> out;
  ForEachCommon(a, b, kernel, [&](VertexId w) { out.push_back(w); });
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t CountCoverRange(const Graph& g,
                              const std::vector<std::uint32_t>& level,
                              std::span<const Edge> edges,
                              IntersectKernel kernel, const TriangleSink* sink) {
  std::uint64_t t = 0;
  for (const Edge& e : edges) {
    ForEachCommon(g.neighbors(e.u), g.neighbors(e.v), kernel, [&](VertexId w) {
      if (CountsApex(level, e.u, e.v, w)) {
        ++t;
        if (sink != nullptr) (*sink)(e.u, e.v, w);
      }
    });
  }
  return t;
}

}  // namespace

TriangleCountReport CountCetc(const Graph& g, const BfsLabels& labels,
                              const EdgeClassification& cls,
                              const CetcOptions& options) {
  if (labels.level.size() != g.num_vertices() ||
      cls.class_of.size() != g.num_edges()) {
    throw DomainError("BFS labels or edge classes do not belong to this graph");
  }
  const auto start = Clock::now();
  const std::span<const Edge> cover(cls.cover_edges);
  const TriangleSink* sink = options.sink ? &options.sink : nullptr;

  unsigned workers = std::max(1u, options.threads);
  if (sink != nullptr) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(1, cover.size())));

  std::uint64_t total = 0;
  if (workers == 1) {
    total = CountCoverRange(g, labels.level, cover, options.kernel, sink);
  } else {
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::jthread> pool;
    const std::size_t chunk = (cover.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(cover.size(), w * chunk);
      const std::size_t hi = std::min(cover.size(), lo + chunk);
      pool.emplace_back([&, w, lo, hi] {
        partial[w] = CountCoverRange(g, labels.level, cover.subspan(lo, hi - lo),
                                     options.kernel, nullptr);
      });
    }
    pool.clear();
    for (auto t : partial) total += t;
  }

  TriangleCountReport report;
  report.total = total;
  report.algorithm = std::string("cetc-") + ToString(options.kernel);
  report.horizontal_edges_scanned = cover.size();
  report.intersections_performed = cover.size();
  report.elapsed_seconds = SecondsSince(start);
  return report;
}

TriangleCountReport CountCetc(const Graph& g, const CetcOptions& options) {
  const auto labels = BfsForest(g);
  const auto cls = ClassifyEdges(g, labels);
  return CountCetc(g, labels, cls, options);
}

TriangleCountReport CountBruteForce(const Graph& g) {
  const VertexId n = g.num_vertices();
  if (n > kBruteForceMaxVertices) {
    throw DomainError("brute-force counting refuses n=" + std::to_string(n) +
                      " > " + std::to_string(kBruteForceMaxVertices) +
                      "; use the edge-iterator counter instead");
  }
  const auto start = Clock::now();
  std::uint64_t t = 0;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!g.HasEdge(a, b)) continue;
      for (VertexId c = b + 1; c < n; ++c) {
        if (g.HasEdge(a, c) && g.HasEdge(b, c)) ++t;
      }
    }
  }
  TriangleCountReport report;
  report.total = t;
  report.algorithm = "brute";
  report.elapsed_seconds = SecondsSince(start);
  return report;
}

TriangleCountReport CountEdgeIterator(const Graph& g) {
  const auto start = Clock::now();
  const VertexId n = g.num_vertices();

  // Out-neighbors under the degree ordering, kept in ascending id order.
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<VertexId> out;
  out.reserve(g.num_edges());
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (DegreeRankLess(g, v, w)) out.push_back(w);
    }
    offsets[v + 1] = out.size();
  }
  auto higher = [&](VertexId v) {
    return std::span<const VertexId>(out.data() + offsets[v],
                                     out.data() + offsets[v + 1]);
  };

  std::uint64_t t = 0;
  std::uint64_t intersections = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : higher(u)) {
      ++intersections;
      ForEachCommon(higher(u), higher(v), IntersectKernel::kMerge,
                    [&](VertexId) { ++t; });
    }
  }
  TriangleCountReport report;
  report.total = t;
  report.algorithm = "edge-iter";
  report.intersections_performed = intersections;
  report.elapsed_seconds = SecondsSince(start);
  return report;
}

}  // namespace tricover
