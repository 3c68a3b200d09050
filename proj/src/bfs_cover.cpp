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

#include "tricover/bfs_cover.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>

#include "tricover/errors.hpp"

namespace tricover {

const char* ToString(RootPolicy policy) {
  switch (policy) {
    case RootPolicy::kLowestId:
      return "lowest_id";
    case RootPolicy::kGivenRoots:
      return "given_roots";
    case RootPolicy::kSeededRandom:
      return "seeded_random";
  }
  return "?";
}

RootPolicy ParseRootPolicy(const std::string& name) {
  if (name == "lowest_id" || name == "lowest") return RootPolicy::kLowestId;
  if (name == "given_roots" || name == "given") return RootPolicy::kGivenRoots;
  if (name == "seeded_random" || name == "random") {
    return RootPolicy::kSeededRandom;
  }
  throw DomainError("unknown root policy '" + name + "'");
}

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

class ForestBuilder {
 public:
  explicit ForestBuilder(const Graph& g) : g_(g) {
    const auto n = g.num_vertices();
    labels_.level.assign(n, kUnvisited);
    labels_.component.assign(n, kNoParent);
    labels_.parent.assign(n, kNoParent);
    queue_.reserve(n);
  }

  bool visited(VertexId v) const { return labels_.level[v] != kUnvisited; }

  void Run(VertexId root) {
    labels_.roots.push_back(root);
    labels_.level[root] = 0;
    labels_.component[root] = root;
    queue_.clear();
    queue_.push_back(root);
    std::uint32_t depth = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const VertexId u = queue_[head];
      const auto next = labels_.level[u] + 1;
      for (VertexId w : g_.neighbors(u)) {
        if (visited(w)) continue;
        labels_.level[w] = next;
        labels_.parent[w] = u;
        labels_.component[w] = root;
        depth = next;
        queue_.push_back(w);
      }
    }
    labels_.max_depth.push_back(depth);
  }

  BfsLabels Take() { return std::move(labels_); }

 private:
  const Graph& g_;
  BfsLabels labels_;
  std::vector<VertexId> queue_;
};

}  // namespace

BfsLabels BfsForest(const Graph& g, const BfsOptions& options) {
  const VertexId n = g.num_vertices();
  ForestBuilder forest(g);

  switch (options.policy) {
    case RootPolicy::kGivenRoots:
      for (VertexId r : options.roots) {
        if (r >= n) {
          throw DomainError("BFS root " + std::to_string(r) +
                            " is not a vertex (n=" + std::to_string(n) + ")");
        }
        if (forest.visited(r)) {
          throw DomainError("BFS root " + std::to_string(r) +
                            " lies in a component already rooted");
        }
        forest.Run(r);
      }
      [[fallthrough]];
    case RootPolicy::kLowestId:
      for (VertexId v = 0; v < n; ++v) {
        if (!forest.visited(v)) forest.Run(v);
      }
      break;
    case RootPolicy::kSeededRandom: {
      // The first vertex of a component met in a uniform permutation is a
      // uniform choice within that component.
      std::vector<VertexId> order(n);
      std::iota(order.begin(), order.end(), VertexId{0});
      std::mt19937_64 rng(options.seed);
      for (VertexId i = n; i > 1; --i) {
        const auto j = static_cast<VertexId>(rng() % i);
        std::swap(order[i - 1], order[j]);
      }
      for (VertexId v : order) {
        if (!forest.visited(v)) forest.Run(v);
      }
      break;
    }
  }
  return forest.Take();
}

const char* ToString(EdgeClass c) {
  switch (c) {
    case EdgeClass::kTree:
      return "tree";
    case EdgeClass::kStrut:
      return "strut";
    case EdgeClass::kHorizontal:
      return "horizontal";
  }
  return "?";
}

EdgeClassification ClassifyEdges(const Graph& g, const BfsLabels& labels) {
  const VertexId n = g.num_vertices();
  if (labels.level.size() != n || labels.parent.size() != n) {
    throw DomainError("BFS labels cover " +
                      std::to_string(labels.level.size()) +
                      " vertices but the graph has " + std::to_string(n));
  }
  EdgeClassification cls;
  cls.class_of.reserve(g.num_edges());
  g.ForEachEdge([&](VertexId u, VertexId v) {
    const auto lu = labels.level[u];
    const auto lv = labels.level[v];
    EdgeClass c;
    if (lu == lv) {
      c = EdgeClass::kHorizontal;
      cls.cover_edges.push_back({u, v});
    } else if (lu + 1 == lv || lv + 1 == lu) {
      const bool tree = labels.parent[v] == u || labels.parent[u] == v;
      c = tree ? EdgeClass::kTree : EdgeClass::kStrut;
      ++(tree ? cls.tree_count : cls.strut_count);
    } else {
      throw ConsistencyError("edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") spans levels " +
                             std::to_string(lu) + " and " + std::to_string(lv));
    }
    cls.class_of.push_back(c);
  });
  const auto m = g.num_edges();
  cls.k = m == 0 ? 0.0
                 : static_cast<double>(cls.cover_edges.size()) /
                       static_cast<double>(m);
  return cls;
}

std::uint32_t DiameterProxy(const BfsLabels& labels) {
  std::uint32_t d = 0;
  for (auto depth : labels.max_depth) d = std::max(d, depth);
  return d;
}

void WriteLevels(const BfsLabels& labels, std::ostream& out) {
  for (std::size_t v = 0; v < labels.level.size(); ++v) {
    out << v << ' ' << labels.level[v] << ' ';
    if (labels.parent[v] == kNoParent) {
      out << -1;
    } else {
      out << labels.parent[v];
    }
    out << '\n';
  }
}

void WriteEdgeClasses(const Graph& g, const EdgeClassification& cls,
                      std::ostream& out) {
  std::size_t i = 0;
  g.ForEachEdge([&](VertexId u, VertexId v) {
    out << u << ' ' << v << ' ' << ToString(cls.class_of.at(i++)) << '\n';
  });
}

}  // namespace tricover
