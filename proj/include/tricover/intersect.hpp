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

#ifndef TRICOVER_INTERSECT_HPP_
#define TRICOVER_INTERSECT_HPP_

#include <algorithm>
#include <cassert>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "tricover/graph.hpp"

namespace tricover {

enum class IntersectKernel { kMerge, kBinarySearch, kHash };

const char* ToString(IntersectKernel kernel);
IntersectKernel ParseIntersectKernel(const std::string& name);

namespace detail {

inline bool IsSorted(std::span<const VertexId> s) {
  return std::is_sorted(s.begin(), s.end());
}

// Two cursors; advance whichever points at the smaller id.
template <typename F>
void MergeIntersect(std::span<const VertexId> a, std::span<const VertexId> b,
                    F& emit) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      emit(a[i]);
      ++i;
      ++j;
    }
  }
}

// Keys from the shorter list searched in the longer one. The search window
// only shrinks because keys ascend.
template <typename F>
void BinarySearchIntersect(std::span<const VertexId> a,
                           std::span<const VertexId> b, F& emit) {
  if (a.size() > b.size()) std::swap(a, b);
  auto lo = b.begin();
  for (VertexId key : a) {
    lo = std::lower_bound(lo, b.end(), key);
    if (lo == b.end()) return;
    if (*lo == key) emit(key);
  }
}

// Table on the shorter list, probed in the longer list's ascending order so
// output stays sorted.
template <typename F>
void HashIntersect(std::span<const VertexId> a, std::span<const VertexId> b,
                   F& emit) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return;
  const std::unordered_set<VertexId> table(a.begin(), a.end());
  for (VertexId key : b) {
    if (table.contains(key)) emit(key);
  }
}

}  // namespace detail

/// Calls emit(w) for each common id of two ascending lists, in ascending
/// order. All kernels emit the same sequence.
template <typename F>
void ForEachCommon(std::span<const VertexId> a, std::span<const VertexId> b,
                   IntersectKernel kernel, F&& emit) {
  assert(detail::IsSorted(a) && detail::IsSorted(b));
  switch (kernel) {
    case IntersectKernel::kMerge:
      detail::MergeIntersect(a, b, emit);
      break;
    case IntersectKernel::kBinarySearch:
      detail::BinarySearchIntersect(a, b, emit);
      break;
    case IntersectKernel::kHash:
      detail::HashIntersect(a, b, emit);
      break;
  }
}

std::vector<VertexId> Intersect(std::span<const VertexId> a,
                                std::span<const VertexId> b,
                                IntersectKernel kernel);

}  // namespace tricover

#endif  // TRICOVER_INTERSECT_HPP_
