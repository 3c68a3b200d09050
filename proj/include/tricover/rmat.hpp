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

#ifndef TRICOVER_RMAT_HPP_
#define TRICOVER_RMAT_HPP_

#include <cstdint>

#include "tricover/graph.hpp"

namespace tricover {

/// SplitMix64: a 64-bit counter-based generator, so any state is a valid
/// independent-looking stream start.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    return Mix(z);
  }
  /// Uniform in [0, 1) with 53 random bits.
  double NextDouble() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct RmatParams {
  std::uint32_t scale = 10;
  std::uint32_t edge_factor = 16;
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
  std::uint64_t seed = 1;

  void Validate() const;
  std::uint64_t num_slots() const {
    return static_cast<std::uint64_t>(edge_factor) << scale;
  }
};

inline constexpr std::uint32_t kRmatMaxScale = 24;

/// Directed slot `slot` of the edge sample. Each slot draws from its own
/// stream, so slots can be produced in any order or in parallel.
Edge SampleRmatSlot(const RmatParams& params, std::uint64_t slot);

struct RmatGraph {
  Graph graph;  // n = 2^scale; isolated vertices kept
  std::uint64_t sampled_slots = 0;
  NormalizationSummary summary;
};

/// Samples edge_factor * 2^scale slots by recursive quadrant descent and
/// normalizes them to a simple undirected graph. Refuses scale > 24.
RmatGraph GenerateRmat(const RmatParams& params);

}  // namespace tricover

#endif  // TRICOVER_RMAT_HPP_
