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

#include "tricover/rmat.hpp"

#include <cmath>
#include <vector>

#include "tricover/errors.hpp"

namespace tricover {

void RmatParams::Validate() const {
  if (scale < 1) throw DomainError("RMAT scale must be at least 1");
  if (scale > kRmatMaxScale) {
    throw DomainError("RMAT scale " + std::to_string(scale) +
                      " exceeds the desk-scale limit of " +
                      std::to_string(kRmatMaxScale));
  }
  if (edge_factor < 1) throw DomainError("RMAT edge factor must be at least 1");
  if (a < 0 || b < 0 || c < 0 || d < 0) {
    throw DomainError("RMAT quadrant probabilities must be non-negative");
  }
  if (std::fabs(a + b + c + d - 1.0) > 1e-12) {
    throw DomainError("RMAT quadrant probabilities must sum to 1");
  }
}

Edge SampleRmatSlot(const RmatParams& params, std::uint64_t slot) {
  SplitMix64 rng(SplitMix64::Mix(params.seed) ^ SplitMix64::Mix(slot + 1));
  const double ab = params.a + params.b;
  const double abc = ab + params.c;
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  for (std::uint32_t level = 0; level < params.scale; ++level) {
    const double r = rng.NextDouble();
    row <<= 1;
    col <<= 1;
    if (r < params.a) {
      // top-left
    } else if (r < ab) {
      col |= 1;
    } else if (r < abc) {
      row |= 1;
    } else {
      row |= 1;
      col |= 1;
    }
  }
  return {static_cast<VertexId>(row), static_cast<VertexId>(col)};
}

RmatGraph GenerateRmat(const RmatParams& params) {
  params.Validate();
  const std::uint64_t slots = params.num_slots();
  std::vector<Edge> pairs;
  pairs.reserve(slots);
  for (std::uint64_t s = 0; s < slots; ++s) {
    pairs.push_back(SampleRmatSlot(params, s));
  }
  RmatGraph out;
  out.sampled_slots = slots;
  out.graph = Graph::FromPairs(VertexId{1} << params.scale, pairs, &out.summary);
  return out;
}

}  // namespace tricover
