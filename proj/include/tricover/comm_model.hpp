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

#ifndef TRICOVER_COMM_MODEL_HPP_
#define TRICOVER_COMM_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tricover {

/// Bit volumes reach ~2^69 for scale-42 wedge checks; 128 bits is exact.
using BitCount = unsigned __int128;

std::string ToDecimal(BitCount x);
/// Parses a non-negative decimal or scientific literal ("2.73e16") exactly
/// when it denotes an integer. Throws DomainError otherwise.
BitCount ParseCount(const std::string& text);

inline long double ToLongDouble(BitCount x) {
  return static_cast<long double>(x);
}

inline constexpr long double kBitsPerByte = 8.0L;

/// Inputs of the cover-edge volume formula.
struct ModelInputs {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  // Diameter stand-in. Ignored when log_diameter_bits is set.
  std::uint64_t diameter = 0;
  std::optional<std::uint32_t> log_diameter_bits;
  double k = 0.0;
  std::uint32_t p = 1;
  // Exact |S| when known; then k*m is taken as this integer.
  std::optional<std::uint64_t> cover_edges;
};

/// m (ceil lg D + (k p + 3) ceil lg n) + (p - 1) ceil lg n, rounded up to
/// whole bits. Throws DomainError for D = 0 with m > 0, k outside [0,1] or
/// p = 0.
BitCount CoverEdgeVolumeBits(const ModelInputs& in);

/// wedges * 2 ceil lg n: each wedge query carries two vertex ids.
BitCount WedgeVolumeBits(BitCount wedges, std::uint64_t n);

/// previous / new. Throws DomainError unless new > 0.
double ReductionRatio(long double previous_bits, long double new_bits);

struct KSample {
  double scale = 0.0;
  double k = 0.0;
};

/// k = A exp(-B scale), fitted by least squares on (scale, ln k).
struct FitResult {
  double a = 0.0;
  double b = 0.0;
  // Coefficient of determination of the linear fit in log space.
  double r_squared = 0.0;
  std::vector<KSample> samples;

  double Evaluate(double scale) const;
};

/// Throws DomainError with fewer than 3 samples, a non-positive k, or all
/// samples at one scale.
FitResult FitKExponential(std::span<const KSample> samples);

/// Published fit of horizontal-edge fraction against RMAT scale.
inline constexpr double kPublishedKFitA = 1.1773;
inline constexpr double kPublishedKFitB = 0.036;

/// Power-law triangle estimate for Graph500 RMAT graphs: 77.422 n^1.125.
long double EstimateTrianglesPowerlaw(long double n);

/// Binary-prefix unit (KB = 2^10 bytes, ..., EB = 2^60) with 3 significant
/// figures, e.g. "526KB", "2.78MB", "22.8PB".
std::string FormatBytes(long double bytes);

/// 3 significant figures, integers kept whole: "4.31", "56.0", "1156".
std::string FormatSig3(long double x);

}  // namespace tricover

#endif  // TRICOVER_COMM_MODEL_HPP_
