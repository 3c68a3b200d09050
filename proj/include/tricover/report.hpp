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

#ifndef TRICOVER_REPORT_HPP_
#define TRICOVER_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricover/bfs_cover.hpp"
#include "tricover/comm_model.hpp"
#include "tricover/graph.hpp"

namespace tricover {

/// Which cells of a row come from models rather than measurement.
struct EstimatedCells {
  bool triangles = false;
  bool wedges = false;
  bool k = false;
  bool new_volume = false;
  bool reduction = false;

  friend bool operator==(const EstimatedCells&,
                         const EstimatedCells&) = default;
};

/// One line of the communication-cost table.
struct ReportRow {
  std::string graph;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  BitCount triangles = 0;
  BitCount wedges = 0;
  double k = 0.0;
  std::uint32_t p = 1;
  BitCount previous_bits = 0;  // wedge-check volume
  BitCount new_bits = 0;       // cover-edge volume
  double reduction = 0.0;
  EstimatedCells estimated;

  long double previous_bytes() const {
    return ToLongDouble(previous_bits) / kBitsPerByte;
  }
  long double new_bytes() const {
    return ToLongDouble(new_bits) / kBitsPerByte;
  }

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct MeasureOptions {
  WedgeDefinition wedges = WedgeDefinition::kDegreeOriented;
  BfsOptions bfs;
};

/// Every cell measured on g: CETC triangles, exact wedges, BFS k and D.
ReportRow BuildMeasuredRow(const std::string& name, const Graph& g,
                           std::uint32_t p, const MeasureOptions& options = {});

/// A Graph500 RMAT instance too large to build: n = 2^scale, m = edge_factor n.
struct ExtrapolationSpec {
  std::string name;
  std::uint32_t scale = 0;
  std::uint32_t edge_factor = 16;
  std::uint32_t p = 1;
  std::uint32_t log_diameter_bits = 4;
  std::optional<double> k;
  std::optional<BitCount> wedges;
  std::optional<BitCount> triangles;
};

/// Fills k from `fit` and triangles from the power-law estimate where unset.
ExtrapolationSpec FillFromModels(ExtrapolationSpec spec, const FitResult& fit);

/// Throws DomainError naming every missing input (k, wedges, triangles).
ReportRow BuildExtrapolatedRow(const ExtrapolationSpec& spec);

/// Horizontal-edge fraction of seeded RMAT graphs at one scale.
struct KSweepPoint {
  std::uint32_t scale = 0;
  std::vector<double> k_per_seed;
  double mean_k = 0.0;
};

/// Generates seeds_per_scale RMAT graphs (seeds base_seed, base_seed+1, ...)
/// per scale, BFS from the lowest id, and records k for each.
std::vector<KSweepPoint> MeasureKSweep(std::uint32_t min_scale,
                                       std::uint32_t max_scale,
                                       std::uint32_t seeds_per_scale,
                                       std::uint64_t base_seed);

/// Exponential fit over every individual (scale, k) sample of a sweep.
FitResult FitKSweep(const std::vector<KSweepPoint>& sweep);

enum class RenderFormat { kTable, kCsv, kRecords };

RenderFormat ParseRenderFormat(const std::string& name);

/// Columns in a fixed order. Table cells use binary byte units with 3
/// significant figures; estimated cells carry a trailing '*'.
std::string Render(const std::vector<ReportRow>& rows, RenderFormat format);

/// Inverse of Render(..., kCsv). Throws ParseError on malformed lines.
std::vector<ReportRow> ParseCsv(const std::string& text);

}  // namespace tricover

#endif  // TRICOVER_REPORT_HPP_
