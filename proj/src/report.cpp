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

#include "tricover/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "tricover/errors.hpp"
#include "tricover/rmat.hpp"
#include "tricover/triangle_count.hpp"

namespace tricover {

ReportRow BuildMeasuredRow(const std::string& name, const Graph& g,
                           std::uint32_t p, const MeasureOptions& options) {
  const auto labels = BfsForest(g, options.bfs);
  const auto cls = ClassifyEdges(g, labels);
  const auto stats = ComputeDegreeStats(g);

  ReportRow row;
  row.graph = name;
  row.n = g.num_vertices();
  row.m = g.num_edges();
  row.triangles = CountCetc(g, labels, cls).total;
  row.wedges = stats.wedges(options.wedges);
  row.k = cls.k;
  row.p = p;
  row.previous_bits = WedgeVolumeBits(row.wedges, row.n);

  ModelInputs in;
  in.n = row.n;
  in.m = row.m;
  in.diameter = DiameterProxy(labels);
  in.k = cls.k;
  in.p = p;
  in.cover_edges = cls.cover_edges.size();
  row.new_bits = CoverEdgeVolumeBits(in);
  row.reduction = row.new_bits == 0
                      ? 0.0
                      : ReductionRatio(ToLongDouble(row.previous_bits),
                                       ToLongDouble(row.new_bits));
  return row;
}

ExtrapolationSpec FillFromModels(ExtrapolationSpec spec, const FitResult& fit) {
  if (!spec.k) spec.k = fit.Evaluate(spec.scale);
  if (!spec.triangles) {
    spec.triangles = static_cast<BitCount>(std::llround(
        EstimateTrianglesPowerlaw(std::ldexp(1.0L, static_cast<int>(spec.scale)))));
  }
  return spec;
}

ReportRow BuildExtrapolatedRow(const ExtrapolationSpec& spec) {
  std::vector<std::string> missing;
  if (!spec.k) missing.push_back("k");
  if (!spec.wedges) missing.push_back("wedges");
  if (!spec.triangles) missing.push_back("triangles");
  if (!missing.empty()) {
    std::string list;
    for (const auto& f : missing) list += (list.empty() ? "" : ", ") + f;
    throw DomainError("extrapolated row '" + spec.name + "' is missing: " +
                      list);
  }
  if (spec.scale < 1 || spec.scale > 58) {
    throw DomainError("extrapolation scale must be in [1, 58]");
  }
  ReportRow row;
  row.graph = spec.name;
  row.n = std::uint64_t{1} << spec.scale;
  row.m = row.n * spec.edge_factor;
  row.triangles = *spec.triangles;
  row.wedges = *spec.wedges;
  row.k = *spec.k;
  row.p = spec.p;
  row.previous_bits = WedgeVolumeBits(row.wedges, row.n);

  ModelInputs in;
  in.n = row.n;
  in.m = row.m;
  in.log_diameter_bits = spec.log_diameter_bits;
  in.k = row.k;
  in.p = spec.p;
  row.new_bits = CoverEdgeVolumeBits(in);
  row.reduction = ReductionRatio(ToLongDouble(row.previous_bits),
                                 ToLongDouble(row.new_bits));
  row.estimated = {.triangles = true,
                   .wedges = true,
                   .k = true,
                   .new_volume = true,
                   .reduction = true};
  return row;
}

std::vector<KSweepPoint> MeasureKSweep(std::uint32_t min_scale,
                                       std::uint32_t max_scale,
                                       std::uint32_t seeds_per_scale,
                                       std::uint64_t base_seed) {
  if (min_scale > max_scale || seeds_per_scale == 0) {
    throw DomainError("empty k sweep");
  }
  std::vector<KSweepPoint> sweep;
  for (std::uint32_t scale = min_scale; scale <= max_scale; ++scale) {
    KSweepPoint point;
    point.scale = scale;
    double sum = 0.0;
    for (std::uint32_t i = 0; i < seeds_per_scale; ++i) {
      RmatParams params;
      params.scale = scale;
      params.seed = base_seed + i;
      const auto rmat = GenerateRmat(params);
      const auto cls = ClassifyEdges(rmat.graph, BfsForest(rmat.graph));
      point.k_per_seed.push_back(cls.k);
      sum += cls.k;
    }
    point.mean_k = sum / seeds_per_scale;
    sweep.push_back(std::move(point));
  }
  return sweep;
}

FitResult FitKSweep(const std::vector<KSweepPoint>& sweep) {
  std::vector<KSample> samples;
  for (const auto& point : sweep) {
    for (double k : point.k_per_seed) {
      samples.push_back({static_cast<double>(point.scale), k});
    }
  }
  return FitKExponential(samples);
}

RenderFormat ParseRenderFormat(const std::string& name) {
  if (name == "table") return RenderFormat::kTable;
  if (name == "csv") return RenderFormat::kCsv;
  if (name == "records" || name == "json") return RenderFormat::kRecords;
  throw DomainError("unknown output format '" + name +
                    "' (expected table, csv or records)");
}

namespace {

constexpr const char* kCsvHeader =
    "graph,n,m,triangles,wedges,k,p,previous_bits,new_bits,reduction,"
    "estimated";

std::string Scientific(BitCount x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2LE", ToLongDouble(x));
  return buf;
}

std::string Fixed(double x, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, x);
  return buf;
}

std::string EstimatedList(const EstimatedCells& e) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ';';
    out += name;
  };
  add(e.triangles, "triangles");
  add(e.wedges, "wedges");
  add(e.k, "k");
  add(e.new_volume, "new");
  add(e.reduction, "reduction");
  return out;
}

EstimatedCells ParseEstimatedList(const std::string& text, std::size_t line) {
  EstimatedCells e;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item == "triangles") {
      e.triangles = true;
    } else if (item == "wedges") {
      e.wedges = true;
    } else if (item == "k") {
      e.k = true;
    } else if (item == "new") {
      e.new_volume = true;
    } else if (item == "reduction") {
      e.reduction = true;
    } else if (!item.empty()) {
      throw ParseError(line, "unknown estimated-cell name '" + item + "'");
    }
  }
  return e;
}

std::string RenderTable(const std::vector<ReportRow>& rows) {
  const std::vector<std::string> header = {
      "Graph", "n", "m", "# Triangles", "# Wedges", "k", "p",
      "Previous", "This paper", "Reduction"};
  std::vector<std::vector<std::string>> cells;
  cells.push_back(header);
  for (const auto& r : rows) {
    auto mark = [](std::string s, bool est) { return est ? s + "*" : s; };
    cells.push_back({
        r.graph,
        std::to_string(r.n),
        std::to_string(r.m),
        mark(r.estimated.triangles ? Scientific(r.triangles)
                                   : ToDecimal(r.triangles),
             r.estimated.triangles),
        mark(r.estimated.wedges ? Scientific(r.wedges) : ToDecimal(r.wedges),
             r.estimated.wedges),
        mark(Fixed(r.k, "%.3f"), r.estimated.k),
        std::to_string(r.p),
        FormatBytes(r.previous_bytes()),
        mark(FormatBytes(r.new_bytes()), r.estimated.new_volume),
        mark(FormatSig3(r.reduction), r.estimated.reduction),
    });
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  std::string out;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      const auto pad = std::string(width[c] - line[c].size(), ' ');
      // Name column left-aligned, numbers right-aligned.
      text += c == 0 ? line[c] + pad : pad + line[c];
      if (c + 1 < line.size()) text += "  ";
    }
    out += text + '\n';
  }
  return out;
}

std::string RenderCsv(const std::vector<ReportRow>& rows) {
  std::string out = std::string(kCsvHeader) + '\n';
  for (const auto& r : rows) {
    out += r.graph + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) +
           ',' + ToDecimal(r.triangles) + ',' + ToDecimal(r.wedges) + ',' +
           Fixed(r.k, "%.6f") + ',' + std::to_string(r.p) + ',' +
           ToDecimal(r.previous_bits) + ',' + ToDecimal(r.new_bits) + ',' +
           Fixed(r.reduction, "%.6g") + ',' + EstimatedList(r.estimated) +
           '\n';
  }
  return out;
}

std::string RenderRecords(const std::vector<ReportRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["graph"] = r.graph;
    j["n"] = r.n;
    j["m"] = r.m;
    j["triangles"] = ToDecimal(r.triangles);
    j["wedges"] = ToDecimal(r.wedges);
    j["k"] = r.k;
    j["p"] = r.p;
    j["previous_bits"] = ToDecimal(r.previous_bits);
    j["new_bits"] = ToDecimal(r.new_bits);
    j["previous"] = FormatBytes(r.previous_bytes());
    j["new"] = FormatBytes(r.new_bytes());
    j["reduction"] = r.reduction;
    j["estimated"] = EstimatedList(r.estimated);
    out += j.dump() + '\n';
  }
  return out;
}

}  // namespace

std::string Render(const std::vector<ReportRow>& rows, RenderFormat format) {
  switch (format) {
    case RenderFormat::kTable:
      return RenderTable(rows);
    case RenderFormat::kCsv:
      return RenderCsv(rows);
    case RenderFormat::kRecords:
      return RenderRecords(rows);
  }
  return {};
}

std::vector<ReportRow> ParseCsv(const std::string& text) {
  std::vector<ReportRow> rows;
  std::stringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (number == 1) {
      if (line != kCsvHeader) throw ParseError(number, "unexpected CSV header");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 11) {
      throw ParseError(number, "expected 11 CSV fields, got " +
                                   std::to_string(f.size()));
    }
    try {
      ReportRow r;
      r.graph = f[0];
      r.n = std::stoull(f[1]);
      r.m = std::stoull(f[2]);
      r.triangles = ParseCount(f[3]);
      r.wedges = ParseCount(f[4]);
      r.k = std::stod(f[5]);
      r.p = static_cast<std::uint32_t>(std::stoul(f[6]));
      r.previous_bits = ParseCount(f[7]);
      r.new_bits = ParseCount(f[8]);
      r.reduction = std::stod(f[9]);
      r.estimated = ParseEstimatedList(f[10], number);
      rows.push_back(std::move(r));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(number, e.what());
    }
  }
  return rows;
}

}  // namespace tricover
