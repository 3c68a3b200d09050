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

#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "tricover/bfs_cover.hpp"
#include "tricover/comm_model.hpp"
#include "tricover/dist_sim.hpp"
#include "tricover/errors.hpp"
#include "tricover/graph.hpp"
#include "tricover/report.hpp"
#include "tricover/rmat.hpp"
#include "tricover/triangle_count.hpp"

namespace tricover::cli {
namespace {

// Published extrapolation inputs for the two Graph500 rows.
struct PublishedRmatRow {
  const char* name;
  std::uint32_t scale;
  std::uint32_t p;
  double k;
  const char* wedges;
};
constexpr PublishedRmatRow kPublishedRmatRows[] = {
    {"RMAT-36", 36, 128, 0.311, "2.73e16"},
    {"RMAT-42", 42, 256, 0.260, "5.79e18"},
};

struct RunConfig {
  std::string input;
  bool one_indexed = false;
  std::string root_policy = "lowest_id";
  std::vector<VertexId> roots;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string format = "table";
  std::string wedge_definition = "oriented";
};

std::string ResolveInput(const std::string& path) {
  namespace fs = std::filesystem;
  if (path.empty()) throw DomainError("--input is required");
  if (fs::exists(path) || fs::path(path).is_absolute()) return path;
  if (const char* dir = std::getenv(kDataDirEnv); dir != nullptr) {
    const auto candidate = fs::path(dir) / path;
    if (fs::exists(candidate)) return candidate.string();
  }
  return path;
}

LoadedGraph Load(const RunConfig& cfg) {
  LoadOptions options;
  options.one_indexed = cfg.one_indexed;
  return LoadEdgeListFile(ResolveInput(cfg.input), options);
}

BfsOptions MakeBfsOptions(const RunConfig& cfg) {
  BfsOptions options;
  options.policy = ParseRootPolicy(cfg.root_policy);
  options.roots = cfg.roots;
  options.seed = cfg.seed;
  return options;
}

void EchoSeed(const RunConfig& cfg, std::ostream& out) {
  if (MakeBfsOptions(cfg).policy == RootPolicy::kSeededRandom) {
    out << "seed=" << cfg.seed << '\n';
  }
}

std::string FormatDouble(double x, const char* fmt = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, x);
  return buf;
}

void TimeLine(std::ostream& out, double seconds) {
  out << "time: elapsed=" << FormatDouble(seconds, "%.6f") << '\n';
}

void AddInputOptions(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-i,--input", cfg.input, "SNAP edge list (relative paths "
                                           "also searched in $" +
                                               std::string(kDataDirEnv) + ")")
      ->required();
  cmd->add_flag("--one-indexed", cfg.one_indexed,
                "external vertex ids start at 1");
}

void AddBfsOptions(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--root-policy", cfg.root_policy,
                  "lowest_id | given_roots | seeded_random")
      ->capture_default_str();
  cmd->add_option("--roots", cfg.roots, "BFS roots for given_roots");
  cmd->add_option("--seed", cfg.seed, "seed for seeded_random")
      ->capture_default_str();
}

int CmdIngest(const RunConfig& cfg, const std::string& output,
              std::ostream& out) {
  const auto loaded = Load(cfg);
  const auto& g = loaded.graph;
  const auto stats = ComputeDegreeStats(g);
  out << "n=" << g.num_vertices() << '\n'
      << "m=" << g.num_edges() << '\n'
      << "lines_read=" << loaded.lines_read << '\n'
      << "self_loops_dropped=" << loaded.summary.self_loops_dropped << '\n'
      << "duplicates_dropped=" << loaded.summary.duplicates_dropped << '\n'
      << "d_max=" << stats.d_max << '\n'
      << "wedges_total=" << stats.wedge_total << '\n'
      << "wedges_oriented=" << stats.wedge_oriented << '\n'
      << "wedges=" << stats.wedges(ParseWedgeDefinition(cfg.wedge_definition))
      << " (" << cfg.wedge_definition << ")\n";
  if (!output.empty()) {
    std::ofstream file(output);
    if (!file) throw std::runtime_error("cannot write '" + output + "'");
    WriteEdgeList(g, file);
  }
  return kOk;
}

int CmdClassify(const RunConfig& cfg, const std::string& levels_out,
                const std::string& edges_out, std::ostream& out) {
  const auto g = Load(cfg).graph;
  EchoSeed(cfg, out);
  const auto labels = BfsForest(g, MakeBfsOptions(cfg));
  const auto cls = ClassifyEdges(g, labels);
  out << "n=" << g.num_vertices() << '\n'
      << "m=" << g.num_edges() << '\n'
      << "components=" << labels.roots.size() << '\n'
      << "tree=" << cls.tree_count << '\n'
      << "strut=" << cls.strut_count << '\n'
      << "horizontal=" << cls.horizontal_count() << '\n'
      << "k=" << FormatDouble(cls.k) << '\n'
      << "diameter_proxy=" << DiameterProxy(labels) << '\n';
  if (!levels_out.empty()) {
    std::ofstream file(levels_out);
    if (!file) throw std::runtime_error("cannot write '" + levels_out + "'");
    WriteLevels(labels, file);
  }
  if (!edges_out.empty()) {
    std::ofstream file(edges_out);
    if (!file) throw std::runtime_error("cannot write '" + edges_out + "'");
    WriteEdgeClasses(g, cls, file);
  }
  return kOk;
}

int CmdCount(const RunConfig& cfg, const std::string& algo,
             const std::string& kernel, std::ostream& out) {
  const auto g = Load(cfg).graph;
  TriangleCountReport report;
  double k = 0.0;
  if (algo == "cetc") {
    EchoSeed(cfg, out);
    const auto start = std::chrono::steady_clock::now();
    const auto labels = BfsForest(g, MakeBfsOptions(cfg));
    const auto cls = ClassifyEdges(g, labels);
    CetcOptions options;
    options.kernel = ParseIntersectKernel(kernel);
    options.threads = cfg.threads;
    report = CountCetc(g, labels, cls, options);
    report.elapsed_seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    report.algorithm = "cetc";
    k = cls.k;
  } else if (algo == "edge-iter") {
    report = CountEdgeIterator(g);
  } else if (algo == "brute") {
    report = CountBruteForce(g);
  } else {
    throw DomainError("unknown algorithm '" + algo +
                      "' (expected cetc, edge-iter or brute)");
  }
  out << "algorithm=" << report.algorithm << " triangles=" << report.total
      << " m=" << g.num_edges() << " k=" << FormatDouble(k) << '\n';
  if (algo == "cetc") {
    out << "kernel=" << kernel
        << " horizontal_edges_scanned=" << report.horizontal_edges_scanned
        << " intersections=" << report.intersections_performed << '\n';
  }
  TimeLine(out, report.elapsed_seconds);
  return kOk;
}

int CmdSimulate(const RunConfig& cfg, std::uint32_t p, bool record,
                std::ostream& out) {
  const auto g = Load(cfg).graph;
  EchoSeed(cfg, out);
  const auto labels = BfsForest(g, MakeBfsOptions(cfg));
  const auto cls = ClassifyEdges(g, labels);
  const auto part = PartitionVertices(g, p);
  const auto sequential = CountCetc(g, labels, cls).total;
  const auto sim = SimulateCommCetc(g, labels, cls, part);

  out << "triangles=" << sim.total_triangles << '\n'
      << "sequential_triangles=" << sequential << '\n'
      << "match=" << (sequential == sim.total_triangles ? "yes" : "no")
      << '\n'
      << "k=" << FormatDouble(cls.k) << '\n';
  out << "per_processor=";
  for (std::size_t i = 0; i < sim.per_processor_counts.size(); ++i) {
    out << (i ? "," : "") << sim.per_processor_counts[i];
  }
  out << '\n' << "endpoint_load=";
  for (std::size_t i = 0; i < part.endpoint_load.size(); ++i) {
    out << (i ? "," : "") << part.endpoint_load[i];
  }
  out << '\n' << "peak_edges_held=" << sim.peak_edges_held << '\n';
  WriteLedger(sim.ledger, out);
  out << "total=" << FormatBytes(sim.ledger.total_bits / kBitsPerByte) << '\n';
  if (record) out << LedgerRecord(cfg.input, cls.k, sim) << '\n';
  return sequential == sim.total_triangles ? kOk : kFailure;
}

struct ModelArgs {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t scale = 0;
  std::uint32_t edge_factor = 16;
  std::uint64_t diameter = 0;
  std::uint32_t log_diameter = 0;
  double k = 0.0;
  std::uint32_t p = 1;
  std::string wedges;
};

int CmdModel(const ModelArgs& a, std::ostream& out) {
  ModelInputs in;
  in.n = a.n;
  in.m = a.m;
  if (a.scale > 0) {
    if (a.scale > 58) throw DomainError("--scale must be at most 58");
    in.n = std::uint64_t{1} << a.scale;
    in.m = in.n * a.edge_factor;
  }
  if (in.n == 0) throw DomainError("give --n and --m, or --scale");
  in.diameter = a.diameter;
  if (a.log_diameter > 0) in.log_diameter_bits = a.log_diameter;
  in.k = a.k;
  in.p = a.p;
  const auto bits = CoverEdgeVolumeBits(in);
  out << "n=" << in.n << " m=" << in.m << " k=" << FormatDouble(a.k)
      << " p=" << a.p << '\n'
      << "new_bits=" << ToDecimal(bits) << '\n'
      << "new=" << FormatBytes(ToLongDouble(bits) / kBitsPerByte)
      << '\n';
  if (!a.wedges.empty()) {
    const auto previous = WedgeVolumeBits(ParseCount(a.wedges), in.n);
    out << "previous_bits=" << ToDecimal(previous) << '\n'
        << "previous=" << FormatBytes(ToLongDouble(previous) / kBitsPerByte)
        << '\n'
        << "reduction="
        << FormatSig3(ReductionRatio(ToLongDouble(previous), ToLongDouble(bits)))
        << '\n';
  }
  return kOk;
}

int CmdRmat(const RmatParams& params, const std::string& output,
            std::ostream& out) {
  const auto rmat = GenerateRmat(params);
  std::ostringstream header;
  header << "# rmat scale=" << params.scale
         << " edge_factor=" << params.edge_factor << " a=" << params.a
         << " b=" << params.b << " c=" << params.c << " d=" << params.d
         << " seed=" << params.seed << '\n'
         << "# n=" << rmat.graph.num_vertices()
         << " m=" << rmat.graph.num_edges()
         << " sampled_slots=" << rmat.sampled_slots
         << " self_loops_dropped=" << rmat.summary.self_loops_dropped
         << " duplicates_dropped=" << rmat.summary.duplicates_dropped << '\n';
  if (output.empty()) {
    out << header.str();
    WriteEdgeList(rmat.graph, out);
  } else {
    std::ofstream file(output);
    if (!file) throw std::runtime_error("cannot write '" + output + "'");
    file << header.str();
    WriteEdgeList(rmat.graph, file);
    out << header.str();
  }
  return kOk;
}

int CmdFitK(std::uint32_t min_scale, std::uint32_t max_scale,
            std::uint32_t seeds, std::uint64_t base_seed, std::ostream& out) {
  out << "seed=" << base_seed << '\n';
  const auto sweep = MeasureKSweep(min_scale, max_scale, seeds, base_seed);
  out << "scale,mean_k";
  for (std::uint32_t i = 0; i < seeds; ++i) out << ",k_seed" << base_seed + i;
  out << '\n';
  for (const auto& point : sweep) {
    out << point.scale << ',' << FormatDouble(point.mean_k);
    for (double k : point.k_per_seed) out << ',' << FormatDouble(k);
    out << '\n';
  }
  const auto fit = FitKSweep(sweep);
  out << "fit: k = " << FormatDouble(fit.a, "%.4f") << " * exp(-"
      << FormatDouble(fit.b, "%.4f") << " * scale)\n"
      << "a=" << FormatDouble(fit.a) << '\n'
      << "b=" << FormatDouble(fit.b) << '\n'
      << "r_squared=" << FormatDouble(fit.r_squared) << " (log space)\n";
  return kOk;
}

int CmdReport(const RunConfig& cfg, const std::string& manifest,
              bool extrapolate, std::ostream& out) {
  std::vector<ReportRow> rows;
  if (!manifest.empty()) {
    std::ifstream in(ResolveInput(manifest));
    if (!in) throw std::runtime_error("cannot open manifest '" + manifest + "'");
    MeasureOptions options;
    options.wedges = ParseWedgeDefinition(cfg.wedge_definition);
    options.bfs = MakeBfsOptions(cfg);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      std::istringstream fields(line);
      std::string name, path;
      std::uint32_t p = 0;
      if (!(fields >> name) || name.front() == '#') continue;
      if (!(fields >> path >> p)) {
        throw ParseError(number, "manifest lines are 'name path p'");
      }
      RunConfig entry = cfg;
      entry.input = path;
      rows.push_back(BuildMeasuredRow(name, Load(entry).graph, p, options));
    }
  }
  if (extrapolate) {
    const FitResult published{.a = kPublishedKFitA, .b = kPublishedKFitB};
    for (const auto& row : kPublishedRmatRows) {
      ExtrapolationSpec spec;
      spec.name = row.name;
      spec.scale = row.scale;
      spec.p = row.p;
      spec.k = row.k;
      spec.wedges = ParseCount(row.wedges);
      rows.push_back(BuildExtrapolatedRow(FillFromModels(spec, published)));
    }
  }
  out << Render(rows, ParseRenderFormat(cfg.format));
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Triangle counting through BFS cover edges", "tricover"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* ingest = app.add_subcommand("ingest", "normalize an edge list, print stats");
  AddInputOptions(ingest, cfg);
  std::string canonical_out;
  ingest->add_option("-o,--output", canonical_out, "write canonical edge list");
  ingest->add_option("--wedges", cfg.wedge_definition, "total | oriented")
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "BFS levels, edge classes, k");
  AddInputOptions(classify, cfg);
  AddBfsOptions(classify, cfg);
  std::string levels_out, edges_out;
  classify->add_option("--levels-out", levels_out, "dump 'id level parent'");
  classify->add_option("--edges-out", edges_out, "dump 'u v class'");

  auto* count = app.add_subcommand("count", "count triangles");
  AddInputOptions(count, cfg);
  AddBfsOptions(count, cfg);
  std::string algo = "cetc", kernel = "merge";
  count->add_option("--algo", algo, "cetc | edge-iter | brute")
      ->capture_default_str();
  count->add_option("--kernel", kernel, "merge | bsearch | hash")
      ->capture_default_str();
  count->add_option("--threads", cfg.threads, "worker cap for cetc")
      ->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "simulate the distributed exchange");
  AddInputOptions(simulate, cfg);
  AddBfsOptions(simulate, cfg);
  std::uint32_t p = 4;
  bool record = false;
  simulate->add_option("-p,--p", p, "processors (power of two)")
      ->capture_default_str();
  simulate->add_flag("--record", record, "also print a JSON ledger record");

  auto* model = app.add_subcommand("model", "evaluate the volume formulas");
  ModelArgs margs;
  model->add_option("--n", margs.n, "vertices");
  model->add_option("--m", margs.m, "edges");
  model->add_option("--scale", margs.scale, "RMAT scale: n = 2^scale");
  model->add_option("--edge-factor", margs.edge_factor, "m = edge_factor n")
      ->capture_default_str();
  model->add_option("--diameter", margs.diameter, "diameter (or proxy)");
  model->add_option("--log-diameter", margs.log_diameter,
                    "ceil lg D given directly");
  model->add_option("--k", margs.k, "cover-edge fraction")->required();
  model->add_option("-p,--p", margs.p, "processors")->capture_default_str();
  model->add_option("--wedges", margs.wedges, "wedge count for the baseline");

  auto* rmat = app.add_subcommand("rmat", "generate an RMAT edge list");
  RmatParams rparams;
  std::string rmat_out;
  rmat->add_option("--scale", rparams.scale)->capture_default_str();
  rmat->add_option("--edge-factor", rparams.edge_factor)->capture_default_str();
  rmat->add_option("--a", rparams.a)->capture_default_str();
  rmat->add_option("--b", rparams.b)->capture_default_str();
  rmat->add_option("--c", rparams.c)->capture_default_str();
  rmat->add_option("--d", rparams.d)->capture_default_str();
  rmat->add_option("--seed", rparams.seed)->capture_default_str();
  rmat->add_option("-o,--output", rmat_out, "file (default stdout)");

  auto* fitk = app.add_subcommand("fit-k", "RMAT sweep and exponential k fit");
  std::uint32_t min_scale = 6, max_scale = 16, seeds = 3;
  std::uint64_t fit_seed = 1;
  fitk->add_option("--min-scale", min_scale)->capture_default_str();
  fitk->add_option("--max-scale", max_scale)->capture_default_str();
  fitk->add_option("--seeds", seeds, "graphs per scale")->capture_default_str();
  fitk->add_option("--seed", fit_seed, "first seed")->capture_default_str();

  auto* report = app.add_subcommand("report", "communication-cost table");
  std::string manifest;
  bool extrapolate = false;
  report->add_option("--manifest", manifest, "lines of 'name path p'");
  report->add_flag("--extrapolate", extrapolate,
                   "append the scale-36/42 Graph500 rows");
  report->add_option("--format", cfg.format, "table | csv | records")
      ->capture_default_str();
  report->add_option("--wedges", cfg.wedge_definition, "total | oriented")
      ->capture_default_str();
  AddBfsOptions(report, cfg);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ingest) return CmdIngest(cfg, canonical_out, out);
    if (*classify) return CmdClassify(cfg, levels_out, edges_out, out);
    if (*count) return CmdCount(cfg, algo, kernel, out);
    if (*simulate) return CmdSimulate(cfg, p, record, out);
    if (*model) return CmdModel(margs, out);
    if (*rmat) return CmdRmat(rparams, rmat_out, out);
    if (*fitk) return CmdFitK(min_scale, max_scale, seeds, fit_seed, out);
    if (*report) {
      if (manifest.empty() && !extrapolate) {
        throw DomainError("report needs --manifest and/or --extrapolate");
      }
      return CmdReport(cfg, manifest, extrapolate, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace tricover::cli
