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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "tricover/comm_model.hpp"
#include "tricover/errors.hpp"

using namespace tricover;

namespace {

long double Bytes(BitCount bits) { return ToLongDouble(bits) / kBitsPerByte; }

long double RelErr(long double got, long double want) {
  return std::fabs(got - want) / want;
}

constexpr long double kTB = 1024.0L * 1024 * 1024 * 1024;
constexpr long double kPB = kTB * 1024;

ModelInputs Rmat(std::uint32_t scale, double k, std::uint32_t p) {
  ModelInputs in;
  in.n = std::uint64_t{1} << scale;
  in.m = 16 * in.n;
  in.log_diameter_bits = 4;
  in.k = k;
  in.p = p;
  return in;
}

}  // namespace

TEST_CASE("ToDecimal and ParseCount") {
  CHECK(ToDecimal(0) == "0");
  CHECK(ToDecimal(BitCount{1} << 100) == "1267650600228229401496703205376");
  CHECK(ParseCount("165798") == 165798);
  CHECK(ParseCount("2.73e16") == BitCount{27300000000000000ULL});
  CHECK(ToDecimal(ParseCount("5.79E+18")) == "5790000000000000000");
  CHECK(ParseCount("2.5e1") == 25);
  CHECK(ParseCount("1200e-2") == 12);
  CHECK_THROWS_AS(ParseCount("1.5"), DomainError);
  CHECK_THROWS_AS(ParseCount("-3"), DomainError);
  CHECK_THROWS_AS(ParseCount("abc"), DomainError);
  CHECK_THROWS_AS(ParseCount(""), DomainError);
  CHECK_THROWS_AS(ParseCount("1e"), DomainError);
  CHECK_THROWS_AS(ParseCount("1e40"), DomainError);
}

TEST_CASE("cover-edge volume on a triangle") {
  // 3 (0 + (1/3 + 3) * 2) + 0
  ModelInputs in{.n = 3, .m = 3, .diameter = 1, .k = 1.0 / 3.0, .p = 1};
  CHECK(CoverEdgeVolumeBits(in) == 20);
  in.cover_edges = 1;
  CHECK(CoverEdgeVolumeBits(in) == 20);
  in.p = 2;
  // 3 * 6 + 1 * 2 * 2 + 1 * 2
  CHECK(CoverEdgeVolumeBits(in) == 24);
}

TEST_CASE("cover-edge volume domain errors") {
  ModelInputs in{.n = 3, .m = 3, .diameter = 1, .k = 0.5, .p = 1};
  in.p = 0;
  CHECK_THROWS_AS(CoverEdgeVolumeBits(in), DomainError);
  in.p = 1;
  in.k = 1.5;
  CHECK_THROWS_AS(CoverEdgeVolumeBits(in), DomainError);
  in.k = -0.1;
  CHECK_THROWS_AS(CoverEdgeVolumeBits(in), DomainError);
  in.k = 0.5;
  in.diameter = 0;
  CHECK_THROWS_AS(CoverEdgeVolumeBits(in), DomainError);
  in.m = 0;
  CHECK(CoverEdgeVolumeBits(in) == 0);
}

TEST_CASE("cover-edge volume grows with k and p") {
  ModelInputs in{.n = 5242, .m = 14484, .diameter = 17, .k = 0.3, .p = 4};
  const auto base = CoverEdgeVolumeBits(in);
  in.k = 0.6;
  CHECK(CoverEdgeVolumeBits(in) > base);
  in.k = 0.3;
  in.p = 8;
  CHECK(CoverEdgeVolumeBits(in) > base);
}

TEST_CASE("ca-GrQc sized model lands near 122KB") {
  ModelInputs in{.n = 5242, .m = 14484, .diameter = 17, .k = 0.522, .p = 4};
  CHECK(RelErr(Bytes(CoverEdgeVolumeBits(in)), 122.0L * 1024) <= 0.15L);
}

TEST_CASE("wedge volume") {
  CHECK(WedgeVolumeBits(165798, 5242) == 4310748);
  CHECK(FormatBytes(Bytes(WedgeVolumeBits(165798, 5242))) == "526KB");
  CHECK(WedgeVolumeBits(0, 5242) == 0);
  CHECK(WedgeVolumeBits(3, 3) == 12);
  CHECK_THROWS_AS(WedgeVolumeBits(BitCount{1} << 125, std::uint64_t{1} << 40),
                  OverflowError);
}

TEST_CASE("reduction ratio") {
  CHECK(ReductionRatio(526.0L, 122.0L) == doctest::Approx(4.31).epsilon(0.001));
  CHECK_THROWS_AS(ReductionRatio(1.0L, 0.0L), DomainError);
  CHECK_THROWS_AS(ReductionRatio(1.0L, -1.0L), DomainError);
}

TEST_CASE("RMAT-36 and RMAT-42 extrapolations") {
  const auto new36 = Bytes(CoverEdgeVolumeBits(Rmat(36, 0.311, 128)));
  const auto old36 =
      Bytes(WedgeVolumeBits(ParseCount("2.73e16"), std::uint64_t{1} << 36));
  CHECK(RelErr(new36, 192 * kTB) <= 0.02L);
  CHECK(RelErr(static_cast<long double>(ReductionRatio(old36, new36)), 1156) <=
        0.02L);
  CHECK(FormatBytes(old36) == "218PB");

  const auto new42 = Bytes(CoverEdgeVolumeBits(Rmat(42, 0.260, 256)));
  const auto old42 =
      Bytes(WedgeVolumeBits(ParseCount("5.79e18"), std::uint64_t{1} << 42));
  CHECK(RelErr(new42, 22.8L * kPB) <= 0.02L);
  CHECK(RelErr(static_cast<long double>(ReductionRatio(old42, new42)), 2368) <=
        0.02L);
  // The rounded wedge estimate gives 52.7EB; the table shows 52.8EB.
  CHECK(FormatBytes(old42) == "52.7EB");
  CHECK(FormatBytes(Bytes(WedgeVolumeBits(ParseCount("5.8e18"),
                                          std::uint64_t{1} << 42))) == "52.8EB");
}

TEST_CASE("exponential fit recovers synthetic parameters") {
  std::vector<KSample> samples;
  for (int s = 6; s <= 16; ++s) {
    samples.push_back({static_cast<double>(s), 1.1773 * std::exp(-0.036 * s)});
  }
  const auto fit = FitKExponential(samples);
  CHECK(fit.a == doctest::Approx(1.1773).epsilon(1e-6));
  CHECK(fit.b == doctest::Approx(0.036).epsilon(1e-6));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fit.samples.size() == samples.size());

  std::vector<KSample> flat = {{6, 0.5}, {7, 0.5}, {8, 0.5}};
  const auto flat_fit = FitKExponential(flat);
  CHECK(flat_fit.b == doctest::Approx(0.0));
  CHECK(flat_fit.r_squared == 1.0);
}

TEST_CASE("exponential fit errors") {
  std::vector<KSample> two = {{6, 0.5}, {7, 0.4}};
  CHECK_THROWS_AS(FitKExponential(two), DomainError);
  std::vector<KSample> zero = {{6, 0.5}, {7, 0.0}, {8, 0.3}};
  CHECK_THROWS_AS(FitKExponential(zero), DomainError);
  std::vector<KSample> same = {{6, 0.5}, {6, 0.4}, {6, 0.3}};
  CHECK_THROWS_AS(FitKExponential(same), DomainError);
}

TEST_CASE("published k fit evaluated at the RMAT scales") {
  FitResult fit;
  fit.a = kPublishedKFitA;
  fit.b = kPublishedKFitB;
  CHECK(fit.Evaluate(42) == doctest::Approx(0.260).epsilon(0.002 / 0.260));
  // The fit gives 0.322 at scale 36, above the 0.311 used in the table.
  CHECK(fit.Evaluate(36) == doctest::Approx(0.3221).epsilon(0.0005));
}

TEST_CASE("power-law triangle estimate") {
  CHECK(static_cast<double>(EstimateTrianglesPowerlaw(0x1p36L)) ==
        doctest::Approx(1.2e14).epsilon(0.01));
  CHECK(static_cast<double>(EstimateTrianglesPowerlaw(0x1p42L)) ==
        doctest::Approx(1.3e16).epsilon(0.015));
  CHECK(static_cast<double>(EstimateTrianglesPowerlaw(1)) ==
        doctest::Approx(77.422));
  CHECK_THROWS_AS(EstimateTrianglesPowerlaw(0), DomainError);
}

TEST_CASE("three significant figures") {
  CHECK(FormatSig3(4.3078) == "4.31");
  CHECK(FormatSig3(56.01) == "56.0");
  CHECK(FormatSig3(1156.4) == "1156");
  CHECK(FormatSig3(9.996) == "10.0");
  CHECK(FormatSig3(99.96) == "100");
  CHECK(FormatSig3(0) == "0.00");
  CHECK(FormatBytes(0) == "0.00B");
  CHECK(FormatBytes(1023) == "1023B");
  CHECK(FormatBytes(1024) == "1.00KB");
  CHECK(FormatBytes(0x1p60L * 3) == "3.00EB");
  CHECK(FormatBytes(0x1p70L) == "1024EB");
}

TEST_CASE("wedge volume strings for the SNAP rows") {
  struct Row {
    const char* name;
    std::uint64_t n;
    std::uint64_t wedges;
    const char* previous;
  };
  const Row rows[] = {
      {"ca-GrQc", 5242, 165798, "526KB"},
      {"ca-HepTh", 9877, 277389, "948KB"},
      {"as-caida20071105", 26475, 776895, "2.78MB"},
      {"facebook_combined", 4039, 17051688, "48.8MB"},
      {"ca-CondMat", 23133, 1567373, "5.61MB"},
      {"ca-HepPh", 12008, 5081984, "17.0MB"},
      {"email-Enron", 36692, 5933045, "22.6MB"},
      {"ca-AstroPh", 18772, 8451765, "30.2MB"},
      {"loc-brightkite_edges", 58228, 6956250, "26.5MB"},
      // 90856223.75 bytes is 86.65MB; the table rounds up to 86.7MB.
      {"soc-Epinions1", 75879, 21377935, "86.6MB"},
      {"amazon0601", 403394, 96348699, "436MB"},
      {"com-Youtube", 1134890, 209811585, "1.03GB"},
  };
  for (const auto& row : rows) {
    CAPTURE(row.name);
    CHECK(FormatBytes(Bytes(WedgeVolumeBits(row.wedges, row.n))) ==
          row.previous);
  }
}
