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

#include "tricover/comm_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cctype>
#include <cstdio>

#include "tricover/dist_sim.hpp"
#include "tricover/errors.hpp"

namespace tricover {

std::string ToDecimal(BitCount x) {
  if (x == 0) return "0";
  std::string digits;
  while (x > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BitCount ParseCount(const std::string& text) {
  // mantissa digits, optional fraction, optional exponent
  std::size_t i = 0;
  BitCount mantissa = 0;
  int exponent = 0;
  bool any_digit = false;
  auto push_digit = [&](char c) {
    if (__builtin_mul_overflow(mantissa, BitCount{10}, &mantissa) ||
        __builtin_add_overflow(mantissa, BitCount(c - '0'), &mantissa)) {
      throw DomainError("count '" + text + "' exceeds 128 bits");
    }
    any_digit = true;
  };
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    push_digit(text[i++]);
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      push_digit(text[i++]);
      --exponent;
    }
  }
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      negative = text[i++] == '-';
    }
    int e = 0;
    const std::size_t start = i;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i])) && e < 1000) {
      e = e * 10 + (text[i++] - '0');
    }
    if (i == start) throw DomainError("bad exponent in count '" + text + "'");
    exponent += negative ? -e : e;
  }
  if (!any_digit || i != text.size()) {
    throw DomainError("'" + text + "' is not a non-negative count");
  }
  for (; exponent < 0; ++exponent) {
    if (mantissa % 10 != 0) {
      throw DomainError("count '" + text + "' is not an integer");
    }
    mantissa /= 10;
  }
  for (; exponent > 0; --exponent) {
    if (__builtin_mul_overflow(mantissa, BitCount{10}, &mantissa)) {
      throw DomainError("count '" + text + "' exceeds 128 bits");
    }
  }
  return mantissa;
}

namespace {

BitCount CheckedMul(BitCount a, BitCount b, const char* what) {
  BitCount r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError(std::string(what) + " exceeds 128 bits");
  }
  return r;
}

BitCount CheckedAdd(BitCount a, BitCount b, const char* what) {
  BitCount r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError(std::string(what) + " exceeds 128 bits");
  }
  return r;
}

// Ceiling of a non-negative real that should be integral when the inputs are
// exact; float noise within a relative 1e-12 snaps to the nearest integer.
BitCount CeilSnapped(long double x) {
  const long double nearest = std::round(x);
  if (std::fabs(x - nearest) <= 1e-12L * std::max(1.0L, x)) {
    return static_cast<BitCount>(nearest);
  }
  return static_cast<BitCount>(std::ceil(x));
}

}  // namespace

BitCount CoverEdgeVolumeBits(const ModelInputs& in) {
  if (in.p == 0) throw DomainError("processor count must be at least 1");
  if (!(in.k >= 0.0 && in.k <= 1.0)) {
    throw DomainError("cover-edge fraction k must lie in [0,1]");
  }
  if (!in.log_diameter_bits && in.diameter == 0 && in.m > 0) {
    throw DomainError("diameter proxy is 0 for a graph with edges");
  }
  const BitCount lg_n = CeilLog2(in.n);
  const BitCount lg_d =
      in.log_diameter_bits ? *in.log_diameter_bits : CeilLog2(in.diameter);
  const BitCount m = in.m;
  const BitCount p = in.p;

  // Integer part: m (lg D + 3 lg n) + (p - 1) lg n.
  BitCount bits = CheckedMul(m, lg_d + 3 * lg_n, "cover-edge volume");
  bits = CheckedAdd(bits, (p - 1) * lg_n, "cover-edge volume");

  // Exchange part: k m p lg n.
  BitCount exchange;
  if (in.cover_edges) {
    exchange = CheckedMul(CheckedMul(*in.cover_edges, p, "exchange volume"),
                          lg_n, "exchange volume");
  } else {
    const long double x = static_cast<long double>(in.k) *
                          static_cast<long double>(in.m) *
                          static_cast<long double>(in.p) *
                          static_cast<long double>(lg_n);
    if (x >= 0x1p127L) throw OverflowError("exchange volume exceeds 128 bits");
    exchange = CeilSnapped(x);
  }
  return CheckedAdd(bits, exchange, "cover-edge volume");
}

BitCount WedgeVolumeBits(BitCount wedges, std::uint64_t n) {
  return CheckedMul(wedges, BitCount{2} * CeilLog2(n), "wedge volume");
}

double ReductionRatio(long double previous_bits, long double new_bits) {
  if (!(new_bits > 0)) {
    throw DomainError("reduction ratio needs a positive new volume");
  }
  return static_cast<double>(previous_bits / new_bits);
}

double FitResult::Evaluate(double scale) const {
  return a * std::exp(-b * scale);
}

FitResult FitKExponential(std::span<const KSample> samples) {
  if (samples.size() < 3) {
    throw DomainError("exponential fit needs at least 3 samples");
  }
  long double sx = 0, sy = 0;
  for (const auto& s : samples) {
    if (!(s.k > 0)) {
      throw DomainError("k sample at scale " + std::to_string(s.scale) +
                        " is not positive");
    }
    sx += s.scale;
    sy += std::log(static_cast<long double>(s.k));
  }
  const long double count = static_cast<long double>(samples.size());
  const long double mx = sx / count;
  const long double my = sy / count;
  long double sxx = 0, sxy = 0, syy = 0;
  for (const auto& s : samples) {
    const long double dx = s.scale - mx;
    const long double dy = std::log(static_cast<long double>(s.k)) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw DomainError("all k samples share one scale");
  const long double slope = sxy / sxx;
  const long double intercept = my - slope * mx;

  FitResult fit;
  fit.a = static_cast<double>(std::exp(intercept));
  fit.b = static_cast<double>(-slope);
  // Perfectly flat ln k is fitted exactly.
  fit.r_squared =
      syy == 0 ? 1.0
               : static_cast<double>(
                     std::clamp((sxy * sxy) / (sxx * syy), 0.0L, 1.0L));
  fit.samples.assign(samples.begin(), samples.end());
  return fit;
}

long double EstimateTrianglesPowerlaw(long double n) {
  if (!(n >= 1)) throw DomainError("vertex count must be at least 1");
  return 77.422L * std::pow(n, 1.125L);
}

std::string FormatSig3(long double x) {
  char buf[64];
  // Thresholds sit where rounding would add a fourth digit.
  const char* fmt = "%.2Lf";
  if (std::fabs(x) >= 99.95L) {
    fmt = "%.0Lf";
  } else if (std::fabs(x) >= 9.995L) {
    fmt = "%.1Lf";
  }
  std::snprintf(buf, sizeof(buf), fmt, x);
  return buf;
}

std::string FormatBytes(long double bytes) {
  static constexpr std::array<const char*, 7> kUnits = {"B",  "KB", "MB", "GB",
                                                        "TB", "PB", "EB"};
  std::size_t unit = 0;
  long double v = bytes;
  while (unit + 1 < kUnits.size() && v >= 1024.0L) {
    v /= 1024.0L;
    ++unit;
  }
  return FormatSig3(v) + kUnits[unit];
}

}  // namespace tricover
