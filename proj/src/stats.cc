// Copyright 2026 The Stylomark Authors. All Rights Reserved.
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

#include "stylomark/stats.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "stylomark/text_util.h"

namespace stylomark {
namespace {

long double LogPmfLong(int64_t n, int64_t k, long double log_p,
                       long double log_q) {
  const long double log_choose = std::lgamma(static_cast<long double>(n) + 1) -
                                 std::lgamma(static_cast<long double>(k) + 1) -
                                 std::lgamma(static_cast<long double>(n - k) + 1);
  // 0 * log(0) terms vanish.
  const long double hits = k == 0 ? 0.0L : k * log_p;
  const long double misses = n == k ? 0.0L : (n - k) * log_q;
  return log_choose + hits + misses;
}

}  // namespace

double NormalUpperTail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double ZScore(double x, double mean, double stddev) {
  return (x - mean) / stddev;
}

absl::StatusOr<double> Stouffer(const std::vector<double>& zs) {
  if (zs.empty()) {
    return absl::InvalidArgumentError("Stouffer statistic needs at least one z");
  }
  double sum = 0.0;
  for (double z : zs) sum += z;
  return sum / std::sqrt(static_cast<double>(zs.size()));
}

std::string_view AcrosticModeName(AcrosticMode mode) {
  return mode == AcrosticMode::kPmf ? "pmf" : "tail";
}

absl::StatusOr<AcrosticMode> ParseAcrosticMode(std::string_view name) {
  if (name == "pmf") return AcrosticMode::kPmf;
  if (name == "tail") return AcrosticMode::kTail;
  return absl::InvalidArgumentError(
      absl::StrCat("acrostic mode must be pmf or tail, got '", ToAbsl(name), "'"));
}

double LogBinomialPmf(int64_t n, int64_t k, double p) {
  const long double lp = std::log(static_cast<long double>(p));
  const long double lq = std::log1p(-static_cast<long double>(p));
  return static_cast<double>(LogPmfLong(n, k, lp, lq));
}

double LogBinomialUpperTail(int64_t n, int64_t k, double p) {
  if (k <= 0) return 0.0;
  const long double lp = std::log(static_cast<long double>(p));
  const long double lq = std::log1p(-static_cast<long double>(p));
  // Terms are scaled by the largest pmf value so the running sum from j = n
  // down to k is the same computation for every k, which keeps the tail
  // monotone in k.
  const int64_t mode = std::min<int64_t>(
      n, static_cast<int64_t>(std::floor((n + 1) * static_cast<long double>(p))));
  const long double peak = LogPmfLong(n, mode, lp, lq);
  long double sum = 0.0L;
  for (int64_t j = n; j >= k; --j) {
    sum += std::exp(LogPmfLong(n, j, lp, lq) - peak);
  }
  long double log_tail;
  if (sum > 0.0L) {
    log_tail = peak + std::log(sum);
  } else {
    // Every term underflowed relative to the peak; rescale by the first term.
    const long double first = LogPmfLong(n, k, lp, lq);
    long double local = 0.0L;
    for (int64_t j = n; j >= k; --j) {
      local += std::exp(LogPmfLong(n, j, lp, lq) - first);
    }
    log_tail = first + std::log(local);
  }
  return static_cast<double>(std::min(log_tail, 0.0L));
}

absl::StatusOr<double> LogAcrosticPValue(int64_t n, int64_t k,
                                         AcrosticMode mode) {
  if (n < 0 || k < 0 || k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("need 0 <= k <= n, got n=", n, " k=", k));
  }
  return mode == AcrosticMode::kPmf
             ? LogBinomialPmf(n, k, kLetterProbability)
             : LogBinomialUpperTail(n, k, kLetterProbability);
}

absl::StatusOr<double> AcrosticPValue(int64_t n, int64_t k,
                                      AcrosticMode mode) {
  absl::StatusOr<double> log_p = LogAcrosticPValue(n, k, mode);
  if (!log_p.ok()) return log_p.status();
  return std::exp(*log_p);
}

}  // namespace stylomark
