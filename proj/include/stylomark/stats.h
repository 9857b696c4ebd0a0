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

#ifndef STYLOMARK_STATS_H_
#define STYLOMARK_STATS_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace stylomark {

inline constexpr double kLetterProbability = 1.0 / 26.0;

// 1 - Phi(z) via the complementary error function.
double NormalUpperTail(double z);

double ZScore(double x, double mean, double stddev);

// Sum of z-scores over the square root of their count.
absl::StatusOr<double> Stouffer(const std::vector<double>& zs);

enum class AcrosticMode { kPmf, kTail };

std::string_view AcrosticModeName(AcrosticMode mode);
absl::StatusOr<AcrosticMode> ParseAcrosticMode(std::string_view name);

// Natural log of C(n, k) p^k (1 - p)^(n - k).
double LogBinomialPmf(int64_t n, int64_t k, double p);
// Natural log of the upper tail sum over j >= k.
double LogBinomialUpperTail(int64_t n, int64_t k, double p);

// Acrostic evidence for k first-letter hits among n scored sentences:
// the point probability (kPmf) or the upper tail (kTail), with p = 1/26.
absl::StatusOr<double> AcrosticPValue(int64_t n, int64_t k, AcrosticMode mode);
absl::StatusOr<double> LogAcrosticPValue(int64_t n, int64_t k,
                                         AcrosticMode mode);

}  // namespace stylomark

#endif  // STYLOMARK_STATS_H_
