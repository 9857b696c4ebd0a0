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

#include "stylomark/language_model.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace stylomark {

absl::StatusOr<Vocabulary> Vocabulary::Create(std::vector<std::string> tokens) {
  Vocabulary vocab;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!vocab.ids_.emplace(tokens[i], static_cast<int>(i)).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate token '", tokens[i], "' at id ", i));
    }
  }
  vocab.tokens_ = std::move(tokens);
  return vocab;
}

std::optional<int> Vocabulary::Find(std::string_view token) const {
  const auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

absl::Status TokenDistribution::Validate(double tolerance) const {
  if (!unboostable.empty() && unboostable.size() != probs.size()) {
    return absl::InternalError("unboostable flags do not match vocabulary");
  }
  double sum = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (!std::isfinite(probs[i]) || probs[i] < 0.0) {
      return absl::InternalError(
          absl::StrCat("invalid probability ", probs[i], " for token ", i));
    }
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > tolerance) {
    return absl::InternalError(
        absl::StrCat("distribution sums to ", sum));
  }
  return absl::OkStatus();
}

}  // namespace stylomark
