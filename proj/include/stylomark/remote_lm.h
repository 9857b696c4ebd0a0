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

#ifndef STYLOMARK_REMOTE_LM_H_
#define STYLOMARK_REMOTE_LM_H_

#include <memory>
#include <string>

#include "absl/status/statusor.h"
#include "stylomark/http_client.h"
#include "stylomark/language_model.h"

namespace stylomark {

// Client for a next-token distribution service:
//   GET  /v1/vocabulary        -> {"protocol", "model", "tokens", "stop_token"}
//   POST /v1/next-distribution {"prompt", "context"}
//                              -> {"ids", "probs", "residual_mass"}
// A top-K reply spreads `residual_mass` evenly over the unlisted tokens,
// which are flagged unboostable.
class RemoteLanguageModel : public LanguageModel {
 public:
  static absl::StatusOr<std::unique_ptr<RemoteLanguageModel>> Connect(
      const std::string& endpoint, const RemoteOptions& options = {});

  const Vocabulary& vocabulary() const override { return vocab_; }
  int stop_token() const override { return stop_token_; }
  absl::StatusOr<TokenDistribution> NextDistribution(
      std::string_view prompt,
      const std::vector<int>& generated) const override;
  std::string Describe() const override { return description_; }

 private:
  RemoteLanguageModel() = default;

  std::string endpoint_;
  RemoteOptions options_;
  Vocabulary vocab_;
  int stop_token_ = 0;
  std::string description_;
};

// Expands a /v1/next-distribution reply to a dense distribution. The listed
// probabilities plus residual mass must sum to one within 1e-6; the result
// is renormalized exactly.
absl::StatusOr<TokenDistribution> ParseNextDistribution(std::string_view body,
                                                        size_t vocab_size);

}  // namespace stylomark

#endif  // STYLOMARK_REMOTE_LM_H_
