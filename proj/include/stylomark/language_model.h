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

#ifndef STYLOMARK_LANGUAGE_MODEL_H_
#define STYLOMARK_LANGUAGE_MODEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"

namespace stylomark {

class Vocabulary {
 public:
  Vocabulary() = default;
  // Token strings must be unique.
  static absl::StatusOr<Vocabulary> Create(std::vector<std::string> tokens);

  size_t size() const { return tokens_.size(); }
  const std::string& token(int id) const { return tokens_[id]; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::optional<int> Find(std::string_view token) const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> ids_;
};

struct TokenDistribution {
  std::vector<double> probs;
  // Tokens whose probability is only known as a share of residual mass.
  // Boosting leaves them unmarked. Empty means every token is exact.
  std::vector<bool> unboostable;

  bool Boostable(size_t id) const {
    return unboostable.empty() || !unboostable[id];
  }
  // Entries non-negative and finite, sum within `tolerance` of one.
  absl::Status Validate(double tolerance = 1e-9) const;
};

// A next-token distribution provider. Generated text is the space-joined
// surface forms of the chosen tokens.
class LanguageModel {
 public:
  virtual ~LanguageModel() = default;

  virtual const Vocabulary& vocabulary() const = 0;
  virtual int stop_token() const = 0;
  virtual absl::StatusOr<TokenDistribution> NextDistribution(
      std::string_view prompt, const std::vector<int>& generated) const = 0;
  // Short identifier for run headers.
  virtual std::string Describe() const = 0;
  // Whether one instance may serve several generation sessions at once.
  virtual bool SharedAcrossSessions() const { return true; }
};

}  // namespace stylomark

#endif  // STYLOMARK_LANGUAGE_MODEL_H_
