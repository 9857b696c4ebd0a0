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

#ifndef STYLOMARK_MOCK_LM_H_
#define STYLOMARK_MOCK_LM_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "stylomark/language_model.h"

namespace stylomark {

struct MockLmOptions {
  size_t min_tokens = 500;
};

// Word-level bigram model over whitespace-separated corpus tokens. Blank
// lines end paragraphs, which become the stop token. A token that closes a
// sentence resets the context to the sentence-start state, so the model
// learns sentence openers separately.
//
//   P(w | h) = lambda_h * c(h, w) / c(h) + (1 - lambda_h) * P_uni(w)
//   lambda_h = c(h) / (c(h) + T(h))      T(h): distinct successors of h
//   P_uni(w) = (c(w) + 1) / (N + V)
//
// The prompt is not consulted. Immutable after Build; thread-safe.
class MockLanguageModel : public LanguageModel {
 public:
  static constexpr std::string_view kStopToken = "</s>";

  static absl::StatusOr<MockLanguageModel> Build(
      std::string_view corpus, const MockLmOptions& options = {});

  const Vocabulary& vocabulary() const override { return vocab_; }
  int stop_token() const override { return 0; }
  absl::StatusOr<TokenDistribution> NextDistribution(
      std::string_view prompt,
      const std::vector<int>& generated) const override;
  std::string Describe() const override;

  // Distribution after `context`; -1 is the sentence-start state.
  TokenDistribution DistributionAfter(int context) const;
  // Context state that follows `token`.
  int ContextAfter(int token) const;
  size_t training_tokens() const { return total_; }

 private:
  struct Successors {
    size_t total = 0;
    std::vector<std::pair<int, size_t>> counts;  // sorted by token id
  };

  Vocabulary vocab_;
  std::vector<bool> ends_sentence_;
  std::vector<double> unigram_;  // P_uni
  Successors start_;             // successors of the sentence-start state
  std::vector<Successors> successors_;
  size_t total_ = 0;
  std::string fingerprint_;
};

}  // namespace stylomark

#endif  // STYLOMARK_MOCK_LM_H_
