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

#ifndef STYLOMARK_GENERATOR_H_
#define STYLOMARK_GENERATOR_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "stylomark/keygen.h"
#include "stylomark/language_model.h"
#include "stylomark/lexicon.h"
#include "stylomark/watermark.h"

namespace stylomark {

enum class Sampling { kGreedy, kSeeded };

struct EmbedConfig {
  double acrostic_bias = 8.0;  // log-space
  double sensor_bias = 3.0;    // log-space
  int max_sentences = 25;
  Sampling sampling = Sampling::kSeeded;
  uint64_t seed = 0;
  int max_tokens = 1200;

  absl::Status Validate() const;
};

struct TokenEvent {
  int token = 0;
  int sentence = 0;
  bool at_start = false;
  Feature feature = Feature::kNone;
  bool marked = false;
  double bias = 0.0;  // bias applied to the chosen token
};

struct GenerationTrace {
  std::vector<TokenEvent> tokens;
  // Keys in the order they were applied; key i comes from sentence i and
  // biases sentence i + 1.
  std::vector<WatermarkKey> keys;
  std::string stop_reason;  // "stop-token", "max-sentences", "max-tokens"

  // One JSON object per line: a header, then token and key events.
  std::string ToJsonl(const Vocabulary& vocab) const;
};

struct GenerationResult {
  absl::Status status;  // on failure, text and trace hold the partial run
  std::string text;
  GenerationTrace trace;
};

// Decoding rules shared by plain and watermarked generation: at a sentence
// start only tokens beginning with an ASCII letter (or the stop token) are
// eligible and the chosen token is written capitalized, so that generated
// sentence boundaries are exactly the segmenter's.
class Decoder {
 public:
  explicit Decoder(const LanguageModel& model);

  // Zeroes ineligible tokens and renormalizes; unchanged if nothing would
  // remain.
  void ConstrainSentenceStart(TokenDistribution& dist) const;
  // Appends the token's surface form to `text`.
  void Append(int token, bool at_start, std::string& text) const;
  int Sample(const TokenDistribution& dist, Sampling sampling,
             std::mt19937_64& rng) const;

 private:
  const LanguageModel& model_;
  std::vector<bool> letter_initial_;
};

// Runs the model without any watermark logic.
GenerationResult GeneratePlain(const LanguageModel& model,
                               std::string_view prompt,
                               const EmbedConfig& config);

class Embedder {
 public:
  // All references must outlive the embedder.
  Embedder(const LanguageModel& model, const KeyDeriver& keys,
           const NormLexicon& lexicon);

  GenerationResult Generate(std::string_view prompt,
                            const EmbedConfig& config) const;

  const MaskBank& masks() const { return masks_; }

 private:
  const LanguageModel& model_;
  const KeyDeriver& keys_;
  MaskBank masks_;
  Decoder decoder_;
};

}  // namespace stylomark

#endif  // STYLOMARK_GENERATOR_H_
