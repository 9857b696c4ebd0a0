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

#ifndef STYLOMARK_WATERMARK_H_
#define STYLOMARK_WATERMARK_H_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "stylomark/keygen.h"
#include "stylomark/language_model.h"
#include "stylomark/lexicon.h"

namespace stylomark {

enum class Feature { kNone, kAcrostic, kSensor };

std::string_view FeatureName(Feature feature);

struct Mask {
  std::vector<bool> marked;  // indexed by token id
  Feature feature = Feature::kNone;

  size_t count() const;
};

// Lowercase first letter of a token once leading whitespace, punctuation
// and subword markers ("▁", "Ġ") are skipped; nullopt when the first
// remaining character is not an ASCII letter.
std::optional<char> TokenInitial(std::string_view token);

bool MatchesAcrostic(std::string_view token, char letter);
// The token holds exactly one word and that word matches the category.
bool MatchesSensor(std::string_view token, SensorCategory category,
                   const NormLexicon& lexicon);

// Acrostic mask at sentence starts, sensorimotor mask elsewhere. The stop
// token is never marked.
Mask BuildMask(const Vocabulary& vocab, const WatermarkKey& key,
               bool at_sentence_start, const NormLexicon& lexicon,
               std::optional<int> stop_token = std::nullopt);

// Adds `bias` to the log-probability of every marked, boostable token and
// renormalizes. A zero bias or an empty mask returns the input unchanged.
TokenDistribution Boost(const TokenDistribution& dist, const Mask& mask,
                        double bias);

// All 26 acrostic and 11 sensorimotor masks of one vocabulary, built once.
class MaskBank {
 public:
  MaskBank(const Vocabulary& vocab, const NormLexicon& lexicon,
           std::optional<int> stop_token);

  const Mask& Acrostic(char letter) const { return acrostic_[letter - 'a']; }
  const Mask& Sensor(SensorCategory c) const { return sensor_[Index(c)]; }
  const Mask& For(const WatermarkKey& key, bool at_sentence_start) const {
    return at_sentence_start ? Acrostic(key.letter) : Sensor(key.category);
  }

 private:
  std::array<Mask, 26> acrostic_;
  std::array<Mask, kNumSensorCategories> sensor_;
};

}  // namespace stylomark

#endif  // STYLOMARK_WATERMARK_H_
