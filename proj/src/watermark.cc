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

#include "stylomark/watermark.h"

#include <algorithm>
#include <cmath>

#include "stylomark/segmenter.h"
#include "stylomark/text_util.h"

namespace stylomark {

std::string_view FeatureName(Feature feature) {
  switch (feature) {
    case Feature::kAcrostic:
      return "acrostic";
    case Feature::kSensor:
      return "sensor";
    case Feature::kNone:
      break;
  }
  return "none";
}

size_t Mask::count() const {
  return static_cast<size_t>(std::count(marked.begin(), marked.end(), true));
}

std::optional<char> TokenInitial(std::string_view token) {
  size_t pos = 0;
  while (pos < token.size()) {
    size_t len = 0;
    const char32_t cp = DecodeUtf8(token, pos, &len);
    if (cp < 0x80) {
      const char c = static_cast<char>(cp);
      if (IsAsciiAlpha(c)) return AsciiLower(c);
      if (IsAsciiDigit(c)) return std::nullopt;
      pos += len;  // whitespace or punctuation
      continue;
    }
    if (cp == 0x2581 || cp == 0x0120 || cp == 0x010A || !IsAlnumCodePoint(cp)) {
      pos += len;
      continue;
    }
    return std::nullopt;  // a non-ASCII letter
  }
  return std::nullopt;
}

bool MatchesAcrostic(std::string_view token, char letter) {
  const std::optional<char> initial = TokenInitial(token);
  return initial.has_value() && *initial == AsciiLower(letter);
}

bool MatchesSensor(std::string_view token, SensorCategory category,
                   const NormLexicon& lexicon) {
  const std::vector<std::string> words = Words(token);
  return words.size() == 1 && lexicon.IsMatch(words[0], category);
}

Mask BuildMask(const Vocabulary& vocab, const WatermarkKey& key,
               bool at_sentence_start, const NormLexicon& lexicon,
               std::optional<int> stop_token) {
  Mask mask;
  mask.feature = at_sentence_start ? Feature::kAcrostic : Feature::kSensor;
  mask.marked.assign(vocab.size(), false);
  for (size_t id = 0; id < vocab.size(); ++id) {
    if (stop_token.has_value() && static_cast<int>(id) == *stop_token) continue;
    const std::string& token = vocab.token(static_cast<int>(id));
    mask.marked[id] = at_sentence_start
                          ? MatchesAcrostic(token, key.letter)
                          : MatchesSensor(token, key.category, lexicon);
  }
  return mask;
}

TokenDistribution Boost(const TokenDistribution& dist, const Mask& mask,
                        double bias) {
  if (bias == 0.0) return dist;
  const double factor = std::exp(bias);
  TokenDistribution out = dist;
  bool any = false;
  double total = 0.0;
  for (size_t id = 0; id < out.probs.size(); ++id) {
    if (mask.marked[id] && dist.Boostable(id) && out.probs[id] > 0.0) {
      out.probs[id] *= factor;
      any = true;
    }
    total += out.probs[id];
  }
  if (!any) return dist;
  for (double& p : out.probs) p /= total;
  return out;
}

MaskBank::MaskBank(const Vocabulary& vocab, const NormLexicon& lexicon,
                   std::optional<int> stop_token) {
  for (int i = 0; i < 26; ++i) {
    acrostic_[i].feature = Feature::kAcrostic;
    acrostic_[i].marked.assign(vocab.size(), false);
  }
  for (int c = 0; c < kNumSensorCategories; ++c) {
    sensor_[c].feature = Feature::kSensor;
    sensor_[c].marked.assign(vocab.size(), false);
  }
  for (size_t id = 0; id < vocab.size(); ++id) {
    if (stop_token.has_value() && static_cast<int>(id) == *stop_token) continue;
    const std::string& token = vocab.token(static_cast<int>(id));
    if (const std::optional<char> initial = TokenInitial(token)) {
      acrostic_[*initial - 'a'].marked[id] = true;
    }
    const std::vector<std::string> words = Words(token);
    if (words.size() != 1) continue;
    if (lexicon.Find(words[0]) == nullptr) continue;
    for (int c = 0; c < kNumSensorCategories; ++c) {
      sensor_[c].marked[id] = lexicon.IsMatch(words[0], SensorCategoryAt(c));
    }
  }
}

}  // namespace stylomark
