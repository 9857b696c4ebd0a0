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

#include "stylomark/generator.h"

#include <optional>

#include "absl/strings/str_cat.h"
#include "nlohmann/json.hpp"
#include "stylomark/segmenter.h"
#include "stylomark/text_util.h"

namespace stylomark {

absl::Status EmbedConfig::Validate() const {
  if (!(acrostic_bias >= 0.0) || !(sensor_bias >= 0.0)) {
    return absl::InvalidArgumentError("biases must be non-negative");
  }
  if (max_sentences < 1) {
    return absl::InvalidArgumentError("max_sentences must be at least 1");
  }
  if (max_tokens < 1) {
    return absl::InvalidArgumentError("max_tokens must be at least 1");
  }
  return absl::OkStatus();
}

std::string GenerationTrace::ToJsonl(const Vocabulary& vocab) const {
  using json = nlohmann::json;
  const auto dump = [](const json& j) {
    return j.dump(-1, ' ', false, json::error_handler_t::replace);
  };
  std::string out = dump({{"type", "trace"},
                          {"tokens", tokens.size()},
                          {"keys", keys.size()},
                          {"stop_reason", stop_reason}});
  out.push_back('\n');
  for (const WatermarkKey& key : keys) {
    out += dump({{"type", "key"},
                 {"source", key.source_sentence_index},
                 {"applied_to", key.source_sentence_index + 1},
                 {"letter", std::string(1, key.letter)},
                 {"category", SensorCategoryName(key.category)},
                 {"acrostic_label", key.acrostic_label},
                 {"sensor_label", key.sensor_label}});
    out.push_back('\n');
  }
  for (size_t i = 0; i < tokens.size(); ++i) {
    const TokenEvent& t = tokens[i];
    out += dump({{"type", "token"},
                 {"position", i},
                 {"id", t.token},
                 {"surface", vocab.token(t.token)},
                 {"sentence", t.sentence},
                 {"at_start", t.at_start},
                 {"feature", FeatureName(t.feature)},
                 {"marked", t.marked},
                 {"bias", t.bias}});
    out.push_back('\n');
  }
  return out;
}

Decoder::Decoder(const LanguageModel& model) : model_(model) {
  const Vocabulary& vocab = model.vocabulary();
  letter_initial_.resize(vocab.size());
  for (size_t id = 0; id < vocab.size(); ++id) {
    const std::string& t = vocab.token(static_cast<int>(id));
    letter_initial_[id] = !t.empty() && IsAsciiAlpha(t.front());
  }
  letter_initial_[model.stop_token()] = true;
}

void Decoder::ConstrainSentenceStart(TokenDistribution& dist) const {
  double kept = 0.0;
  for (size_t id = 0; id < dist.probs.size(); ++id) {
    if (letter_initial_[id]) kept += dist.probs[id];
  }
  if (!(kept > 0.0)) return;
  for (size_t id = 0; id < dist.probs.size(); ++id) {
    dist.probs[id] = letter_initial_[id] ? dist.probs[id] / kept : 0.0;
  }
}

void Decoder::Append(int token, bool at_start, std::string& text) const {
  if (!text.empty()) text.push_back(' ');
  const size_t begin = text.size();
  text += model_.vocabulary().token(token);
  if (at_start && begin < text.size()) text[begin] = AsciiUpper(text[begin]);
}

int Decoder::Sample(const TokenDistribution& dist, Sampling sampling,
                    std::mt19937_64& rng) const {
  const std::vector<double>& p = dist.probs;
  if (sampling == Sampling::kGreedy) {
    size_t best = 0;
    for (size_t id = 1; id < p.size(); ++id) {
      if (p[id] > p[best]) best = id;
    }
    return static_cast<int>(best);
  }
  const double u = UnitFromBits(rng());
  double cumulative = 0.0;
  int last_positive = 0;
  for (size_t id = 0; id < p.size(); ++id) {
    if (p[id] <= 0.0) continue;
    cumulative += p[id];
    last_positive = static_cast<int>(id);
    if (u < cumulative) return last_positive;
  }
  return last_positive;  // rounding left u above the total
}

GenerationResult GeneratePlain(const LanguageModel& model,
                               std::string_view prompt,
                               const EmbedConfig& config) {
  GenerationResult result;
  result.status = config.Validate();
  if (!result.status.ok()) return result;
  const Decoder decoder(model);
  std::mt19937_64 rng(config.seed);
  std::vector<int> generated;
  int sentence = 0;
  while (true) {
    const bool at_start = result.text.empty() || EndsAtBoundary(result.text);
    if (at_start && !result.text.empty()) {
      sentence = static_cast<int>(SplitSentences(result.text).size());
      if (sentence >= config.max_sentences) {
        result.trace.stop_reason = "max-sentences";
        break;
      }
    }
    if (static_cast<int>(generated.size()) >= config.max_tokens) {
      result.trace.stop_reason = "max-tokens";
      break;
    }
    absl::StatusOr<TokenDistribution> dist =
        model.NextDistribution(prompt, generated);
    if (!dist.ok()) {
      result.status = dist.status();
      return result;
    }
    if (at_start) decoder.ConstrainSentenceStart(*dist);
    const int token = decoder.Sample(*dist, config.sampling, rng);
    if (token == model.stop_token()) {
      result.trace.stop_reason = "stop-token";
      break;
    }
    generated.push_back(token);
    result.trace.tokens.push_back({token, sentence, at_start});
    decoder.Append(token, at_start, result.text);
  }
  return result;
}

Embedder::Embedder(const LanguageModel& model, const KeyDeriver& keys,
                   const NormLexicon& lexicon)
    : model_(model),
      keys_(keys),
      masks_(model.vocabulary(), lexicon, model.stop_token()),
      decoder_(model) {}

GenerationResult Embedder::Generate(std::string_view prompt,
                                    const EmbedConfig& config) const {
  GenerationResult result;
  result.status = config.Validate();
  if (!result.status.ok()) return result;
  if (StripAsciiWhitespace(prompt).empty()) {
    result.status = absl::InvalidArgumentError("prompt is empty");
    return result;
  }
  std::mt19937_64 rng(config.seed);
  std::vector<int> generated;
  std::optional<WatermarkKey> key;  // applies to the current sentence
  int sentence = 0;
  while (true) {
    const bool at_start = result.text.empty() || EndsAtBoundary(result.text);
    bool fresh_key = false;
    if (at_start && !result.text.empty()) {
      const std::vector<Sentence> done = SplitSentences(result.text);
      sentence = static_cast<int>(done.size());
      if (sentence >= config.max_sentences) {
        result.trace.stop_reason = "max-sentences";
        break;
      }
      if (static_cast<int>(generated.size()) < config.max_tokens) {
        key.reset();
        if (!done.back().words.empty()) {
          absl::StatusOr<WatermarkKey> derived = keys_.Derive(done.back());
          if (!derived.ok()) {
            result.status = derived.status();
            return result;
          }
          key = *derived;
          fresh_key = true;
        }
      }
    }
    if (static_cast<int>(generated.size()) >= config.max_tokens) {
      result.trace.stop_reason = "max-tokens";
      break;
    }
    absl::StatusOr<TokenDistribution> dist =
        model_.NextDistribution(prompt, generated);
    if (!dist.ok()) {
      result.status = dist.status();
      return result;
    }
    TokenEvent event;
    event.sentence = sentence;
    event.at_start = at_start;
    const Mask* mask = nullptr;
    double bias = 0.0;
    if (key.has_value()) {
      mask = &masks_.For(*key, at_start);
      bias = at_start ? config.acrostic_bias : config.sensor_bias;
      event.feature = mask->feature;
      *dist = Boost(*dist, *mask, bias);
    }
    if (at_start) decoder_.ConstrainSentenceStart(*dist);
    const int token = decoder_.Sample(*dist, config.sampling, rng);
    if (token == model_.stop_token()) {
      result.trace.stop_reason = "stop-token";
      break;
    }
    if (fresh_key) result.trace.keys.push_back(*key);
    event.token = token;
    event.marked = mask != nullptr && mask->marked[token];
    event.bias = event.marked && dist->Boostable(token) ? bias : 0.0;
    generated.push_back(token);
    result.trace.tokens.push_back(event);
    decoder_.Append(token, at_start, result.text);
  }
  return result;
}

}  // namespace stylomark
