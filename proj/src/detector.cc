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

#include "stylomark/detector.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "nlohmann/json.hpp"
#include "stylomark/text_util.h"

namespace stylomark {
namespace {

constexpr char kInsufficientPayload[] = "stylomark/insufficient-text";

}  // namespace

SensorScore ScoreSentence(const Sentence& sentence, SensorCategory category,
                          const NormLexicon& lexicon) {
  SensorScore score;
  double sum = 0.0;
  for (const std::string& word : sentence.words) {
    const std::optional<double> r = lexicon.Rating(word, category);
    if (!r.has_value()) continue;
    sum += *r;
    ++score.words_scored;
  }
  if (score.words_scored > 0) score.mean = sum / score.words_scored;
  return score;
}

absl::Status InsufficientTextError(std::string_view detail) {
  absl::Status status = absl::FailedPreconditionError(
      absl::StrCat("insufficient text: ", ToAbsl(detail)));
  status.SetPayload(kInsufficientPayload, absl::Cord("1"));
  return status;
}

bool IsInsufficientText(const absl::Status& status) {
  return status.GetPayload(kInsufficientPayload).has_value();
}

absl::StatusOr<std::vector<std::optional<WatermarkKey>>> Detector::RecoverKeys(
    const std::vector<Sentence>& sentences, int parallelism) const {
  return keys_.DeriveChain(sentences, parallelism);
}

absl::StatusOr<DetectionReport> Detector::Detect(
    std::string_view text, const DetectorConfig& config) const {
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    return absl::InvalidArgumentError("alpha must lie in (0, 1)");
  }
  const std::vector<Sentence> sentences = SplitSentences(text);
  if (sentences.size() < 2) {
    return InsufficientTextError(absl::StrCat(
        sentences.size(), " sentence(s); at least 2 are required"));
  }
  absl::StatusOr<std::vector<std::optional<WatermarkKey>>> keys =
      RecoverKeys(sentences, config.parallelism);
  if (!keys.ok()) return keys.status();

  DetectionReport report;
  report.total_sentences = static_cast<int>(sentences.size());
  report.alpha = config.alpha;
  report.mode = config.mode;
  report.binding = keys_.classifier().binding();
  report.label_table_version = keys_.table().version();
  report.lexicon_fingerprint = lexicon_.fingerprint();

  std::vector<double> zs;
  for (size_t i = 1; i < sentences.size(); ++i) {
    const std::optional<WatermarkKey>& key = (*keys)[i - 1];
    if (!key.has_value()) continue;
    const Sentence& s = sentences[i];
    SentenceScore score;
    score.index = s.index;
    score.key = *key;
    const SensorScore sensor = ScoreSentence(s, key->category, lexicon_);
    score.words_scored = sensor.words_scored;
    score.neutral = sensor.words_scored == 0;
    if (!score.neutral) {
      const CategoryStats stats = lexicon_.Stats(key->category);
      score.x = sensor.mean;
      score.z = ZScore(sensor.mean, stats.mean, stats.stddev);
    }
    score.acrostic_hit = s.first_alpha.has_value() && *s.first_alpha == key->letter;
    zs.push_back(score.z);
    if (score.acrostic_hit) ++report.k;
    report.sentences.push_back(score);
  }
  if (zs.empty()) {
    return InsufficientTextError("no sentence has a recoverable key");
  }
  report.n = static_cast<int>(zs.size());
  absl::StatusOr<double> z = Stouffer(zs);
  if (!z.ok()) return z.status();
  report.stouffer_z = *z;
  report.p_s = NormalUpperTail(*z);
  absl::StatusOr<double> pmf =
      AcrosticPValue(report.n, report.k, AcrosticMode::kPmf);
  absl::StatusOr<double> tail =
      AcrosticPValue(report.n, report.k, AcrosticMode::kTail);
  if (!pmf.ok()) return pmf.status();
  if (!tail.ok()) return tail.status();
  report.p_a_pmf = *pmf;
  report.p_a_tail = *tail;
  report.p_a = config.mode == AcrosticMode::kPmf ? *pmf : *tail;
  report.p = report.p_s * report.p_a;
  report.confidence = 1.0 - report.p;
  report.watermarked = report.confidence >= 1.0 - config.alpha;
  return report;
}

std::string DetectionReport::ToJson() const {
  using json = nlohmann::json;
  json per_sentence = json::array();
  for (const SentenceScore& s : sentences) {
    per_sentence.push_back({{"index", s.index},
                            {"key_letter", std::string(1, s.key.letter)},
                            {"key_category", SensorCategoryName(s.key.category)},
                            {"x", s.x},
                            {"z", s.z},
                            {"words_scored", s.words_scored},
                            {"neutral", s.neutral},
                            {"acrostic_hit", s.acrostic_hit}});
  }
  const json j = {{"total_sentences", total_sentences},
                  {"n", n},
                  {"k", k},
                  {"Z", stouffer_z},
                  {"p_s", p_s},
                  {"p_a", p_a},
                  {"p_a_pmf", p_a_pmf},
                  {"p_a_tail", p_a_tail},
                  {"P", p},
                  {"confidence", confidence},
                  {"alpha", alpha},
                  {"acrostic_mode", AcrosticModeName(mode)},
                  {"decision", watermarked ? "watermarked" : "not-watermarked"},
                  {"classifier", binding.ToString()},
                  {"label_table", label_table_version},
                  {"lexicon", lexicon_fingerprint},
                  {"sentences", per_sentence}};
  return j.dump(2);
}

std::string DetectionReport::Summary() const {
  return absl::StrFormat(
      "%s: confidence %.6f (threshold %.4f), P=%.3g = p_s %.3g x p_a %.3g "
      "[%s]; %d of %d scored sentences start with their key letter; "
      "Stouffer Z=%.3f",
      watermarked ? "WATERMARKED" : "not watermarked", confidence,
      1.0 - alpha, p, p_s, p_a, ToAbsl(AcrosticModeName(mode)), k, n, stouffer_z);
}

}  // namespace stylomark
