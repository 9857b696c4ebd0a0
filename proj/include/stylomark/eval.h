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

#ifndef STYLOMARK_EVAL_H_
#define STYLOMARK_EVAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "stylomark/attacks.h"
#include "stylomark/detector.h"
#include "stylomark/generator.h"
#include "stylomark/keygen.h"
#include "stylomark/language_model.h"

namespace stylomark {

enum class Variant { kBase, kSensorOnly, kAcrosticOnly, kBoth };

std::string_view VariantName(Variant variant);
absl::StatusOr<Variant> ParseVariant(std::string_view name);
// Comma-separated names; "base" is added when missing since every run
// needs unwatermarked controls.
absl::StatusOr<std::vector<Variant>> ParseVariantList(std::string_view text);

struct PromptSet {
  std::string version = "unversioned";
  std::vector<std::string> prompts;

  // One prompt per line; '#' comments; "# corpus-version: <id>".
  static PromptSet Parse(std::string_view text);
  static absl::StatusOr<PromptSet> Load(const std::string& path);
  static const PromptSet& Builtin();
};

struct RunRecord {
  int sample_id = 0;
  int prompt_id = 0;
  Variant variant = Variant::kBase;
  std::string attack = "none";
  bool ground_truth = false;  // watermarked by the pipeline
  uint64_t seed = 0;
  int sentence_count = 0;
  int n = 0;
  int k = 0;
  double stouffer_z = 0.0;
  double confidence = 0.0;  // in the run's acrostic mode
  double confidence_pmf = 0.0;
  double confidence_tail = 0.0;
  bool decision = false;
  // Attacked watermarked samples: keys of the clean text kept under attack.
  int keys_compared = 0;
  int keys_survived = 0;
  std::string error;  // non-empty when the sample failed
};

struct RunHeader {
  std::string schema;
  std::string artifact_version;
  std::string protocol_version;
  uint64_t seed = 0;
  double alpha = 0.05;
  AcrosticMode mode = AcrosticMode::kPmf;
  std::string classifier;
  std::string label_table;
  std::string seed_terms;
  std::string abbreviations;
  std::string lexicon;
  std::string model;
  std::string prompts;
  double acrostic_bias = 0.0;
  double sensor_bias = 0.0;
  int max_sentences = 0;
  std::string sampling;
  std::string attack = "none";
  int samples_per_prompt = 1;
};

struct EvalRun {
  RunHeader header;
  std::vector<RunRecord> records;
};

struct EvalConfig {
  EmbedConfig embed;  // biases are overridden per variant
  DetectorConfig detect;
  std::vector<Variant> variants = {Variant::kBase, Variant::kBoth};
  std::optional<AttackSpec> attack;
  uint64_t seed = 0;
  int samples_per_prompt = 1;
  int threads = 1;
};

// Prompt x sample x variant: generate, optionally attack, detect. Every
// variant of one (prompt, sample) pair uses the same generation seed.
class EvalHarness {
 public:
  // All references must outlive the harness.
  EvalHarness(const LanguageModel& model, const NormLexicon& lexicon,
              const KeyDeriver& keys, const Attacker& attacker);

  absl::StatusOr<EvalRun> Run(const PromptSet& prompts,
                              const EvalConfig& config) const;
  // One record; failures land in `record.error`.
  RunRecord RunOne(std::string_view prompt, int prompt_id, int sample_id,
                   Variant variant, const EvalConfig& config) const;

 private:
  const LanguageModel& model_;
  const NormLexicon& lexicon_;
  const KeyDeriver& keys_;
  const Attacker& attacker_;
  Embedder embedder_;
  Detector detector_;
};

struct Metrics {
  int min_sentences = 0;
  int included = 0;
  int excluded_short = 0;
  int excluded_errors = 0;
  int tp = 0, tn = 0, fp = 0, fn = 0;
  // Fractions of all included replies; they sum to one.
  double tp_all = 0.0, tn_all = 0.0, fp_all = 0.0, fn_all = 0.0;
  // Rates within each ground-truth class; NaN when the class is empty.
  double tpr = 0.0, fnr = 0.0, tnr = 0.0, fpr = 0.0;
};

// Counts records with sentence_count >= min_sentences and no error.
absl::StatusOr<Metrics> ComputeMetrics(const std::vector<RunRecord>& records,
                                       int min_sentences);

// Pooled key survival: keys survived over keys compared, summed across
// `records`; nullopt when no key was compared.
std::optional<double> KeySurvivalRate(const std::vector<RunRecord>& records);

// Records restricted to the given variants.
std::vector<RunRecord> FilterVariants(const std::vector<RunRecord>& records,
                                      const std::vector<Variant>& variants);

std::string FormatRecordsFile(const EvalRun& run);
absl::StatusOr<EvalRun> ParseRecordsFile(std::string_view text);
// Table with one row per watermark variant (each paired with the base
// controls) and the decision threshold.
absl::StatusOr<std::string> FormatTable(const EvalRun& run, int min_sentences);
// CSV: sample_id,prompt_id,variant,attacked,sentence_count,confidence,
// decision,ground_truth.
std::string FormatPlotData(const EvalRun& run);

}  // namespace stylomark

#endif  // STYLOMARK_EVAL_H_
