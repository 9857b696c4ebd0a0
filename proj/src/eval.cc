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

#include "stylomark/eval.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "nlohmann/json.hpp"
#include "stylomark/builtin_data.h"
#include "stylomark/segmenter.h"
#include "stylomark/text_util.h"
#include "stylomark/version.h"

namespace stylomark {
namespace {

using json = nlohmann::json;

constexpr uint64_t kAttackStream = 0xA77AC;

EmbedConfig ConfigFor(Variant variant, EmbedConfig config) {
  if (variant == Variant::kSensorOnly) config.acrostic_bias = 0.0;
  if (variant == Variant::kAcrosticOnly) config.sensor_bias = 0.0;
  return config;
}

std::string Dump(const json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

json HeaderToJson(const RunHeader& h) {
  return {{"type", "header"},
          {"schema", h.schema},
          {"artifact_version", h.artifact_version},
          {"protocol_version", h.protocol_version},
          {"seed", h.seed},
          {"alpha", h.alpha},
          {"acrostic_mode", AcrosticModeName(h.mode)},
          {"classifier", h.classifier},
          {"label_table", h.label_table},
          {"seed_terms", h.seed_terms},
          {"abbreviations", h.abbreviations},
          {"lexicon", h.lexicon},
          {"model", h.model},
          {"prompts", h.prompts},
          {"acrostic_bias", h.acrostic_bias},
          {"sensor_bias", h.sensor_bias},
          {"max_sentences", h.max_sentences},
          {"sampling", h.sampling},
          {"attack", h.attack},
          {"samples_per_prompt", h.samples_per_prompt}};
}

json RecordToJson(const RunRecord& r) {
  return {{"type", "record"},
          {"sample_id", r.sample_id},
          {"prompt_id", r.prompt_id},
          {"variant", VariantName(r.variant)},
          {"attack", r.attack},
          {"ground_truth", r.ground_truth},
          {"seed", r.seed},
          {"sentence_count", r.sentence_count},
          {"n", r.n},
          {"k", r.k},
          {"z", r.stouffer_z},
          {"confidence", r.confidence},
          {"confidence_pmf", r.confidence_pmf},
          {"confidence_tail", r.confidence_tail},
          {"decision", r.decision},
          {"keys_compared", r.keys_compared},
          {"keys_survived", r.keys_survived},
          {"error", r.error}};
}

template <typename T>
absl::Status Field(const json& j, const char* name, T* out) {
  if (!j.contains(name)) {
    return absl::DataLossError(absl::StrCat("records file: missing '", name, "'"));
  }
  try {
    *out = j.at(name).get<T>();
  } catch (const json::exception& e) {
    return absl::DataLossError(
        absl::StrCat("records file: bad '", name, "': ", e.what()));
  }
  return absl::OkStatus();
}

double Ratio(int num, int den) {
  return den == 0 ? std::numeric_limits<double>::quiet_NaN()
                  : static_cast<double>(num) / den;
}

}  // namespace

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kBase:
      return "base";
    case Variant::kSensorOnly:
      return "sensor-only";
    case Variant::kAcrosticOnly:
      return "acrostic-only";
    case Variant::kBoth:
      return "both";
  }
  return "base";
}

absl::StatusOr<Variant> ParseVariant(std::string_view name) {
  for (Variant v : {Variant::kBase, Variant::kSensorOnly,
                    Variant::kAcrosticOnly, Variant::kBoth}) {
    if (name == VariantName(v)) return v;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown variant '", ToAbsl(name),
      "'; expected base, sensor-only, acrostic-only or both"));
}

absl::StatusOr<std::vector<Variant>> ParseVariantList(std::string_view text) {
  std::vector<Variant> variants = {Variant::kBase};
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item =
        StripAsciiWhitespace(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    absl::StatusOr<Variant> v = ParseVariant(item);
    if (!v.ok()) return v.status();
    if (std::find(variants.begin(), variants.end(), *v) == variants.end()) {
      variants.push_back(*v);
    }
  }
  std::sort(variants.begin(), variants.end());
  return variants;
}

PromptSet PromptSet::Parse(std::string_view text) {
  PromptSet set;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = StripAsciiWhitespace(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      line = StripAsciiWhitespace(line.substr(1));
      constexpr std::string_view kTag = "corpus-version:";
      if (line.substr(0, kTag.size()) == kTag) {
        set.version = std::string(StripAsciiWhitespace(line.substr(kTag.size())));
      }
      continue;
    }
    set.prompts.emplace_back(line);
  }
  return set;
}

absl::StatusOr<PromptSet> PromptSet::Load(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  return Parse(*text);
}

const PromptSet& PromptSet::Builtin() {
  static const PromptSet* const kBuiltin =
      new PromptSet(Parse(builtin::prompts()));
  return *kBuiltin;
}

EvalHarness::EvalHarness(const LanguageModel& model, const NormLexicon& lexicon,
                         const KeyDeriver& keys, const Attacker& attacker)
    : model_(model),
      lexicon_(lexicon),
      keys_(keys),
      attacker_(attacker),
      embedder_(model, keys, lexicon),
      detector_(lexicon, keys) {}

RunRecord EvalHarness::RunOne(std::string_view prompt, int prompt_id,
                              int sample_id, Variant variant,
                              const EvalConfig& config) const {
  RunRecord record;
  record.sample_id = sample_id;
  record.prompt_id = prompt_id;
  record.variant = variant;
  record.ground_truth = variant != Variant::kBase;
  record.seed = MixSeed(config.seed, static_cast<uint64_t>(sample_id));
  if (config.attack.has_value()) record.attack = config.attack->ToString();

  EmbedConfig embed = ConfigFor(variant, config.embed);
  embed.seed = record.seed;
  const GenerationResult generated =
      variant == Variant::kBase ? GeneratePlain(model_, prompt, embed)
                                : embedder_.Generate(prompt, embed);
  if (!generated.status.ok()) {
    record.error = absl::StrCat("generation error: ",
                                generated.status.ToString());
    return record;
  }

  std::string text = generated.text;
  if (config.attack.has_value()) {
    AttackSpec spec = *config.attack;
    spec.seed = MixSeed(record.seed, kAttackStream);
    absl::StatusOr<AttackOutcome> attacked = attacker_.Apply(text, spec);
    if (!attacked.ok()) {
      record.error = absl::StrCat("attack error: ", attacked.status().ToString());
      return record;
    }
    const std::vector<Sentence> clean = SplitSentences(generated.text);
    const std::vector<Sentence> dirty = SplitSentences(attacked->text);
    absl::StatusOr<std::vector<std::optional<WatermarkKey>>> before =
        detector_.RecoverKeys(clean, config.detect.parallelism);
    absl::StatusOr<std::vector<std::optional<WatermarkKey>>> after =
        detector_.RecoverKeys(dirty, config.detect.parallelism);
    if (!before.ok() || !after.ok()) {
      record.error = absl::StrCat(
          "key recovery error: ",
          (before.ok() ? after.status() : before.status()).ToString());
      return record;
    }
    for (size_t i = 0; i < before->size(); ++i) {
      if (!(*before)[i].has_value()) continue;
      ++record.keys_compared;
      if (i < after->size() && (*after)[i].has_value() &&
          (*after)[i]->SameControls(*(*before)[i])) {
        ++record.keys_survived;
      }
    }
    text = std::move(attacked->text);
  }

  record.sentence_count = static_cast<int>(SplitSentences(text).size());
  absl::StatusOr<DetectionReport> report = detector_.Detect(text, config.detect);
  if (!report.ok()) {
    if (IsInsufficientText(report.status())) return record;  // not flagged
    record.error = absl::StrCat("detection error: ", report.status().ToString());
    return record;
  }
  record.n = report->n;
  record.k = report->k;
  record.stouffer_z = report->stouffer_z;
  record.confidence = report->confidence;
  record.confidence_pmf = 1.0 - report->p_s * report->p_a_pmf;
  record.confidence_tail = 1.0 - report->p_s * report->p_a_tail;
  record.decision = report->watermarked;
  return record;
}

absl::StatusOr<EvalRun> EvalHarness::Run(const PromptSet& prompts,
                                         const EvalConfig& config) const {
  absl::Status valid = config.embed.Validate();
  if (!valid.ok()) return valid;
  if (config.samples_per_prompt < 1) {
    return absl::InvalidArgumentError("samples_per_prompt must be at least 1");
  }
  if (config.variants.empty()) {
    return absl::InvalidArgumentError("no variants requested");
  }
  if (config.attack.has_value()) {
    valid = config.attack->Validate();
    if (!valid.ok()) return valid;
  }

  EvalRun run;
  RunHeader& h = run.header;
  h.schema = kRecordSchema;
  h.artifact_version = kVersion;
  h.protocol_version = kProtocolVersion;
  h.seed = config.seed;
  h.alpha = config.detect.alpha;
  h.mode = config.detect.mode;
  h.classifier = keys_.classifier().binding().ToString();
  h.label_table = keys_.table().version();
  h.seed_terms = keys_.table().seeds_version();
  h.abbreviations = AbbreviationList::Builtin().version();
  h.lexicon = lexicon_.fingerprint();
  h.model = model_.Describe();
  h.prompts = prompts.version;
  h.acrostic_bias = config.embed.acrostic_bias;
  h.sensor_bias = config.embed.sensor_bias;
  h.max_sentences = config.embed.max_sentences;
  h.sampling = config.embed.sampling == Sampling::kGreedy ? "greedy" : "seeded";
  h.attack = config.attack.has_value() ? config.attack->ToString() : "none";
  h.samples_per_prompt = config.samples_per_prompt;

  struct Task {
    int prompt_id;
    int sample_id;
    Variant variant;
  };
  std::vector<Task> tasks;
  for (size_t p = 0; p < prompts.prompts.size(); ++p) {
    for (int s = 0; s < config.samples_per_prompt; ++s) {
      const int sample_id = static_cast<int>(p) * config.samples_per_prompt + s;
      for (Variant v : config.variants) {
        tasks.push_back({static_cast<int>(p), sample_id, v});
      }
    }
  }
  run.records.resize(tasks.size());
  const auto work = [&](size_t i) {
    const Task& t = tasks[i];
    run.records[i] = RunOne(prompts.prompts[t.prompt_id], t.prompt_id,
                            t.sample_id, t.variant, config);
  };
  int threads = std::max(1, config.threads);
  if (!model_.SharedAcrossSessions()) threads = 1;
  threads = std::min<int>(threads, static_cast<int>(tasks.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (size_t i = next++; i < tasks.size(); i = next++) work(i);
      });
    }
    for (std::thread& t : pool) t.join();
  }
  return run;
}

absl::StatusOr<Metrics> ComputeMetrics(const std::vector<RunRecord>& records,
                                       int min_sentences) {
  Metrics m;
  m.min_sentences = min_sentences;
  for (const RunRecord& r : records) {
    if (!r.error.empty()) {
      ++m.excluded_errors;
      continue;
    }
    if (r.sentence_count < min_sentences) {
      ++m.excluded_short;
      continue;
    }
    ++m.included;
    if (r.ground_truth) {
      r.decision ? ++m.tp : ++m.fn;
    } else {
      r.decision ? ++m.fp : ++m.tn;
    }
  }
  if (m.included == 0) {
    return absl::FailedPreconditionError(absl::StrCat(
        "no records left after the filter sentence_count >= ", min_sentences,
        " (", m.excluded_short, " too short, ", m.excluded_errors,
        " failed)"));
  }
  m.tp_all = Ratio(m.tp, m.included);
  m.tn_all = Ratio(m.tn, m.included);
  m.fp_all = Ratio(m.fp, m.included);
  m.fn_all = Ratio(m.fn, m.included);
  m.tpr = Ratio(m.tp, m.tp + m.fn);
  m.fnr = Ratio(m.fn, m.tp + m.fn);
  m.tnr = Ratio(m.tn, m.tn + m.fp);
  m.fpr = Ratio(m.fp, m.tn + m.fp);
  return m;
}

std::optional<double> KeySurvivalRate(const std::vector<RunRecord>& records) {
  long compared = 0;
  long survived = 0;
  for (const RunRecord& r : records) {
    if (!r.error.empty()) continue;
    compared += r.keys_compared;
    survived += r.keys_survived;
  }
  if (compared == 0) return std::nullopt;
  return static_cast<double>(survived) / static_cast<double>(compared);
}

std::vector<RunRecord> FilterVariants(const std::vector<RunRecord>& records,
                                      const std::vector<Variant>& variants) {
  std::vector<RunRecord> out;
  for (const RunRecord& r : records) {
    if (std::find(variants.begin(), variants.end(), r.variant) !=
        variants.end()) {
      out.push_back(r);
    }
  }
  return out;
}

std::string FormatRecordsFile(const EvalRun& run) {
  std::string out = Dump(HeaderToJson(run.header));
  out.push_back('\n');
  for (const RunRecord& r : run.records) {
    out += Dump(RecordToJson(r));
    out.push_back('\n');
  }
  return out;
}

absl::StatusOr<EvalRun> ParseRecordsFile(std::string_view text) {
  EvalRun run;
  bool have_header = false;
  size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (StripAsciiWhitespace(line).empty()) continue;
    const json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (!j.is_object() || !j.contains("type")) {
      return absl::DataLossError(
          absl::StrCat("records file line ", line_no, ": not a record"));
    }
    std::string type;
    absl::Status s = Field(j, "type", &type);
    if (!s.ok()) return s;
    if (type == "header") {
      RunHeader& h = run.header;
      std::string mode;
      for (absl::Status f :
           {Field(j, "schema", &h.schema),
            Field(j, "artifact_version", &h.artifact_version),
            Field(j, "protocol_version", &h.protocol_version),
            Field(j, "seed", &h.seed), Field(j, "alpha", &h.alpha),
            Field(j, "acrostic_mode", &mode),
            Field(j, "classifier", &h.classifier),
            Field(j, "label_table", &h.label_table),
            Field(j, "seed_terms", &h.seed_terms),
            Field(j, "abbreviations", &h.abbreviations),
            Field(j, "lexicon", &h.lexicon), Field(j, "model", &h.model),
            Field(j, "prompts", &h.prompts),
            Field(j, "acrostic_bias", &h.acrostic_bias),
            Field(j, "sensor_bias", &h.sensor_bias),
            Field(j, "max_sentences", &h.max_sentences),
            Field(j, "sampling", &h.sampling), Field(j, "attack", &h.attack),
            Field(j, "samples_per_prompt", &h.samples_per_prompt)}) {
        if (!f.ok()) return f;
      }
      absl::StatusOr<AcrosticMode> parsed = ParseAcrosticMode(mode);
      if (!parsed.ok()) return parsed.status();
      h.mode = *parsed;
      have_header = true;
    } else if (type == "record") {
      if (!have_header) {
        return absl::DataLossError("records file: record before header");
      }
      RunRecord r;
      std::string variant;
      for (absl::Status f :
           {Field(j, "sample_id", &r.sample_id),
            Field(j, "prompt_id", &r.prompt_id), Field(j, "variant", &variant),
            Field(j, "attack", &r.attack),
            Field(j, "ground_truth", &r.ground_truth), Field(j, "seed", &r.seed),
            Field(j, "sentence_count", &r.sentence_count), Field(j, "n", &r.n),
            Field(j, "k", &r.k), Field(j, "z", &r.stouffer_z),
            Field(j, "confidence", &r.confidence),
            Field(j, "confidence_pmf", &r.confidence_pmf),
            Field(j, "confidence_tail", &r.confidence_tail),
            Field(j, "decision", &r.decision),
            Field(j, "keys_compared", &r.keys_compared),
            Field(j, "keys_survived", &r.keys_survived),
            Field(j, "error", &r.error)}) {
        if (!f.ok()) return f;
      }
      absl::StatusOr<Variant> v = ParseVariant(variant);
      if (!v.ok()) return v.status();
      r.variant = *v;
      run.records.push_back(std::move(r));
    } else {
      return absl::DataLossError(absl::StrCat("records file line ", line_no,
                                              ": unknown type '", type, "'"));
    }
  }
  if (!have_header) return absl::DataLossError("records file has no header");
  return run;
}

absl::StatusOr<std::string> FormatTable(const EvalRun& run, int min_sentences) {
  std::vector<Variant> watermarked;
  for (const RunRecord& r : run.records) {
    if (r.variant != Variant::kBase &&
        std::find(watermarked.begin(), watermarked.end(), r.variant) ==
            watermarked.end()) {
      watermarked.push_back(r.variant);
    }
  }
  std::sort(watermarked.begin(), watermarked.end());
  if (watermarked.empty()) watermarked.push_back(Variant::kBase);

  std::string out = absl::StrFormat(
      "# attack: %s; replies with >= %d sentences; alpha %.4g\n"
      "# decision threshold (1 - alpha): %.4g\n",
      run.header.attack, min_sentences, run.header.alpha,
      1.0 - run.header.alpha);
  absl::StrAppend(&out,
                  absl::StrFormat("%-14s %7s %6s %6s %6s %6s   %6s %6s\n",
                                  "variant", "replies", "TP", "TN", "FP", "FN",
                                  "TPR", "FPR"));
  for (Variant v : watermarked) {
    const std::vector<RunRecord> rows =
        FilterVariants(run.records, {Variant::kBase, v});
    absl::StatusOr<Metrics> m = ComputeMetrics(rows, min_sentences);
    if (!m.ok()) return m.status();
    absl::StrAppend(
        &out, absl::StrFormat("%-14s %7d %6.3f %6.3f %6.3f %6.3f   %6.3f %6.3f\n",
                              ToAbsl(VariantName(v)), m->included, m->tp_all,
                              m->tn_all, m->fp_all, m->fn_all, m->tpr, m->fpr));
  }
  std::vector<RunRecord> marked;
  for (const RunRecord& r : run.records) {
    if (r.ground_truth) marked.push_back(r);
  }
  if (const std::optional<double> survival = KeySurvivalRate(marked)) {
    absl::StrAppend(&out, absl::StrFormat("# key survival: %.4f\n", *survival));
  }
  return out;
}

std::string FormatPlotData(const EvalRun& run) {
  std::string out =
      "sample_id,prompt_id,variant,attacked,sentence_count,confidence,"
      "decision,ground_truth\n";
  for (const RunRecord& r : run.records) {
    absl::StrAppend(&out,
                    absl::StrFormat("%d,%d,%s,%d,%d,%.17g,%d,%d\n", r.sample_id,
                                    r.prompt_id, ToAbsl(VariantName(r.variant)),
                                    r.attack != "none" ? 1 : 0,
                                    r.sentence_count, r.confidence,
                                    r.decision ? 1 : 0, r.ground_truth ? 1 : 0));
  }
  return out;
}

}  // namespace stylomark
