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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "nlohmann/json.hpp"
#include "stylomark/attacks.h"
#include "stylomark/builtin_data.h"
#include "stylomark/classifier.h"
#include "stylomark/detector.h"
#include "stylomark/eval.h"
#include "stylomark/generator.h"
#include "stylomark/keygen.h"
#include "stylomark/label_table.h"
#include "stylomark/lexicon.h"
#include "stylomark/mock_lm.h"
#include "stylomark/remote_lm.h"
#include "stylomark/segmenter.h"
#include "stylomark/text_util.h"
#include "stylomark/version.h"

#ifndef STYLOMARK_DEFAULT_DATA_DIR
#define STYLOMARK_DEFAULT_DATA_DIR "data"
#endif

namespace stylomark::cli {
namespace {

// Options excluded from config files and resolved-config output.
bool IsControlOption(const CLI::Option* opt) {
  return opt->check_lname("help") || opt->check_lname("config") ||
         opt->check_lname("config-out") || opt->check_lname("version");
}

std::string LongName(const CLI::Option* opt) {
  std::string name = opt->get_name(false, true);
  if (name.rfind("--", 0) == 0) name.erase(0, 2);
  return name;
}

std::string DataDir() {
  if (const char* dir = std::getenv("STYLOMARK_DATA_DIR"); dir && *dir) {
    return dir;
  }
  return STYLOMARK_DEFAULT_DATA_DIR;
}

std::string DefaultLexiconPath() {
  if (const char* path = std::getenv("STYLOMARK_NORMS"); path && *path) {
    return path;
  }
  return DataDir() + "/norms/sensorimotor_norms_standin.csv";
}

// Settings shared by every subcommand.
struct Common {
  std::string lexicon;
  std::string columns;
  std::string labels;
  std::string seeds;
  std::string classifier = "builtin";
  std::string model = "mock";
  std::string corpus;
  int min_corpus_tokens = 500;
  int parallelism = 1;
  std::string config_out;
};

struct EmbedArgs {
  std::string prompt;
  double bias_acrostic = 8.0;
  double bias_sensor = 3.0;
  uint64_t seed = 0;
  int max_sentences = 25;
  int max_tokens = 1200;
  std::string sampling = "seeded";
  std::string out;
  std::string trace;
};

struct DetectArgs {
  std::string in;
  double alpha = 0.05;
  std::string acrostic_mode = "pmf";
  std::string report;
  bool json = false;
};

struct AttackArgs {
  std::string in;
  std::string kind;
  uint64_t seed = 0;
  std::string pivot = "es";
  std::string translator;
  std::string transcripts;
  std::string out;
};

struct EvalArgs {
  std::string prompts;
  std::string variants = "both";
  std::string attack = "none";
  uint64_t seed = 0;
  int samples = 1;
  int threads = 1;
  int min_sentences = 3;
  double alpha = 0.05;
  std::string acrostic_mode = "pmf";
  double bias_acrostic = 8.0;
  double bias_sensor = 3.0;
  int max_sentences = 25;
  std::string sampling = "seeded";
  std::string translator;
  std::string transcripts;
  std::string out;
  std::string table;
  std::string plot;
};

struct StatsArgs {
  std::string out;
};

void AddCommon(CLI::App* app, Common& c) {
  app->add_option("--lexicon", c.lexicon,
                  "Sensorimotor norms file (default: $STYLOMARK_NORMS or the "
                  "stand-in under the data directory)");
  app->add_option("--columns", c.columns, "Column mapping file for --lexicon");
  app->add_option("--labels", c.labels, "Label table TSV (default: builtin)");
  app->add_option("--seeds", c.seeds, "Seed terms TSV (default: builtin)");
  app->add_option("--classifier", c.classifier,
                  "'builtin' or a classification service URL");
  app->add_option("--model", c.model, "'mock' or a language model service URL");
  app->add_option("--corpus", c.corpus,
                  "Training text for the mock model (default: builtin)");
  app->add_option("--min-corpus-tokens", c.min_corpus_tokens,
                  "Smallest accepted mock corpus");
  app->add_option("--parallelism", c.parallelism,
                  "Concurrent classifier calls");
  app->add_option("--config-out", c.config_out,
                  "Where to write the resolved configuration");
}

// Loaded models and tables for one invocation.
struct Resources {
  std::optional<NormLexicon> lexicon;
  std::optional<LabelTable> table;
  std::unique_ptr<Classifier> classifier;
  std::unique_ptr<KeyDeriver> keys;
  std::unique_ptr<LanguageModel> model;
};

absl::Status LoadLexicon(const Common& c, Resources& r, std::ostream& err) {
  ColumnMap columns = ColumnMap::Lancaster();
  if (!c.columns.empty()) {
    absl::StatusOr<std::string> text = ReadFile(c.columns);
    if (!text.ok()) return text.status();
    absl::StatusOr<ColumnMap> parsed = ColumnMap::Parse(*text);
    if (!parsed.ok()) return parsed.status();
    columns = *std::move(parsed);
  }
  const std::string path = c.lexicon.empty() ? DefaultLexiconPath() : c.lexicon;
  absl::StatusOr<NormLexicon> lexicon = NormLexicon::Load(path, columns);
  if (!lexicon.ok()) return lexicon.status();
  if (!lexicon->warnings().empty()) {
    err << "stylomark: " << path << ": " << lexicon->warnings().size()
        << " ingest warnings (first: line " << lexicon->warnings()[0].line
        << ": " << lexicon->warnings()[0].message << ")\n";
  }
  r.lexicon.emplace(*std::move(lexicon));
  return absl::OkStatus();
}

absl::Status LoadKeys(const Common& c, Resources& r) {
  if (c.labels.empty() && c.seeds.empty()) {
    r.table.emplace(LabelTable::Builtin());
  } else {
    absl::StatusOr<LabelTable> table =
        c.labels.empty()
            ? absl::StatusOr<LabelTable>(absl::InvalidArgumentError(
                  "--seeds requires --labels"))
            : LabelTable::Load(c.labels, c.seeds);
    if (!table.ok()) return table.status();
    r.table.emplace(*std::move(table));
  }
  if (c.classifier == "builtin") {
    r.classifier = std::make_unique<BuiltinClassifier>(*r.table);
  } else {
    absl::StatusOr<std::unique_ptr<RemoteClassifier>> remote =
        RemoteClassifier::Connect(c.classifier);
    if (!remote.ok()) return remote.status();
    r.classifier = *std::move(remote);
  }
  r.keys = std::make_unique<KeyDeriver>(*r.table, *r.classifier);
  return absl::OkStatus();
}

absl::Status LoadModel(const Common& c, Resources& r) {
  if (c.model == "mock") {
    std::string corpus = std::string(builtin::mock_corpus());
    if (!c.corpus.empty()) {
      absl::StatusOr<std::string> text = ReadFile(c.corpus);
      if (!text.ok()) return text.status();
      corpus = *std::move(text);
    }
    MockLmOptions options;
    options.min_tokens = static_cast<size_t>(std::max(0, c.min_corpus_tokens));
    absl::StatusOr<MockLanguageModel> mock =
        MockLanguageModel::Build(corpus, options);
    if (!mock.ok()) return mock.status();
    r.model = std::make_unique<MockLanguageModel>(*std::move(mock));
    return absl::OkStatus();
  }
  absl::StatusOr<std::unique_ptr<RemoteLanguageModel>> remote =
      RemoteLanguageModel::Connect(c.model);
  if (!remote.ok()) return remote.status();
  r.model = *std::move(remote);
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadInput(const std::string& path,
                                      std::istream& in) {
  if (path.empty()) return absl::InvalidArgumentError("--in is required");
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
  }
  return ReadFile(path);
}

absl::StatusOr<Sampling> ParseSampling(const std::string& name) {
  if (name == "seeded") return Sampling::kSeeded;
  if (name == "greedy") return Sampling::kGreedy;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown sampling '", name, "'; expected seeded or greedy"));
}

int Fail(std::ostream& err, const absl::Status& status) {
  err << "stylomark: " << status.ToString() << "\n";
  return kExitFailure;
}

// Appends config-file settings for options not given on the command line.
// Returns the extra arguments; conflicts are reported on `err`.
absl::StatusOr<std::vector<std::string>> ConfigArgs(const std::string& path,
                                                    CLI::App* sub,
                                                    std::ostream& err) {
  std::ifstream file(path);
  if (!file) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_config(file);
  } catch (const CLI::Error& e) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": ", e.what()));
  }
  std::vector<std::string> args;
  for (const CLI::ConfigItem& item : items) {
    const std::string section =
        item.parents.empty() ? "common" : item.parents.front();
    if (item.name == "++" || item.name == "--") continue;  // section markers
    if (section != "common" && section != "default" &&
        section != sub->get_name()) {
      continue;
    }
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr || IsControlOption(opt)) {
      if (section == sub->get_name()) {
        return absl::InvalidArgumentError(absl::StrCat(
            path, ": unknown key '", key, "' in [", section, "]"));
      }
      continue;
    }
    if (opt->count() > 0) {
      if (opt->results() != item.inputs) {
        err << "stylomark: config " << path << ": " << key << " = "
            << CLI::detail::join(item.inputs, " ")
            << " conflicts with the command line; using "
            << CLI::detail::join(opt->results(), " ") << "\n";
      }
      continue;
    }
    if (opt->get_expected_min() == 0) {
      if (!item.inputs.empty() && CLI::detail::to_flag_value(item.inputs[0]) > 0) {
        args.push_back("--" + key);
      }
      continue;
    }
    args.push_back("--" + key);
    for (const std::string& v : item.inputs) args.push_back(v);
  }
  return args;
}

std::string ResolvedConfig(const CLI::App* sub) {
  std::string out = absl::StrCat("# stylomark ", kVersion,
                                 " resolved configuration\n[",
                                 sub->get_name(), "]\n");
  for (const CLI::Option* opt : sub->get_options()) {
    if (IsControlOption(opt)) continue;
    std::string value;
    if (opt->count() > 0) {
      value = CLI::detail::join(opt->results(), " ");
    } else if (opt->check_lname("lexicon")) {
      value = DefaultLexiconPath();
    } else {
      value = opt->get_default_str();
    }
    if (opt->get_expected_min() != 0 && value.empty()) continue;
    if (opt->get_expected_min() == 0 && value.empty()) value = "false";
    absl::StrAppend(&out, LongName(opt), " = \"", value, "\"\n");
  }
  return out;
}

absl::Status WriteResolvedConfig(const CLI::App* sub, const Common& c,
                                 const std::string& primary_output) {
  std::string path = c.config_out;
  if (path.empty() && !primary_output.empty() && primary_output != "-") {
    path = primary_output + ".config.ini";
  }
  if (path.empty()) return absl::OkStatus();
  return WriteFile(path, ResolvedConfig(sub));
}

int RunEmbed(const Common& c, const EmbedArgs& a, std::ostream& out,
             std::ostream& err) {
  Resources r;
  for (absl::Status s :
       {LoadLexicon(c, r, err), LoadKeys(c, r), LoadModel(c, r)}) {
    if (!s.ok()) return Fail(err, s);
  }
  if (a.prompt.empty()) {
    return Fail(err, absl::InvalidArgumentError("--prompt is required"));
  }
  EmbedConfig config;
  config.acrostic_bias = a.bias_acrostic;
  config.sensor_bias = a.bias_sensor;
  config.seed = a.seed;
  config.max_sentences = a.max_sentences;
  config.max_tokens = a.max_tokens;
  absl::StatusOr<Sampling> sampling = ParseSampling(a.sampling);
  if (!sampling.ok()) return Fail(err, sampling.status());
  config.sampling = *sampling;

  const Embedder embedder(*r.model, *r.keys, *r.lexicon);
  const GenerationResult result = embedder.Generate(a.prompt, config);
  if (!result.status.ok()) return Fail(err, result.status);

  std::string trace_path = a.trace;
  if (trace_path.empty() && !a.out.empty()) trace_path = a.out + ".trace.jsonl";
  if (!trace_path.empty()) {
    absl::Status s =
        WriteFile(trace_path, result.trace.ToJsonl(r.model->vocabulary()));
    if (!s.ok()) return Fail(err, s);
  }
  if (!a.out.empty()) {
    absl::Status s = WriteFile(a.out, result.text + "\n");
    if (!s.ok()) return Fail(err, s);
  }
  out << result.text << "\n";
  return kExitNotWatermarked;
}

int RunDetect(const Common& c, const DetectArgs& a, std::istream& in,
              std::ostream& out, std::ostream& err) {
  Resources r;
  for (absl::Status s : {LoadLexicon(c, r, err), LoadKeys(c, r)}) {
    if (!s.ok()) return Fail(err, s);
  }
  absl::StatusOr<std::string> text = ReadInput(a.in, in);
  if (!text.ok()) return Fail(err, text.status());
  DetectorConfig config;
  config.alpha = a.alpha;
  config.parallelism = c.parallelism;
  absl::StatusOr<AcrosticMode> mode = ParseAcrosticMode(a.acrostic_mode);
  if (!mode.ok()) return Fail(err, mode.status());
  config.mode = *mode;

  const Detector detector(*r.lexicon, *r.keys);
  absl::StatusOr<DetectionReport> report = detector.Detect(*text, config);
  if (!report.ok()) {
    if (IsInsufficientText(report.status())) {
      err << "stylomark: " << ToStd(report.status().message()) << "\n";
      return kExitInsufficientText;
    }
    return Fail(err, report.status());
  }
  if (!a.report.empty()) {
    absl::Status s = WriteFile(a.report, report->ToJson() + "\n");
    if (!s.ok()) return Fail(err, s);
  }
  out << (a.json ? report->ToJson() : report->Summary()) << "\n";
  return report->watermarked ? kExitWatermarked : kExitNotWatermarked;
}

// Builds the translator chain for cyclic translation, if configured.
struct TranslatorChain {
  std::unique_ptr<TranscriptCache> cache;
  std::unique_ptr<HttpTranslator> http;
  std::unique_ptr<CachedTranslator> cached;
  Translator* get() const {
    if (cached) return cached.get();
    return http.get();
  }
};

absl::StatusOr<std::unique_ptr<TranslatorChain>> MakeTranslator(
    const std::string& endpoint, const std::string& transcripts) {
  auto chain = std::make_unique<TranslatorChain>();
  if (!endpoint.empty()) chain->http = std::make_unique<HttpTranslator>(endpoint);
  if (!transcripts.empty()) {
    absl::StatusOr<std::unique_ptr<TranscriptCache>> cache =
        TranscriptCache::Open(transcripts);
    if (!cache.ok()) return cache.status();
    chain->cache = *std::move(cache);
    chain->cached =
        std::make_unique<CachedTranslator>(chain->cache.get(), chain->http.get());
  }
  return chain;
}

int RunAttack(const Common& c, const AttackArgs& a, std::istream& in,
              std::ostream& out, std::ostream& err) {
  Resources r;
  if (absl::Status s = LoadLexicon(c, r, err); !s.ok()) return Fail(err, s);
  absl::StatusOr<std::string> text = ReadInput(a.in, in);
  if (!text.ok()) return Fail(err, text.status());
  if (a.kind.empty()) {
    return Fail(err, absl::InvalidArgumentError("--kind is required"));
  }
  absl::StatusOr<AttackSpec> spec = AttackSpec::Parse(a.kind);
  if (!spec.ok()) return Fail(err, spec.status());
  spec->seed = a.seed;
  if (spec->kind == AttackKind::kCyclicTranslation && a.kind.find(':') ==
                                                         std::string::npos) {
    spec->pivot = a.pivot;
  }
  absl::StatusOr<std::unique_ptr<TranslatorChain>> translator =
      MakeTranslator(a.translator, a.transcripts);
  if (!translator.ok()) return Fail(err, translator.status());
  const Attacker attacker(*r.lexicon, (*translator)->get());
  absl::StatusOr<AttackOutcome> outcome =
      attacker.Apply(StripAsciiWhitespace(*text), *spec);
  if (!outcome.ok()) return Fail(err, outcome.status());
  for (const std::string& step : outcome->audit) {
    err << "stylomark: intermediate: " << step << "\n";
  }
  if (!a.out.empty()) {
    absl::Status s = WriteFile(a.out, outcome->text + "\n");
    if (!s.ok()) return Fail(err, s);
  }
  out << outcome->text << "\n";
  return kExitNotWatermarked;
}

int RunEval(const Common& c, const EvalArgs& a, std::ostream& out,
            std::ostream& err) {
  Resources r;
  for (absl::Status s :
       {LoadLexicon(c, r, err), LoadKeys(c, r), LoadModel(c, r)}) {
    if (!s.ok()) return Fail(err, s);
  }
  PromptSet prompts = PromptSet::Builtin();
  if (!a.prompts.empty()) {
    absl::StatusOr<PromptSet> loaded = PromptSet::Load(a.prompts);
    if (!loaded.ok()) return Fail(err, loaded.status());
    prompts = *std::move(loaded);
  }
  EvalConfig config;
  config.embed.acrostic_bias = a.bias_acrostic;
  config.embed.sensor_bias = a.bias_sensor;
  config.embed.max_sentences = a.max_sentences;
  absl::StatusOr<Sampling> sampling = ParseSampling(a.sampling);
  if (!sampling.ok()) return Fail(err, sampling.status());
  config.embed.sampling = *sampling;
  config.detect.alpha = a.alpha;
  config.detect.parallelism = c.parallelism;
  absl::StatusOr<AcrosticMode> mode = ParseAcrosticMode(a.acrostic_mode);
  if (!mode.ok()) return Fail(err, mode.status());
  config.detect.mode = *mode;
  absl::StatusOr<std::vector<Variant>> variants = ParseVariantList(a.variants);
  if (!variants.ok()) return Fail(err, variants.status());
  config.variants = *variants;
  absl::StatusOr<AttackSpec> attack = AttackSpec::Parse(a.attack);
  if (!attack.ok()) return Fail(err, attack.status());
  if (attack->kind != AttackKind::kNone) config.attack = *attack;
  config.seed = a.seed;
  config.samples_per_prompt = a.samples;
  config.threads = a.threads;

  absl::StatusOr<std::unique_ptr<TranslatorChain>> translator =
      MakeTranslator(a.translator, a.transcripts);
  if (!translator.ok()) return Fail(err, translator.status());
  const Attacker attacker(*r.lexicon, (*translator)->get());
  const EvalHarness harness(*r.model, *r.lexicon, *r.keys, attacker);
  absl::StatusOr<EvalRun> run = harness.Run(prompts, config);
  if (!run.ok()) return Fail(err, run.status());

  if (!a.out.empty()) {
    absl::Status s = WriteFile(a.out, FormatRecordsFile(*run));
    if (!s.ok()) return Fail(err, s);
  }
  if (!a.plot.empty()) {
    absl::Status s = WriteFile(a.plot, FormatPlotData(*run));
    if (!s.ok()) return Fail(err, s);
  }
  int failed = 0;
  for (const RunRecord& rec : run->records) failed += !rec.error.empty();
  if (failed > 0) {
    err << "stylomark: " << failed << " of " << run->records.size()
        << " samples failed; see the records file\n";
  }
  if (run->records.empty()) {
    out << "no prompts; no records\n";
    return kExitNotWatermarked;
  }
  absl::StatusOr<std::string> table = FormatTable(*run, a.min_sentences);
  if (!table.ok()) return Fail(err, table.status());
  if (!a.table.empty()) {
    absl::Status s = WriteFile(a.table, *table);
    if (!s.ok()) return Fail(err, s);
  }
  out << *table;
  return kExitNotWatermarked;
}

int RunLexiconStats(const Common& c, const StatsArgs& a, std::ostream& out,
                    std::ostream& err) {
  Resources r;
  if (absl::Status s = LoadLexicon(c, r, err); !s.ok()) return Fail(err, s);
  const NormLexicon& lex = *r.lexicon;
  std::string report = nlohmann::json{{"type", "summary"},
                                      {"entries", lex.size()},
                                      {"warnings", lex.warnings().size()},
                                      {"fingerprint", lex.fingerprint()}}
                           .dump() +
                       "\n";
  for (SensorCategory cat : AllSensorCategories()) {
    if (!lex.MatchBandOk(cat)) {
      err << "stylomark: warning: match fraction for "
          << SensorCategoryName(cat) << " is "
          << lex.MatchFraction(cat) << ", outside [" << kMatchBandLow << ", "
          << kMatchBandHigh << "]\n";
    }
    report += nlohmann::json{{"type", "category"},
                             {"name", std::string(SensorCategoryName(cat))},
                             {"mu", lex.Stats(cat).mean},
                             {"sigma", lex.Stats(cat).stddev},
                             {"tau", lex.MatchThreshold(cat)},
                             {"match_fraction", lex.MatchFraction(cat)}}
                  .dump() +
              "\n";
  }
  if (!a.out.empty()) {
    absl::Status s = WriteFile(a.out, report);
    if (!s.ok()) return Fail(err, s);
  }
  out << report;
  return kExitNotWatermarked;
}

std::string VersionText() {
  return absl::StrCat("stylomark ", kVersion, "\nlabel table ",
                      LabelTable::Builtin().version(), " (seed terms ",
                      LabelTable::Builtin().seeds_version(),
                      ")\nabbreviations ", AbbreviationList::Builtin().version(),
                      "\nprotocol ", kProtocolVersion, "\nrecords ",
                      kRecordSchema, "\n");
}

}  // namespace

int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Stylometric sentence-keyed watermarking", "stylomark"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version,
               "Print artifact, label-table and protocol versions");

  Common common;
  EmbedArgs embed;
  DetectArgs detect;
  AttackArgs attack;
  EvalArgs eval;
  StatsArgs stats;
  std::string config_path;

  CLI::App* embed_cmd = app.add_subcommand("embed", "Generate watermarked text");
  CLI::App* detect_cmd = app.add_subcommand("detect", "Test a text for the watermark");
  CLI::App* attack_cmd = app.add_subcommand("attack", "Apply a removal attack");
  CLI::App* eval_cmd = app.add_subcommand("eval", "Run the evaluation harness");
  CLI::App* stats_cmd =
      app.add_subcommand("lexicon-stats", "Report per-category norm statistics");
  for (CLI::App* sub : {embed_cmd, detect_cmd, attack_cmd, eval_cmd, stats_cmd}) {
    AddCommon(sub, common);
    sub->add_option("--config", config_path,
                    "INI file with [common] and per-subcommand sections; "
                    "command-line flags win");
  }

  embed_cmd->add_option("--prompt", embed.prompt, "Prompt text");
  embed_cmd->add_option("--bias-acrostic", embed.bias_acrostic,
                        "Log-space boost for the first word");
  embed_cmd->add_option("--bias-sensor", embed.bias_sensor,
                        "Log-space boost for other words");
  embed_cmd->add_option("--seed", embed.seed, "Sampling seed");
  embed_cmd->add_option("--max-sentences", embed.max_sentences);
  embed_cmd->add_option("--max-tokens", embed.max_tokens);
  embed_cmd->add_option("--sampling", embed.sampling, "seeded or greedy");
  embed_cmd->add_option("--out", embed.out, "Also write the text here");
  embed_cmd->add_option("--trace", embed.trace,
                        "Trace file (default: <out>.trace.jsonl)");

  detect_cmd->add_option("--in", detect.in, "Input file, or - for stdin");
  detect_cmd->add_option("--alpha", detect.alpha, "Significance level");
  detect_cmd->add_option("--acrostic-mode", detect.acrostic_mode, "pmf or tail");
  detect_cmd->add_option("--report", detect.report, "Write the JSON report here");
  detect_cmd->add_flag("--json", detect.json, "Print the JSON report");

  attack_cmd->add_option("--in", attack.in, "Input file, or - for stdin");
  attack_cmd->add_option(
      "--kind", attack.kind,
      "pseudo-translation:F, synonym-swap:F, drop-sentences:F, "
      "shuffle-sentences or cyclic-translation[:PIVOT]");
  attack_cmd->add_option("--seed", attack.seed);
  attack_cmd->add_option("--pivot", attack.pivot, "Pivot language code");
  attack_cmd->add_option("--translator", attack.translator,
                         "Translation service URL");
  attack_cmd->add_option("--transcripts", attack.transcripts,
                         "Translation transcript cache (JSONL)");
  attack_cmd->add_option("--out", attack.out);

  eval_cmd->add_option("--prompts", eval.prompts,
                       "Prompt file (default: builtin set)");
  eval_cmd->add_option("--variants", eval.variants,
                       "Comma list of sensor-only, acrostic-only, both; base "
                       "is always run");
  eval_cmd->add_option("--attack", eval.attack, "Attack spec or none");
  eval_cmd->add_option("--seed", eval.seed);
  eval_cmd->add_option("--samples", eval.samples, "Samples per prompt");
  eval_cmd->add_option("--threads", eval.threads);
  eval_cmd->add_option("--min-sentences", eval.min_sentences,
                       "Replies shorter than this are excluded from metrics");
  eval_cmd->add_option("--alpha", eval.alpha);
  eval_cmd->add_option("--acrostic-mode", eval.acrostic_mode);
  eval_cmd->add_option("--bias-acrostic", eval.bias_acrostic);
  eval_cmd->add_option("--bias-sensor", eval.bias_sensor);
  eval_cmd->add_option("--max-sentences", eval.max_sentences);
  eval_cmd->add_option("--sampling", eval.sampling);
  eval_cmd->add_option("--translator", eval.translator);
  eval_cmd->add_option("--transcripts", eval.transcripts);
  eval_cmd->add_option("--out", eval.out, "Records file (JSONL)");
  eval_cmd->add_option("--table", eval.table, "Also write the table here");
  eval_cmd->add_option("--plot", eval.plot, "Per-sample CSV for plotting");

  stats_cmd->add_option("--out", stats.out, "Also write the report here");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);  // CLI11 takes reversed arguments
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // subcommand --help
      for (CLI::App* sub : app.get_subcommands()) out << sub->help();
      if (app.get_subcommands().empty()) out << app.help();
      return 0;
    }
    err << "stylomark: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  }
  if (show_version) {
    out << VersionText();
    return 0;
  }
  if (app.get_subcommands().empty()) {
    out << app.help();
    return 0;
  }
  CLI::App* sub = app.get_subcommands().front();

  if (!config_path.empty()) {
    absl::StatusOr<std::vector<std::string>> extra =
        ConfigArgs(config_path, sub, err);
    if (!extra.ok()) {
      err << "stylomark: " << ToStd(extra.status().message()) << "\n";
      return kExitUsage;
    }
    if (!extra->empty()) {
      std::vector<std::string> merged(argv + 1, argv + argc);
      merged.insert(merged.end(), extra->begin(), extra->end());
      std::reverse(merged.begin(), merged.end());
      try {
        app.clear();
        app.parse(merged);
      } catch (const CLI::ParseError& e) {
        err << "stylomark: config " << config_path << ": " << e.what() << "\n";
        return kExitUsage;
      }
    }
  }

  std::string primary;
  if (sub == embed_cmd) primary = embed.out;
  if (sub == detect_cmd) primary = detect.report;
  if (sub == attack_cmd) primary = attack.out;
  if (sub == eval_cmd) primary = eval.out;
  if (sub == stats_cmd) primary = stats.out;
  if (absl::Status s = WriteResolvedConfig(sub, common, primary); !s.ok()) {
    return Fail(err, s);
  }

  if (sub == embed_cmd) return RunEmbed(common, embed, out, err);
  if (sub == detect_cmd) return RunDetect(common, detect, in, out, err);
  if (sub == attack_cmd) return RunAttack(common, attack, in, out, err);
  if (sub == eval_cmd) return RunEval(common, eval, out, err);
  return RunLexiconStats(common, stats, out, err);
}

}  // namespace stylomark::cli
