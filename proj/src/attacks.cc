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

#include "stylomark/attacks.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

#include "absl/strings/str_cat.h"
#include "nlohmann/json.hpp"
#include "stylomark/text_util.h"

namespace stylomark {
namespace {

using json = nlohmann::json;

constexpr std::string_view kFillers[] = {"thing", "matter", "way",  "part",
                                         "kind",  "place",  "time", "fact",
                                         "case",  "point"};

// Distinct random streams per attack so that specs sharing a seed do not
// share draws.
enum Stream : uint64_t {
  kPseudoStream = 1,
  kSwapStream = 2,
  kDropStream = 3,
  kShuffleStream = 4,
};

struct RewriteParams {
  double rate = 0.0;
  double first_word_scale = 1.0;
  bool use_filler = false;
  Stream stream = kPseudoStream;
};

bool Replaceable(std::string_view word) {
  if (word.empty() || !IsAsciiAlpha(word.front())) return false;
  return std::all_of(word.begin(), word.end(), [](char c) {
    return IsAsciiAlpha(c) || c == '-' || c == '\'';
  });
}

std::string MatchCase(std::string_view original, std::string word) {
  const bool all_upper =
      original.size() > 1 &&
      std::all_of(original.begin(), original.end(),
                  [](char c) { return !IsAsciiAlpha(c) || IsAsciiUpper(c); });
  if (all_upper) {
    for (char& c : word) c = AsciiUpper(c);
  } else if (!original.empty() && IsAsciiUpper(original.front())) {
    word[0] = AsciiUpper(word[0]);
  }
  return word;
}

// Splits a whitespace-free token into punctuation prefix, alphanumeric core
// and punctuation suffix.
void SplitToken(std::string_view token, std::string_view* prefix,
                std::string_view* core, std::string_view* suffix) {
  size_t first = token.size();
  size_t last = 0;
  size_t pos = 0;
  while (pos < token.size()) {
    size_t len = 0;
    const char32_t cp = DecodeUtf8(token, pos, &len);
    if (IsAlnumCodePoint(cp)) {
      if (first == token.size()) first = pos;
      last = pos + len;
    }
    pos += len;
  }
  if (first == token.size()) {
    *prefix = token;
    *core = *suffix = std::string_view();
    return;
  }
  *prefix = token.substr(0, first);
  *core = token.substr(first, last - first);
  *suffix = token.substr(last);
}

std::string RewriteWords(std::string_view text, uint64_t seed,
                         const RewriteParams& params,
                         const NormLexicon& lexicon) {
  if (params.rate <= 0.0) return std::string(text);
  const AbbreviationList& abbreviations = AbbreviationList::Builtin();
  std::mt19937_64 rng(MixSeed(seed, params.stream));
  const std::vector<Sentence> sentences = SplitSentences(text);

  std::string out;
  out.reserve(text.size() + text.size() / 4);
  size_t copied = 0;
  for (const Sentence& sentence : sentences) {
    out.append(text.substr(copied, sentence.begin - copied));
    bool first_word = true;
    size_t pos = sentence.begin;
    while (pos < sentence.end) {
      if (IsAsciiSpace(text[pos])) {
        out.push_back(text[pos++]);
        continue;
      }
      size_t end = pos;
      while (end < sentence.end && !IsAsciiSpace(text[end])) ++end;
      const std::string_view token = text.substr(pos, end - pos);
      pos = end;
      std::string_view prefix, core, suffix;
      SplitToken(token, &prefix, &core, &suffix);
      if (core.empty()) {
        out.append(token);
        continue;
      }
      const double rate =
          first_word ? params.rate * params.first_word_scale : params.rate;
      first_word = false;
      const double u = UnitFromBits(rng());
      const bool period_follows = !suffix.empty() && suffix.front() == '.';
      if (u >= rate ||
          (period_follows && abbreviations.Contains(absl::StrCat(ToAbsl(core), ".")))) {
        out.append(token);
        continue;
      }
      const auto acceptable = [&](std::string_view w) {
        return Replaceable(w) &&
               !(period_follows && abbreviations.Contains(absl::StrCat(ToAbsl(w), ".")));
      };
      std::string replacement;
      if (const NormEntry* entry = lexicon.Find(core)) {
        const NormEntry* neighbour =
            lexicon.NearestByRating(core, lexicon.DominantCategory(*entry));
        if (neighbour != nullptr && acceptable(neighbour->word)) {
          replacement = neighbour->word;
        }
      }
      if (replacement.empty() && params.use_filler) {
        const size_t pick = UniformIndex(rng, std::size(kFillers));
        replacement = std::string(kFillers[pick]);
      }
      if (replacement.empty()) {
        out.append(token);
        continue;
      }
      out.append(prefix);
      out.append(MatchCase(core, std::move(replacement)));
      out.append(suffix);
    }
    copied = sentence.end;
  }
  out.append(text.substr(copied));
  return out;
}

std::string JoinSentences(std::string_view text,
                          const std::vector<Sentence>& sentences,
                          const std::vector<int>& order) {
  std::string out;
  for (int i : order) {
    if (!out.empty()) out.push_back(' ');
    out.append(text.substr(sentences[i].begin,
                           sentences[i].end - sentences[i].begin));
  }
  return out;
}

}  // namespace

std::string_view AttackKindName(AttackKind kind) {
  switch (kind) {
    case AttackKind::kCyclicTranslation:
      return "cyclic-translation";
    case AttackKind::kPseudoTranslation:
      return "pseudo-translation";
    case AttackKind::kDropSentences:
      return "drop-sentences";
    case AttackKind::kShuffleSentences:
      return "shuffle-sentences";
    case AttackKind::kSynonymSwap:
      return "synonym-swap";
    case AttackKind::kNone:
      break;
  }
  return "none";
}

absl::StatusOr<AttackSpec> AttackSpec::Parse(std::string_view text) {
  AttackSpec spec;
  const size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? "" : text.substr(colon + 1);
  bool found = false;
  for (AttackKind kind :
       {AttackKind::kNone, AttackKind::kCyclicTranslation,
        AttackKind::kPseudoTranslation, AttackKind::kDropSentences,
        AttackKind::kShuffleSentences, AttackKind::kSynonymSwap}) {
    if (name == AttackKindName(kind)) {
      spec.kind = kind;
      found = true;
    }
  }
  if (!found) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown attack '", ToAbsl(name), "'"));
  }
  if (spec.kind == AttackKind::kCyclicTranslation) {
    if (!arg.empty()) spec.pivot = std::string(arg);
  } else if (!arg.empty()) {
    if (spec.kind == AttackKind::kNone ||
        spec.kind == AttackKind::kShuffleSentences) {
      return absl::InvalidArgumentError(
          absl::StrCat("attack '", ToAbsl(name), "' takes no parameter"));
    }
    const std::string value(arg);
    char* end = nullptr;
    spec.fraction = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0') {
      return absl::InvalidArgumentError(
          absl::StrCat("attack parameter '", value, "' is not a number"));
    }
  }
  absl::Status valid = spec.Validate();
  if (!valid.ok()) return valid;
  return spec;
}

std::string AttackSpec::ToString() const {
  switch (kind) {
    case AttackKind::kNone:
    case AttackKind::kShuffleSentences:
      return std::string(AttackKindName(kind));
    case AttackKind::kCyclicTranslation:
      return absl::StrCat(ToAbsl(AttackKindName(kind)), ":", pivot);
    default:
      return absl::StrCat(ToAbsl(AttackKindName(kind)), ":", fraction);
  }
}

absl::Status AttackSpec::Validate() const {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    return absl::InvalidArgumentError("attack fraction must lie in [0, 1]");
  }
  if (kind == AttackKind::kDropSentences && fraction >= 1.0) {
    return absl::InvalidArgumentError("drop fraction must be below 1");
  }
  if (kind == AttackKind::kCyclicTranslation && pivot.empty()) {
    return absl::InvalidArgumentError("cyclic translation needs a pivot");
  }
  return absl::OkStatus();
}

std::string PseudoTranslate(std::string_view text, uint64_t seed,
                            double intensity, const NormLexicon& lexicon) {
  RewriteParams params;
  params.rate = intensity;
  params.first_word_scale = 0.5;
  params.use_filler = true;
  params.stream = kPseudoStream;
  return RewriteWords(text, seed, params, lexicon);
}

std::string SynonymSwap(std::string_view text, uint64_t seed, double fraction,
                        const NormLexicon& lexicon) {
  RewriteParams params;
  params.rate = fraction;
  params.stream = kSwapStream;
  return RewriteWords(text, seed, params, lexicon);
}

std::vector<int> DroppedSentenceIndices(int sentence_count, double fraction,
                                        uint64_t seed) {
  const int drop = static_cast<int>(std::floor(fraction * sentence_count));
  std::vector<int> index(sentence_count);
  std::iota(index.begin(), index.end(), 0);
  std::mt19937_64 rng(MixSeed(seed, kDropStream));
  for (int i = 0; i < drop; ++i) {
    const int j = i + static_cast<int>(UniformIndex(rng, sentence_count - i));
    std::swap(index[i], index[j]);
  }
  index.resize(drop);
  std::sort(index.begin(), index.end());
  return index;
}

std::string DropSentences(std::string_view text, double fraction,
                          uint64_t seed) {
  const std::vector<Sentence> sentences = SplitSentences(text);
  const std::vector<int> dropped =
      DroppedSentenceIndices(static_cast<int>(sentences.size()), fraction, seed);
  if (dropped.empty()) return std::string(text);
  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(sentences.size()); ++i) {
    if (!std::binary_search(dropped.begin(), dropped.end(), i)) kept.push_back(i);
  }
  return JoinSentences(text, sentences, kept);
}

std::vector<int> SentencePermutation(int sentence_count, uint64_t seed) {
  std::vector<int> order(sentence_count);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(MixSeed(seed, kShuffleStream));
  for (int i = sentence_count - 1; i > 0; --i) {
    const int j = static_cast<int>(UniformIndex(rng, i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

std::string ShuffleSentences(std::string_view text, uint64_t seed) {
  const std::vector<Sentence> sentences = SplitSentences(text);
  if (sentences.size() < 2) return std::string(text);
  return JoinSentences(
      text, sentences,
      SentencePermutation(static_cast<int>(sentences.size()), seed));
}

absl::StatusOr<std::string> HttpTranslator::Translate(std::string_view text,
                                                      std::string_view source,
                                                      std::string_view target) {
  const json request = {{"text", std::string(text)},
                        {"source", std::string(source)},
                        {"target", std::string(target)}};
  absl::StatusOr<std::string> body = HttpPostJson(
      endpoint_, "", request.dump(-1, ' ', false, json::error_handler_t::replace),
      options_);
  if (!body.ok()) return body.status();
  const json reply = json::parse(*body, nullptr, /*allow_exceptions=*/false);
  if (!reply.is_object() || !reply.contains("text") ||
      !reply["text"].is_string()) {
    return ProtocolError("translation reply needs a 'text' string");
  }
  return reply["text"].get<std::string>();
}

absl::StatusOr<std::unique_ptr<TranscriptCache>> TranscriptCache::Open(
    const std::string& path) {
  std::unique_ptr<TranscriptCache> cache(new TranscriptCache(path));
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (StripAsciiWhitespace(line).empty()) continue;
    const json entry = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (!entry.is_object() || !entry.contains("key") ||
        !entry.contains("translation") || !entry["key"].is_string() ||
        !entry["translation"].is_string()) {
      return absl::DataLossError(
          absl::StrCat(path, " line ", line_no, ": malformed transcript"));
    }
    cache->entries_[entry["key"].get<std::string>()] =
        entry["translation"].get<std::string>();
  }
  return cache;
}

std::string TranscriptCache::Key(std::string_view text,
                                 std::string_view source,
                                 std::string_view target) {
  std::string material;
  material.append(source).push_back('\t');
  material.append(target).push_back('\t');
  material.append(text);
  return Sha256Hex(material);
}

std::optional<std::string> TranscriptCache::Lookup(
    std::string_view text, std::string_view source,
    std::string_view target) const {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = entries_.find(Key(text, source, target));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

absl::Status TranscriptCache::Store(std::string_view text,
                                    std::string_view source,
                                    std::string_view target,
                                    std::string_view translation) {
  const std::string key = Key(text, source, target);
  const json entry = {{"key", key},
                      {"source", std::string(source)},
                      {"target", std::string(target)},
                      {"text", std::string(text)},
                      {"translation", std::string(translation)}};
  std::lock_guard<std::mutex> lock(mu_);
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    return absl::PermissionDeniedError(absl::StrCat("cannot write ", path_));
  }
  out << entry.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path_));
  entries_[key] = std::string(translation);
  return absl::OkStatus();
}

size_t TranscriptCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

absl::StatusOr<std::string> CachedTranslator::Translate(
    std::string_view text, std::string_view source, std::string_view target) {
  if (std::optional<std::string> hit = cache_->Lookup(text, source, target)) {
    return *hit;
  }
  if (inner_ == nullptr) {
    return absl::UnavailableError(
        "translation not in transcript cache and no translator configured");
  }
  absl::StatusOr<std::string> result = inner_->Translate(text, source, target);
  if (!result.ok()) return result.status();
  absl::Status stored = cache_->Store(text, source, target, *result);
  if (!stored.ok()) return stored;
  return result;
}

absl::StatusOr<CyclicTranscript> CyclicTranslate(std::string_view text,
                                                 Translator& translator,
                                                 std::string_view pivot) {
  CyclicTranscript transcript;
  absl::StatusOr<std::string> there = translator.Translate(text, "en", pivot);
  if (!there.ok()) return there.status();
  transcript.pivot_text = *std::move(there);
  absl::StatusOr<std::string> back =
      translator.Translate(transcript.pivot_text, pivot, "en");
  if (!back.ok()) return back.status();
  transcript.text = *std::move(back);
  return transcript;
}

absl::StatusOr<AttackOutcome> Attacker::Apply(std::string_view text,
                                              const AttackSpec& spec) const {
  absl::Status valid = spec.Validate();
  if (!valid.ok()) return valid;
  AttackOutcome outcome;
  switch (spec.kind) {
    case AttackKind::kNone:
      outcome.text = std::string(text);
      break;
    case AttackKind::kPseudoTranslation:
      outcome.text = PseudoTranslate(text, spec.seed, spec.fraction, lexicon_);
      break;
    case AttackKind::kSynonymSwap:
      outcome.text = SynonymSwap(text, spec.seed, spec.fraction, lexicon_);
      break;
    case AttackKind::kDropSentences:
      outcome.text = DropSentences(text, spec.fraction, spec.seed);
      break;
    case AttackKind::kShuffleSentences:
      outcome.text = ShuffleSentences(text, spec.seed);
      break;
    case AttackKind::kCyclicTranslation: {
      if (translator_ == nullptr) {
        return absl::FailedPreconditionError(
            "cyclic translation needs a translator");
      }
      absl::StatusOr<CyclicTranscript> transcript =
          CyclicTranslate(text, *translator_, spec.pivot);
      if (!transcript.ok()) {
        return absl::Status(transcript.status().code(),
                            absl::StrCat("attack error: ",
                                         transcript.status().message()));
      }
      outcome.audit.push_back(transcript->pivot_text);
      outcome.text = transcript->text;
      break;
    }
  }
  return outcome;
}

}  // namespace stylomark
