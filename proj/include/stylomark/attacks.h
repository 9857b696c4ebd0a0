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

#ifndef STYLOMARK_ATTACKS_H_
#define STYLOMARK_ATTACKS_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "stylomark/http_client.h"
#include "stylomark/lexicon.h"
#include "stylomark/segmenter.h"

namespace stylomark {

enum class AttackKind {
  kNone,
  kCyclicTranslation,
  kPseudoTranslation,
  kDropSentences,
  kShuffleSentences,
  kSynonymSwap,
};

struct AttackSpec {
  AttackKind kind = AttackKind::kNone;
  double fraction = 0.0;  // intensity, drop fraction or swap fraction
  std::string pivot = "es";
  uint64_t seed = 0;

  // "none", "pseudo-translation:0.2", "drop-sentences:0.25",
  // "shuffle-sentences", "synonym-swap:0.1", "cyclic-translation:es".
  static absl::StatusOr<AttackSpec> Parse(std::string_view text);
  std::string ToString() const;  // Parse(ToString()) round-trips, minus seed
  absl::Status Validate() const;
};

std::string_view AttackKindName(AttackKind kind);

// Replaces each word with probability `intensity` (half that for the first
// word of a sentence): an in-lexicon word becomes its nearest-rated
// neighbour in its dominant category, anything else a filler word.
// Capitalization and surrounding punctuation are kept, and sentence
// boundaries are unchanged.
std::string PseudoTranslate(std::string_view text, uint64_t seed,
                            double intensity, const NormLexicon& lexicon);

// Like PseudoTranslate with the same rate at every position and no filler:
// only in-lexicon words are swapped.
std::string SynonymSwap(std::string_view text, uint64_t seed, double fraction,
                        const NormLexicon& lexicon);

// Removes floor(fraction * n) uniformly chosen sentences; survivors are
// kept byte-exact and joined by single spaces.
std::string DropSentences(std::string_view text, double fraction,
                          uint64_t seed);
// Indices of the sentences DropSentences removes, ascending.
std::vector<int> DroppedSentenceIndices(int sentence_count, double fraction,
                                        uint64_t seed);

// Uniformly permutes sentences; joined by single spaces.
std::string ShuffleSentences(std::string_view text, uint64_t seed);
std::vector<int> SentencePermutation(int sentence_count, uint64_t seed);

class Translator {
 public:
  virtual ~Translator() = default;
  virtual absl::StatusOr<std::string> Translate(std::string_view text,
                                                std::string_view source,
                                                std::string_view target) = 0;
};

// POSTs {"text", "source", "target"} to the endpoint and reads {"text"}.
class HttpTranslator : public Translator {
 public:
  explicit HttpTranslator(std::string endpoint, RemoteOptions options = {})
      : endpoint_(std::move(endpoint)), options_(options) {}
  absl::StatusOr<std::string> Translate(std::string_view text,
                                        std::string_view source,
                                        std::string_view target) override;

 private:
  std::string endpoint_;
  RemoteOptions options_;
};

// On-disk translation transcripts, one JSON object per line, keyed by the
// SHA-256 of (source, target, text).
class TranscriptCache {
 public:
  // A missing file is an empty cache.
  static absl::StatusOr<std::unique_ptr<TranscriptCache>> Open(
      const std::string& path);

  static std::string Key(std::string_view text, std::string_view source,
                         std::string_view target);
  std::optional<std::string> Lookup(std::string_view text,
                                    std::string_view source,
                                    std::string_view target) const;
  // Appends to the file.
  absl::Status Store(std::string_view text, std::string_view source,
                     std::string_view target, std::string_view translation);
  size_t size() const;

 private:
  explicit TranscriptCache(std::string path) : path_(std::move(path)) {}
  std::string path_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::string> entries_;
};

// Serves from the cache and falls through to `inner` on a miss, storing the
// result. Without `inner`, a miss is an Unavailable error.
class CachedTranslator : public Translator {
 public:
  CachedTranslator(TranscriptCache* cache, Translator* inner)
      : cache_(cache), inner_(inner) {}
  absl::StatusOr<std::string> Translate(std::string_view text,
                                        std::string_view source,
                                        std::string_view target) override;

 private:
  TranscriptCache* cache_;
  Translator* inner_;
};

struct CyclicTranscript {
  std::string pivot_text;  // first hop
  std::string text;        // back in English
};

absl::StatusOr<CyclicTranscript> CyclicTranslate(std::string_view text,
                                                 Translator& translator,
                                                 std::string_view pivot);

struct AttackOutcome {
  std::string text;
  std::vector<std::string> audit;  // intermediate texts, e.g. pivot hop
};

// Dispatches an AttackSpec. Cyclic translation needs a translator.
class Attacker {
 public:
  Attacker(const NormLexicon& lexicon, Translator* translator = nullptr)
      : lexicon_(lexicon), translator_(translator) {}

  absl::StatusOr<AttackOutcome> Apply(std::string_view text,
                                      const AttackSpec& spec) const;

 private:
  const NormLexicon& lexicon_;
  Translator* translator_;
};

}  // namespace stylomark

#endif  // STYLOMARK_ATTACKS_H_
