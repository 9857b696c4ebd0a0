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

#ifndef STYLOMARK_LEXICON_H_
#define STYLOMARK_LEXICON_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"

namespace stylomark {

inline constexpr int kNumSensorCategories = 11;

// Six perceptual modalities followed by five action effectors. The integer
// values are part of the label-table protocol and must not be reordered.
enum class SensorCategory : int {
  kAuditory = 0,
  kGustatory = 1,
  kHaptic = 2,
  kInteroceptive = 3,
  kOlfactory = 4,
  kVisual = 5,
  kFootLeg = 6,
  kHandArm = 7,
  kHead = 8,
  kMouth = 9,
  kTorso = 10,
};

inline int Index(SensorCategory c) { return static_cast<int>(c); }
inline SensorCategory SensorCategoryAt(int index) {
  return static_cast<SensorCategory>(index);
}
const std::array<SensorCategory, kNumSensorCategories>& AllSensorCategories();

// Canonical lowercase name: "auditory", ..., "foot_leg", "hand_arm", ...
std::string_view SensorCategoryName(SensorCategory c);

// Accepts canonical names, the label-table spellings ("Foot/Leg"), the
// Lancaster column stems ("Foot_leg") and the everyday sense names
// ("hearing", "smell", "touch", ...). Case-insensitive.
absl::StatusOr<SensorCategory> ParseSensorCategory(std::string_view name);

struct NormEntry {
  std::string word;  // case-folded
  std::array<double, kNumSensorCategories> ratings{};
};

struct CategoryStats {
  double mean = 0.0;
  double stddev = 0.0;  // population
};

// Which columns of a delimiter-separated norms file hold the word and the
// eleven ratings.
struct ColumnMap {
  std::string word_column = "Word";
  std::array<std::string, kNumSensorCategories> rating_columns = {
      "Auditory.mean", "Gustatory.mean", "Haptic.mean", "Interoceptive.mean",
      "Olfactory.mean", "Visual.mean", "Foot_leg.mean", "Hand_arm.mean",
      "Head.mean", "Mouth.mean", "Torso.mean"};
  char delimiter = ',';

  // Column names of the published Lancaster norms CSV.
  static ColumnMap Lancaster();

  // Parses `key = value` lines: word, delimiter (comma, tab or a single
  // character) and one key per category name. A `[section]` header line
  // is ignored. Unspecified keys keep the Lancaster defaults.
  static absl::StatusOr<ColumnMap> Parse(std::string_view text);
};

struct IngestWarning {
  int line = 0;
  std::string message;
};

// Share of the lexicon that `IsMatch` accepts per category.
inline constexpr double kMatchTargetFraction = 0.15;
inline constexpr double kMatchBandLow = 0.05;
inline constexpr double kMatchBandHigh = 0.20;

// Sensorimotor norms: word -> eleven ratings, plus per-category population
// statistics and match thresholds. Immutable after construction.
class NormLexicon {
 public:
  static absl::StatusOr<NormLexicon> Load(const std::string& path,
                                          const ColumnMap& columns);
  static absl::StatusOr<NormLexicon> Parse(std::string_view contents,
                                           const ColumnMap& columns);
  // Applies the same folding, multi-word and duplicate rules as Parse.
  static absl::StatusOr<NormLexicon> FromEntries(std::vector<NormEntry> entries);

  size_t size() const { return entries_.size(); }
  const std::vector<NormEntry>& entries() const { return entries_; }
  const std::vector<IngestWarning>& warnings() const { return warnings_; }
  // SHA-256 of the ingested content; identifies the lexicon in run headers.
  const std::string& fingerprint() const { return fingerprint_; }

  // Callee folds case. Returns nullptr for out-of-vocabulary words.
  const NormEntry* Find(std::string_view word) const;
  std::optional<double> Rating(std::string_view word, SensorCategory c) const;

  CategoryStats Stats(SensorCategory c) const { return stats_[Index(c)]; }
  double MatchThreshold(SensorCategory c) const {
    return thresholds_[Index(c)];
  }
  double MatchFraction(SensorCategory c) const {
    return match_fractions_[Index(c)];
  }
  bool MatchBandOk(SensorCategory c) const {
    const double f = MatchFraction(c);
    return f >= kMatchBandLow && f <= kMatchBandHigh;
  }

  // True iff the word has an entry rated at least the category threshold.
  bool IsMatch(std::string_view word, SensorCategory c) const;

  // Category with the highest rating for the entry; lowest index on ties.
  SensorCategory DominantCategory(const NormEntry& entry) const;

  // The entry whose rating in `c` is closest to the word's own, excluding
  // the word. Ties go to the lower-rated neighbour. nullptr when the word is
  // unknown or the lexicon has a single entry.
  const NormEntry* NearestByRating(std::string_view word,
                                   SensorCategory c) const;

 private:
  NormLexicon() = default;
  absl::Status Finalize();

  std::vector<NormEntry> entries_;
  std::unordered_map<std::string, size_t> index_;
  std::array<CategoryStats, kNumSensorCategories> stats_{};
  std::array<double, kNumSensorCategories> thresholds_{};
  std::array<double, kNumSensorCategories> match_fractions_{};
  // Per category: entry indices sorted by (rating, word), and the inverse.
  std::array<std::vector<size_t>, kNumSensorCategories> by_rating_;
  std::array<std::vector<size_t>, kNumSensorCategories> rank_;
  std::vector<IngestWarning> warnings_;
  std::string fingerprint_;
};

}  // namespace stylomark

#endif  // STYLOMARK_LEXICON_H_
