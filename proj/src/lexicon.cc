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

#include "stylomark/lexicon.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "stylomark/status_macros.h"
#include "stylomark/text_util.h"

namespace stylomark {
namespace {

constexpr std::array<std::string_view, kNumSensorCategories> kNames = {
    "auditory", "gustatory", "haptic", "interoceptive", "olfactory", "visual",
    "foot_leg", "hand_arm", "head",    "mouth",         "torso"};

struct Alias {
  std::string_view name;
  SensorCategory category;
};

constexpr Alias kAliases[] = {
    {"hearing", SensorCategory::kAuditory},
    {"taste", SensorCategory::kGustatory},
    {"touch", SensorCategory::kHaptic},
    {"interoception", SensorCategory::kInteroceptive},
    {"smell", SensorCategory::kOlfactory},
    {"vision", SensorCategory::kVisual},
    {"foot/leg", SensorCategory::kFootLeg},
    {"foot-leg", SensorCategory::kFootLeg},
    {"hand/arm", SensorCategory::kHandArm},
    {"hand-arm", SensorCategory::kHandArm},
    {"mouth/throat", SensorCategory::kMouth},
};

// Splits one delimited record. Double quotes group fields and "" escapes a
// quote inside a quoted field.
std::vector<std::string> SplitRecord(std::string_view line, char delimiter) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == delimiter) {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  return fields;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

bool ParseRating(std::string_view cell, double* out) {
  cell = StripAsciiWhitespace(cell);
  if (cell.empty()) return false;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(),
                                         *out);
  return ec == std::errc() && ptr == cell.data() + cell.size();
}

bool IsMultiWord(std::string_view word) {
  return std::any_of(word.begin(), word.end(),
                     [](char c) { return IsAsciiSpace(c); });
}

// Smallest distinct rating whose exceedance share stays within the target.
// Falls back to the next lower value when ties leave the share under the
// band floor and stepping down stays under the band ceiling.
double ChooseThreshold(std::vector<double> ratings, double* fraction) {
  std::sort(ratings.begin(), ratings.end(), std::greater<>());
  const double n = static_cast<double>(ratings.size());
  double tau = ratings.front();
  double tau_fraction = -1.0;
  size_t i = 0;
  while (i < ratings.size()) {
    const double v = ratings[i];
    size_t j = i;
    while (j < ratings.size() && ratings[j] == v) ++j;
    const double share = static_cast<double>(j) / n;
    if (share > kMatchTargetFraction) {
      if (tau_fraction < 0.0) {
        tau = v;  // even the top value exceeds the target
        tau_fraction = share;
      } else if (tau_fraction < kMatchBandLow && share <= kMatchBandHigh) {
        tau = v;
        tau_fraction = share;
      }
      break;
    }
    tau = v;
    tau_fraction = share;
    i = j;
  }
  *fraction = tau_fraction;
  return tau;
}

}  // namespace

const std::array<SensorCategory, kNumSensorCategories>& AllSensorCategories() {
  static const std::array<SensorCategory, kNumSensorCategories> kAll = [] {
    std::array<SensorCategory, kNumSensorCategories> all;
    for (int i = 0; i < kNumSensorCategories; ++i) all[i] = SensorCategoryAt(i);
    return all;
  }();
  return kAll;
}

std::string_view SensorCategoryName(SensorCategory c) {
  return kNames[Index(c)];
}

absl::StatusOr<SensorCategory> ParseSensorCategory(std::string_view name) {
  const std::string folded = CaseFold(StripAsciiWhitespace(name));
  for (int i = 0; i < kNumSensorCategories; ++i) {
    if (folded == kNames[i]) return SensorCategoryAt(i);
  }
  for (const Alias& alias : kAliases) {
    if (folded == alias.name) return alias.category;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown sensorimotor category '", ToAbsl(name), "'"));
}

ColumnMap ColumnMap::Lancaster() { return ColumnMap(); }

absl::StatusOr<ColumnMap> ColumnMap::Parse(std::string_view text) {
  ColumnMap map = Lancaster();
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    line = StripAsciiWhitespace(line);
    if (line.empty() || line.front() == '#' || line.front() == ';' ||
        line.front() == '[') {
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("column map line ", line_no, ": expected key = value"));
    }
    const std::string key = CaseFold(StripAsciiWhitespace(line.substr(0, eq)));
    const std::string value(StripAsciiWhitespace(line.substr(eq + 1)));
    if (key == "word") {
      map.word_column = value;
    } else if (key == "delimiter") {
      if (value == "comma" || value == ",") {
        map.delimiter = ',';
      } else if (value == "tab" || value == "\\t") {
        map.delimiter = '\t';
      } else if (value.size() == 1) {
        map.delimiter = value[0];
      } else {
        return absl::InvalidArgumentError(
            absl::StrCat("column map line ", line_no, ": bad delimiter '",
                         value, "'"));
      }
    } else {
      absl::StatusOr<SensorCategory> category = ParseSensorCategory(key);
      if (!category.ok()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "column map line ", line_no, ": unknown key '", key, "'"));
      }
      map.rating_columns[Index(*category)] = value;
    }
  }
  return map;
}

absl::StatusOr<NormLexicon> NormLexicon::Load(const std::string& path,
                                              const ColumnMap& columns) {
  ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  absl::StatusOr<NormLexicon> lexicon = Parse(contents, columns);
  if (!lexicon.ok()) {
    return absl::Status(lexicon.status().code(),
                        absl::StrCat(path, ": ", lexicon.status().message()));
  }
  return lexicon;
}

absl::StatusOr<NormLexicon> NormLexicon::Parse(std::string_view contents,
                                               const ColumnMap& columns) {
  std::vector<std::string_view> lines = SplitLines(contents);
  size_t header_at = 0;
  while (header_at < lines.size() &&
         StripAsciiWhitespace(lines[header_at]).empty()) {
    ++header_at;
  }
  if (header_at == lines.size()) {
    return absl::InvalidArgumentError("norms file is empty");
  }

  const std::vector<std::string> header =
      SplitRecord(lines[header_at], columns.delimiter);
  const auto find_column = [&](const std::string& name) -> int {
    for (size_t i = 0; i < header.size(); ++i) {
      if (StripAsciiWhitespace(header[i]) == name) return static_cast<int>(i);
    }
    return -1;
  };
  const int word_col = find_column(columns.word_column);
  if (word_col < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("missing column '", columns.word_column, "'"));
  }
  std::array<int, kNumSensorCategories> rating_cols;
  for (int c = 0; c < kNumSensorCategories; ++c) {
    rating_cols[c] = find_column(columns.rating_columns[c]);
    if (rating_cols[c] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("missing column '", columns.rating_columns[c], "'"));
    }
  }

  NormLexicon lexicon;
  for (size_t li = header_at + 1; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    if (StripAsciiWhitespace(lines[li]).empty()) continue;
    const std::vector<std::string> fields =
        SplitRecord(lines[li], columns.delimiter);
    NormEntry entry;
    if (static_cast<size_t>(word_col) >= fields.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": missing word field"));
    }
    entry.word = CaseFold(StripAsciiWhitespace(fields[word_col]));
    for (int c = 0; c < kNumSensorCategories; ++c) {
      const size_t col = static_cast<size_t>(rating_cols[c]);
      const std::string_view cell =
          col < fields.size() ? std::string_view(fields[col]) : "";
      double value = 0.0;
      if (!ParseRating(cell, &value) || !std::isfinite(value) || value < 0.0) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_no, ": column '", columns.rating_columns[c],
            "': not a non-negative number '", ToAbsl(cell), "'"));
      }
      entry.ratings[c] = value;
    }
    if (entry.word.empty()) {
      lexicon.warnings_.push_back({line_no, "empty word dropped"});
      continue;
    }
    if (IsMultiWord(entry.word)) {
      lexicon.warnings_.push_back(
          {line_no, absl::StrCat("multi-word entry '", entry.word,
                                 "' dropped")});
      continue;
    }
    if (lexicon.index_.count(entry.word) > 0) {
      lexicon.warnings_.push_back(
          {line_no, absl::StrCat("duplicate word '", entry.word,
                                 "'; first occurrence kept")});
      continue;
    }
    lexicon.index_.emplace(entry.word, lexicon.entries_.size());
    lexicon.entries_.push_back(std::move(entry));
  }
  lexicon.fingerprint_ = Sha256Hex(contents);
  RETURN_IF_ERROR(lexicon.Finalize());
  return lexicon;
}

absl::StatusOr<NormLexicon> NormLexicon::FromEntries(
    std::vector<NormEntry> entries) {
  NormLexicon lexicon;
  std::string canonical;
  for (size_t i = 0; i < entries.size(); ++i) {
    NormEntry& entry = entries[i];
    const int item = static_cast<int>(i) + 1;
    entry.word = CaseFold(StripAsciiWhitespace(entry.word));
    for (double r : entry.ratings) {
      if (!std::isfinite(r) || r < 0.0) {
        return absl::InvalidArgumentError(absl::StrCat(
            "entry ", item, " ('", entry.word, "'): invalid rating"));
      }
    }
    if (entry.word.empty()) {
      lexicon.warnings_.push_back({item, "empty word dropped"});
      continue;
    }
    if (IsMultiWord(entry.word)) {
      lexicon.warnings_.push_back(
          {item, absl::StrCat("multi-word entry '", entry.word, "' dropped")});
      continue;
    }
    if (lexicon.index_.count(entry.word) > 0) {
      lexicon.warnings_.push_back(
          {item, absl::StrCat("duplicate word '", entry.word,
                              "'; first occurrence kept")});
      continue;
    }
    absl::StrAppend(&canonical, entry.word);
    for (double r : entry.ratings) absl::StrAppend(&canonical, ",", r);
    canonical.push_back('\n');
    lexicon.index_.emplace(entry.word, lexicon.entries_.size());
    lexicon.entries_.push_back(std::move(entry));
  }
  lexicon.fingerprint_ = Sha256Hex(canonical);
  RETURN_IF_ERROR(lexicon.Finalize());
  return lexicon;
}

absl::Status NormLexicon::Finalize() {
  if (entries_.empty()) {
    return absl::InvalidArgumentError("norms file has no entries");
  }
  const size_t n = entries_.size();
  for (int c = 0; c < kNumSensorCategories; ++c) {
    double sum = 0.0;
    for (const NormEntry& e : entries_) sum += e.ratings[c];
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const NormEntry& e : entries_) {
      const double d = e.ratings[c] - mean;
      ss += d * d;
    }
    const double stddev = std::sqrt(ss / static_cast<double>(n));
    if (!(stddev > 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("category '", ToAbsl(kNames[c]),
                       "' has zero variance; cannot standardize"));
    }
    stats_[c] = {mean, stddev};

    std::vector<double> ratings(n);
    for (size_t i = 0; i < n; ++i) ratings[i] = entries_[i].ratings[c];
    thresholds_[c] = ChooseThreshold(std::move(ratings), &match_fractions_[c]);
    if (!MatchBandOk(SensorCategoryAt(c))) {
      warnings_.push_back(
          {0, absl::StrFormat("category '%s': match fraction %.4f outside "
                              "[%.2f, %.2f]",
                              ToAbsl(kNames[c]), match_fractions_[c], kMatchBandLow,
                              kMatchBandHigh)});
    }

    std::vector<size_t>& order = by_rating_[c];
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      const double ra = entries_[a].ratings[c];
      const double rb = entries_[b].ratings[c];
      if (ra != rb) return ra < rb;
      return entries_[a].word < entries_[b].word;
    });
    rank_[c].resize(n);
    for (size_t pos = 0; pos < n; ++pos) rank_[c][order[pos]] = pos;
  }
  return absl::OkStatus();
}

const NormEntry* NormLexicon::Find(std::string_view word) const {
  const auto it = index_.find(CaseFold(word));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::optional<double> NormLexicon::Rating(std::string_view word,
                                          SensorCategory c) const {
  const NormEntry* entry = Find(word);
  if (entry == nullptr) return std::nullopt;
  return entry->ratings[Index(c)];
}

bool NormLexicon::IsMatch(std::string_view word, SensorCategory c) const {
  const NormEntry* entry = Find(word);
  return entry != nullptr && entry->ratings[Index(c)] >= thresholds_[Index(c)];
}

SensorCategory NormLexicon::DominantCategory(const NormEntry& entry) const {
  int best = 0;
  for (int c = 1; c < kNumSensorCategories; ++c) {
    if (entry.ratings[c] > entry.ratings[best]) best = c;
  }
  return SensorCategoryAt(best);
}

const NormEntry* NormLexicon::NearestByRating(std::string_view word,
                                              SensorCategory c) const {
  const auto it = index_.find(CaseFold(word));
  if (it == index_.end() || entries_.size() < 2) return nullptr;
  const int ci = Index(c);
  const size_t pos = rank_[ci][it->second];
  const double own = entries_[it->second].ratings[ci];
  const std::vector<size_t>& order = by_rating_[ci];
  if (pos == 0) return &entries_[order[1]];
  if (pos + 1 == order.size()) return &entries_[order[pos - 1]];
  const NormEntry& lower = entries_[order[pos - 1]];
  const NormEntry& upper = entries_[order[pos + 1]];
  return (upper.ratings[ci] - own < own - lower.ratings[ci]) ? &upper : &lower;
}

}  // namespace stylomark
