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

#include "stylomark/label_table.h"

#include <set>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "stylomark/builtin_data.h"
#include "stylomark/status_macros.h"
#include "stylomark/text_util.h"

namespace stylomark {
namespace {

absl::Status LineError(std::string_view file, int line, std::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat(ToAbsl(file), " line ", line, ": ", ToAbsl(what)));
}

// Splits non-comment lines into tab-separated fields, with line numbers.
std::vector<std::pair<int, std::vector<std::string>>> Records(
    std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> records;
  int line_no = 0;
  for (absl::string_view raw : absl::StrSplit(ToAbsl(text), '\n')) {
    ++line_no;
    std::string_view line = ToStd(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (StripAsciiWhitespace(line).empty()) continue;
    if (StripAsciiWhitespace(line).front() == '#') continue;
    std::vector<std::string> fields;
    for (absl::string_view f : absl::StrSplit(ToAbsl(line), '\t')) {
      fields.emplace_back(StripAsciiWhitespace(ToStd(f)));
    }
    records.emplace_back(line_no, std::move(fields));
  }
  return records;
}

}  // namespace

absl::StatusOr<LabelTable> LabelTable::Parse(std::string_view labels_tsv,
                                             std::string_view seeds_tsv) {
  LabelTable table;
  std::set<char> letters_seen;
  std::set<SensorCategory> categories_seen;
  std::set<std::string> acrostic_seen, sensor_seen;
  for (const auto& [line, f] : Records(labels_tsv)) {
    if (f[0] == "version") {
      if (f.size() != 2) return LineError("label table", line, "bad version");
      table.version_ = f[1];
      continue;
    }
    if (f.size() != 3) {
      return LineError("label table", line, "expected feature, label, target");
    }
    if (f[0] == "acrostic") {
      if (f[2].size() != 1 || !IsAsciiAlpha(f[2][0])) {
        return LineError("label table", line, "target must be a letter");
      }
      const char letter = AsciiLower(f[2][0]);
      if (!letters_seen.insert(letter).second ||
          !acrostic_seen.insert(f[1]).second) {
        return LineError("label table", line, "duplicate label or letter");
      }
      table.acrostic_labels_.push_back(f[1]);
      table.letters_.push_back(letter);
    } else if (f[0] == "sensor") {
      absl::StatusOr<SensorCategory> category = ParseSensorCategory(f[2]);
      if (!category.ok()) {
        return LineError("label table", line,
                         ToStd(category.status().message()));
      }
      if (!categories_seen.insert(*category).second ||
          !sensor_seen.insert(f[1]).second) {
        return LineError("label table", line, "duplicate label or category");
      }
      table.sensor_labels_.push_back(f[1]);
      table.categories_.push_back(*category);
    } else {
      return LineError("label table", line,
                       absl::StrCat("unknown feature '", f[0], "'"));
    }
  }
  if (table.version_.empty()) {
    return absl::InvalidArgumentError("label table has no version record");
  }
  if (table.acrostic_labels_.size() != kNumLetters ||
      table.sensor_labels_.size() != kNumSensorCategories) {
    return absl::InvalidArgumentError(absl::StrCat(
        "label table needs 26 acrostic and 11 sensor labels, got ",
        table.acrostic_labels_.size(), " and ", table.sensor_labels_.size()));
  }

  if (!seeds_tsv.empty()) {
    for (const auto& [line, f] : Records(seeds_tsv)) {
      if (f[0] == "version") {
        if (f.size() != 2) return LineError("seed terms", line, "bad version");
        table.seeds_version_ = f[1];
        continue;
      }
      if (f.size() != 3) {
        return LineError("seed terms", line, "expected feature, label, terms");
      }
      const bool known = f[0] == "acrostic" ? acrostic_seen.count(f[1]) > 0
                         : f[0] == "sensor" ? sensor_seen.count(f[1]) > 0
                                            : false;
      if (!known) {
        return LineError("seed terms", line,
                         absl::StrCat("label '", f[1], "' not in table"));
      }
      std::vector<std::string>& terms = table.seeds_[f[1]];
      std::set<std::string> unique;
      for (absl::string_view t : absl::StrSplit(f[2], ' ', absl::SkipEmpty())) {
        std::string term = CaseFold(ToStd(t));
        if (unique.insert(term).second) terms.push_back(std::move(term));
      }
    }
  }
  return table;
}

absl::StatusOr<LabelTable> LabelTable::Load(const std::string& labels_path,
                                            const std::string& seeds_path) {
  ASSIGN_OR_RETURN(std::string labels, ReadFile(labels_path));
  std::string seeds;
  if (!seeds_path.empty()) {
    ASSIGN_OR_RETURN(seeds, ReadFile(seeds_path));
  }
  return Parse(labels, seeds);
}

const LabelTable& LabelTable::Builtin() {
  static const LabelTable* const kBuiltin = [] {
    absl::StatusOr<LabelTable> table =
        Parse(builtin::labels(), builtin::seed_terms());
    return new LabelTable(*std::move(table));
  }();
  return *kBuiltin;
}

const std::vector<std::string>& LabelTable::SeedTerms(
    const std::string& label) const {
  static const std::vector<std::string> kEmpty;
  const auto it = seeds_.find(label);
  return it == seeds_.end() ? kEmpty : it->second;
}

}  // namespace stylomark
