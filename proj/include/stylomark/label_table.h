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

#ifndef STYLOMARK_LABEL_TABLE_H_
#define STYLOMARK_LABEL_TABLE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "stylomark/lexicon.h"

namespace stylomark {

inline constexpr int kNumLetters = 26;

// The semantic labels a sentence is classified against, with the letter or
// sensorimotor category each label selects. Label order is part of the
// protocol: classifiers report the winning position in these lists.
class LabelTable {
 public:
  // `labels_tsv`: a "version<TAB>id" record, then records
  // "acrostic<TAB>label<TAB>letter" and "sensor<TAB>label<TAB>category".
  // `seeds_tsv` (may be empty): "version<TAB>id", then
  // "feature<TAB>label<TAB>space separated terms".
  static absl::StatusOr<LabelTable> Parse(std::string_view labels_tsv,
                                          std::string_view seeds_tsv);
  static absl::StatusOr<LabelTable> Load(const std::string& labels_path,
                                         const std::string& seeds_path);
  static const LabelTable& Builtin();

  const std::vector<std::string>& acrostic_labels() const {
    return acrostic_labels_;
  }
  const std::vector<std::string>& sensor_labels() const {
    return sensor_labels_;
  }
  // Lowercase letter selected by acrostic label `index`.
  char LetterAt(int index) const { return letters_[index]; }
  SensorCategory CategoryAt(int index) const { return categories_[index]; }

  // Seed terms for a label, case-folded; empty if none were shipped.
  const std::vector<std::string>& SeedTerms(const std::string& label) const;

  const std::string& version() const { return version_; }
  const std::string& seeds_version() const { return seeds_version_; }

 private:
  std::vector<std::string> acrostic_labels_;
  std::vector<char> letters_;
  std::vector<std::string> sensor_labels_;
  std::vector<SensorCategory> categories_;
  std::map<std::string, std::vector<std::string>> seeds_;
  std::string version_;
  std::string seeds_version_ = "none";
};

}  // namespace stylomark

#endif  // STYLOMARK_LABEL_TABLE_H_
