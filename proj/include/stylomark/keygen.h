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

#ifndef STYLOMARK_KEYGEN_H_
#define STYLOMARK_KEYGEN_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "stylomark/classifier.h"
#include "stylomark/label_table.h"
#include "stylomark/lexicon.h"
#include "stylomark/segmenter.h"

namespace stylomark {

// Watermark controls derived from sentence `source_sentence_index` and
// applied to the sentence after it.
struct WatermarkKey {
  char letter = 'a';
  SensorCategory category = SensorCategory::kAuditory;
  int source_sentence_index = 0;
  int acrostic_label = 0;
  int sensor_label = 0;

  bool SameControls(const WatermarkKey& other) const {
    return letter == other.letter && category == other.category;
  }
};

class KeyDeriver {
 public:
  // Both arguments must outlive the deriver.
  KeyDeriver(const LabelTable& table, const Classifier& classifier)
      : table_(table), classifier_(classifier) {}

  // Fails for sentences without words and when the classifier fails.
  absl::StatusOr<WatermarkKey> Derive(const Sentence& sentence) const;

  // Keys for sentences [0, n-1): the last sentence yields no key, and
  // sentences without words yield nullopt. Up to `parallelism` classifier
  // calls run at once; results are stored by sentence index. The first
  // classifier failure in index order is returned.
  absl::StatusOr<std::vector<std::optional<WatermarkKey>>> DeriveChain(
      const std::vector<Sentence>& sentences, int parallelism = 1) const;

  const LabelTable& table() const { return table_; }
  const Classifier& classifier() const { return classifier_; }

 private:
  const LabelTable& table_;
  const Classifier& classifier_;
};

}  // namespace stylomark

#endif  // STYLOMARK_KEYGEN_H_
