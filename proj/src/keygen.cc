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

#include "stylomark/keygen.h"

#include <algorithm>
#include <future>

#include "absl/strings/str_cat.h"

namespace stylomark {

absl::StatusOr<WatermarkKey> KeyDeriver::Derive(
    const Sentence& sentence) const {
  if (sentence.words.empty()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "key error: sentence ", sentence.index, " has no words"));
  }
  absl::StatusOr<Classification> acrostic =
      classifier_.Classify(sentence.text, table_.acrostic_labels());
  if (!acrostic.ok()) return acrostic.status();
  absl::StatusOr<Classification> sensor =
      classifier_.Classify(sentence.text, table_.sensor_labels());
  if (!sensor.ok()) return sensor.status();

  WatermarkKey key;
  key.acrostic_label = acrostic->index;
  key.sensor_label = sensor->index;
  key.letter = table_.LetterAt(acrostic->index);
  key.category = table_.CategoryAt(sensor->index);
  key.source_sentence_index = sentence.index;
  return key;
}

absl::StatusOr<std::vector<std::optional<WatermarkKey>>>
KeyDeriver::DeriveChain(
    const std::vector<Sentence>& sentences, int parallelism) const {
  const size_t n = sentences.empty() ? 0 : sentences.size() - 1;
  std::vector<absl::StatusOr<WatermarkKey>> results(
      n, absl::UnknownError("not derived"));
  const size_t batch = static_cast<size_t>(std::max(1, parallelism));
  if (batch == 1) {
    for (size_t i = 0; i < n; ++i) results[i] = Derive(sentences[i]);
  } else {
    for (size_t start = 0; start < n; start += batch) {
      const size_t stop = std::min(n, start + batch);
      std::vector<std::future<absl::StatusOr<WatermarkKey>>> pending;
      for (size_t i = start; i < stop; ++i) {
        pending.push_back(std::async(std::launch::async, [this, &sentences, i] {
          return Derive(sentences[i]);
        }));
      }
      for (size_t i = start; i < stop; ++i) {
        results[i] = pending[i - start].get();
      }
    }
  }
  std::vector<std::optional<WatermarkKey>> keys(n);
  for (size_t i = 0; i < n; ++i) {
    if (sentences[i].words.empty()) continue;
    if (!results[i].ok()) return results[i].status();
    keys[i] = *results[i];
  }
  return keys;
}

}  // namespace stylomark
