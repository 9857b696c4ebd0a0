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

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "stylomark/builtin_data.h"
#include "stylomark/eval.h"
#include "stylomark/segmenter.h"
#include "stylomark/text_util.h"
#include "test_support.h"

namespace stylomark {
namespace {

// Canned classifier: returns fixed label positions, or fails on a marker.
class FixedClassifier : public Classifier {
 public:
  absl::StatusOr<Classification> Classify(
      std::string_view text, const std::vector<std::string>& labels) const override {
    if (text.find("FAIL") != std::string_view::npos) {
      return absl::UnavailableError("classifier down");
    }
    Classification c;
    c.scores.assign(labels.size(), 0.0);
    c.index = labels.size() == 26 ? 17 : 5;
    c.scores[c.index] = 1.0;
    return c;
  }
  ClassifierBinding binding() const override { return {}; }
};

std::vector<Sentence> Doc(std::string_view text) { return SplitSentences(text); }

TEST(KeyDeriverTest, MapsLabelPositionsThroughTable) {
  FixedClassifier fixed;
  KeyDeriver keys(LabelTable::Builtin(), fixed);
  absl::StatusOr<WatermarkKey> key = keys.Derive(Doc("Some text here.")[0]);
  ASSERT_TRUE(key.ok()) << key.status();
  EXPECT_EQ(key->letter, 'r');
  EXPECT_EQ(key->category, SensorCategory::kVisual);
  EXPECT_EQ(key->acrostic_label, 17);
  EXPECT_EQ(key->sensor_label, 5);
}

TEST(KeyDeriverTest, SameTextAtDifferentIndicesGivesSameControls) {
  const std::vector<Sentence> s =
      Doc("The river ran fast. Birds sang. The river ran fast. End.");
  const auto chain = *testing::BuiltinKeys().DeriveChain(s);
  ASSERT_TRUE(chain[0] && chain[2]);
  EXPECT_TRUE(chain[0]->SameControls(*chain[2]));
  EXPECT_EQ(chain[0]->source_sentence_index, 0);
  EXPECT_EQ(chain[2]->source_sentence_index, 2);
}

TEST(KeyDeriverTest, WordlessSentenceIsAnError) {
  Sentence empty;
  empty.text = "...";
  EXPECT_EQ(testing::BuiltinKeys().Derive(empty).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(KeyDeriverTest, ChainHasOneKeyPerSentenceButTheLast) {
  const std::vector<Sentence> s = Doc(
      "Light fell on the hills. Music drifted over the fields. A dog barked. "
      "Then the rain began.");
  ASSERT_EQ(s.size(), 4u);
  const auto chain = *testing::BuiltinKeys().DeriveChain(s);
  ASSERT_EQ(chain.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    ASSERT_TRUE(chain[i].has_value());
    EXPECT_EQ(chain[i]->source_sentence_index, i);
    const WatermarkKey direct = *testing::BuiltinKeys().Derive(s[i]);
    EXPECT_TRUE(chain[i]->SameControls(direct));
  }
  EXPECT_TRUE(testing::BuiltinKeys().DeriveChain({})->empty());
  EXPECT_TRUE(testing::BuiltinKeys().DeriveChain({s[0]})->empty());
}

TEST(KeyDeriverTest, WordlessSentenceInChainYieldsNoKey) {
  std::vector<Sentence> s = Doc("First one here. Second one here. Third.");
  s[1].words.clear();
  const auto chain = *testing::BuiltinKeys().DeriveChain(s);
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_TRUE(chain[0].has_value());
  EXPECT_FALSE(chain[1].has_value());
}

// Key i depends on sentence i alone: rewriting later sentences leaves it.
TEST(KeyDeriverTest, KeyIgnoresFollowingSentences) {
  const std::vector<Sentence> base = Doc(
      "A painter arrived. The museum was quiet. Cold air moved. Engineers "
      "slept. Done.");
  const auto before = *testing::BuiltinKeys().DeriveChain(base);
  for (size_t i = 0; i + 1 < base.size(); ++i) {
    std::vector<Sentence> mutated = base;
    mutated[i + 1].text = "Galaxies and stars and orbit and telescope.";
    mutated[i + 1].words = Words(mutated[i + 1].text);
    const auto after = *testing::BuiltinKeys().DeriveChain(mutated);
    for (size_t j = 0; j <= i; ++j) {
      EXPECT_TRUE(before[j]->SameControls(*after[j])) << i << " " << j;
    }
  }
}

TEST(KeyDeriverTest, ParallelChainEqualsSerial) {
  const std::vector<Sentence> s = SplitSentences(
      std::string(builtin::mock_corpus().substr(0, 6000)));
  ASSERT_GT(s.size(), 20u);
  const auto serial = *testing::BuiltinKeys().DeriveChain(s, 1);
  const auto parallel = *testing::BuiltinKeys().DeriveChain(s, 7);
  ASSERT_EQ(serial.size(), parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    ASSERT_EQ(serial[i].has_value(), parallel[i].has_value());
    if (serial[i]) {
      EXPECT_TRUE(serial[i]->SameControls(*parallel[i]));
      EXPECT_EQ(serial[i]->source_sentence_index, parallel[i]->source_sentence_index);
    }
  }
}

TEST(KeyDeriverTest, ClassifierFailurePropagatesInIndexOrder) {
  FixedClassifier fixed;
  KeyDeriver keys(LabelTable::Builtin(), fixed);
  const std::vector<Sentence> s = Doc("Fine here. FAIL one. FAIL two. Last.");
  for (int parallelism : {1, 4}) {
    absl::StatusOr<std::vector<std::optional<WatermarkKey>>> chain =
        keys.DeriveChain(s, parallelism);
    EXPECT_EQ(chain.status().code(), absl::StatusCode::kUnavailable);
  }
}

std::vector<Sentence> PromptFirstSentences() {
  std::vector<Sentence> firsts;
  for (const std::string& prompt : PromptSet::Builtin().prompts) {
    const std::vector<Sentence> s = SplitSentences(prompt);
    if (!s.empty() && !s[0].words.empty()) firsts.push_back(s[0]);
  }
  return firsts;
}

TEST(KeyDeriverTest, CorpusKeysAreDiverse) {
  std::set<char> letters;
  std::set<SensorCategory> categories;
  for (const Sentence& s : PromptFirstSentences()) {
    const WatermarkKey key = *testing::BuiltinKeys().Derive(s);
    letters.insert(key.letter);
    categories.insert(key.category);
  }
  EXPECT_GE(letters.size(), 10u);
  EXPECT_GE(categories.size(), 6u);
}

// Replaces floor(20%) of each corpus sentence's words with unseen tokens and
// counts how often a winning label moves.
TEST(KeyDeriverTest, KeysTolerateOutOfVocabularyWords) {
  const BuiltinClassifier& classifier = testing::BuiltinClassifierInstance();
  const LabelTable& table = LabelTable::Builtin();
  std::mt19937_64 rng(23);
  int sentences = 0, acrostic_changed = 0, sensor_changed = 0;
  for (const Sentence& s : PromptFirstSentences()) {
    std::vector<std::string> words = s.words;
    const size_t replace = words.size() / 5;
    std::vector<size_t> positions(words.size());
    std::iota(positions.begin(), positions.end(), 0);
    std::shuffle(positions.begin(), positions.end(), rng);
    for (size_t i = 0; i < replace; ++i) {
      words[positions[i]] = absl::StrCat("oovqz", i);
    }
    const std::string mutated = absl::StrJoin(words, " ");
    const std::string original = absl::StrJoin(s.words, " ");
    ++sentences;
    acrostic_changed +=
        classifier.Classify(original, table.acrostic_labels())->index !=
        classifier.Classify(mutated, table.acrostic_labels())->index;
    sensor_changed +=
        classifier.Classify(original, table.sensor_labels())->index !=
        classifier.Classify(mutated, table.sensor_labels())->index;
  }
  ASSERT_GT(sentences, 100);
  EXPECT_LE(static_cast<double>(acrostic_changed) / sentences, 0.30);
  EXPECT_LE(static_cast<double>(sensor_changed) / sentences, 0.30);
  std::cout << "label changes: acrostic " << acrostic_changed << "/" << sentences
            << ", sensor " << sensor_changed << "/" << sentences << "\n";
}

}  // namespace
}  // namespace stylomark
