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

#include "stylomark/generator.h"

#include <cmath>
#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "stylomark/detector.h"
#include "stylomark/segmenter.h"
#include "test_support.h"

namespace stylomark {
namespace {

using ::testing::HasSubstr;

const Embedder& BuiltinEmbedder() {
  static const Embedder* const kEmbedder =
      new Embedder(testing::BuiltinMockModel(), testing::BuiltinKeys(),
                   testing::StandinLexicon());
  return *kEmbedder;
}

EmbedConfig Seeded(uint64_t seed) {
  EmbedConfig config;
  config.seed = seed;
  return config;
}

TEST(EmbedConfigTest, Validates) {
  EXPECT_TRUE(EmbedConfig().Validate().ok());
  EmbedConfig bad;
  bad.sensor_bias = -1;
  EXPECT_FALSE(bad.Validate().ok());
  bad = EmbedConfig();
  bad.max_sentences = 0;
  EXPECT_FALSE(bad.Validate().ok());
  bad = EmbedConfig();
  bad.acrostic_bias = NAN;
  EXPECT_FALSE(bad.Validate().ok());
}

TEST(EmbedderTest, ZeroBiasEqualsPlainGeneration) {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    EmbedConfig config = Seeded(seed);
    config.acrostic_bias = 0;
    config.sensor_bias = 0;
    const GenerationResult marked = BuiltinEmbedder().Generate("Tell me.", config);
    const GenerationResult plain =
        GeneratePlain(testing::BuiltinMockModel(), "Tell me.", config);
    ASSERT_TRUE(marked.status.ok()) << marked.status;
    EXPECT_EQ(marked.text, plain.text) << seed;
  }
}

TEST(EmbedderTest, DeterministicPerSeed) {
  const GenerationResult a = BuiltinEmbedder().Generate("Q", Seeded(7));
  const GenerationResult b = BuiltinEmbedder().Generate("Q", Seeded(7));
  const GenerationResult c = BuiltinEmbedder().Generate("Q", Seeded(8));
  EXPECT_EQ(a.text, b.text);
  EXPECT_NE(a.text, c.text);
}

TEST(EmbedderTest, RejectsEmptyPrompt) {
  EXPECT_EQ(BuiltinEmbedder().Generate("  ", Seeded(1)).status.code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(EmbedderTest, RespectsSentenceAndTokenLimits) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    EmbedConfig config = Seeded(seed);
    config.max_sentences = 3;
    const GenerationResult r = BuiltinEmbedder().Generate("Q", config);
    EXPECT_LE(SplitSentences(r.text).size(), 3u);
    config.max_tokens = 5;
    const GenerationResult t = BuiltinEmbedder().Generate("Q", config);
    EXPECT_LE(t.trace.tokens.size(), 5u);
  }
}

// Keys applied while writing equal the keys recovered from the finished
// text, one per sentence that has a successor.
TEST(EmbedderTest, TraceKeysEqualRecoveredKeys) {
  const Detector detector(testing::StandinLexicon(), testing::BuiltinKeys());
  int multi_sentence = 0;
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const GenerationResult r = BuiltinEmbedder().Generate("Q", Seeded(seed));
    ASSERT_TRUE(r.status.ok());
    const std::vector<Sentence> sentences = SplitSentences(r.text);
    const auto recovered = *detector.RecoverKeys(sentences);
    std::vector<WatermarkKey> present;
    for (const auto& k : recovered) {
      if (k) present.push_back(*k);
    }
    ASSERT_EQ(present.size(), r.trace.keys.size()) << r.text;
    for (size_t i = 0; i < present.size(); ++i) {
      EXPECT_TRUE(present[i].SameControls(r.trace.keys[i]));
      EXPECT_EQ(present[i].source_sentence_index,
                r.trace.keys[i].source_sentence_index);
    }
    multi_sentence += sentences.size() >= 3;
  }
  EXPECT_GT(multi_sentence, 10);
}

TEST(EmbedderTest, TraceEventsAgreeWithMasks) {
  const GenerationResult r = BuiltinEmbedder().Generate("Q", Seeded(12));
  ASSERT_FALSE(r.trace.keys.empty());
  const std::vector<Sentence> sentences = SplitSentences(r.text);
  int starts = 0;
  for (const TokenEvent& e : r.trace.tokens) {
    starts += e.at_start;
    if (e.sentence == 0) {
      EXPECT_EQ(e.feature, Feature::kNone);
      EXPECT_FALSE(e.marked);
      continue;
    }
    const WatermarkKey& key = r.trace.keys[e.sentence - 1];
    const Mask& mask = BuiltinEmbedder().masks().For(key, e.at_start);
    EXPECT_EQ(e.marked, static_cast<bool>(mask.marked[e.token]));
    EXPECT_EQ(e.bias, e.marked ? (e.at_start ? 8.0 : 3.0) : 0.0);
  }
  EXPECT_EQ(starts, static_cast<int>(sentences.size()));
}

// With the default acrostic bias almost every keyed sentence opens with
// its key letter.
TEST(EmbedderTest, AcrosticBiasSteersFirstLetters) {
  int keyed = 0, hits = 0;
  for (uint64_t seed = 100; seed < 140; ++seed) {
    const GenerationResult r = BuiltinEmbedder().Generate("Q", Seeded(seed));
    const std::vector<Sentence> s = SplitSentences(r.text);
    for (const WatermarkKey& key : r.trace.keys) {
      const size_t next = key.source_sentence_index + 1;
      ASSERT_LT(next, s.size());
      ++keyed;
      hits += s[next].first_alpha == key.letter;
    }
  }
  ASSERT_GT(keyed, 50);
  EXPECT_GE(static_cast<double>(hits) / keyed, 0.9);
}

TEST(GenerationTraceTest, JsonlHasHeaderKeysAndTokens) {
  const GenerationResult r = BuiltinEmbedder().Generate("Q", Seeded(12));
  const std::string jsonl = r.trace.ToJsonl(testing::BuiltinMockModel().vocabulary());
  std::vector<nlohmann::json> lines;
  size_t start = 0;
  while (start < jsonl.size()) {
    const size_t end = jsonl.find('\n', start);
    lines.push_back(nlohmann::json::parse(jsonl.substr(start, end - start)));
    start = end + 1;
  }
  ASSERT_EQ(lines.size(), 1 + r.trace.keys.size() + r.trace.tokens.size());
  EXPECT_EQ(lines[0]["type"], "trace");
  EXPECT_EQ(lines[0]["stop_reason"], r.trace.stop_reason);
  EXPECT_EQ(lines[1]["type"], "key");
  EXPECT_EQ(lines[1]["applied_to"], lines[1]["source"].get<int>() + 1);
  EXPECT_EQ(lines.back()["type"], "token");
}

TEST(DecoderTest, SentenceStartKeepsLetterInitialTokens) {
  const MockLanguageModel& model = testing::BuiltinMockModel();
  const Decoder decoder(model);
  TokenDistribution d = model.DistributionAfter(-1);
  decoder.ConstrainSentenceStart(d);
  EXPECT_TRUE(d.Validate().ok());
  for (size_t id = 0; id < d.probs.size(); ++id) {
    const std::string& t = model.vocabulary().token(id);
    if (d.probs[id] > 0 && static_cast<int>(id) != model.stop_token()) {
      EXPECT_TRUE(std::isalpha(static_cast<unsigned char>(t[0]))) << t;
    }
  }
  std::string text;
  decoder.Append(*model.vocabulary().Find("the"), true, text);
  EXPECT_EQ(text, "The");
}

TEST(DecoderTest, SeededSamplingFollowsTheDistribution) {
  const Decoder decoder(testing::BuiltinMockModel());
  TokenDistribution d;
  d.probs.assign(testing::BuiltinMockModel().vocabulary().size(), 0.0);
  d.probs[1] = 0.2;
  d.probs[2] = 0.5;
  d.probs[3] = 0.3;
  std::mt19937_64 rng(5);
  std::vector<int> counts(4, 0);
  const int trials = 30000;
  for (int i = 0; i < trials; ++i) ++counts[decoder.Sample(d, Sampling::kSeeded, rng)];
  double chi2 = 0;
  for (int id = 1; id <= 3; ++id) {
    const double expected = trials * d.probs[id];
    chi2 += (counts[id] - expected) * (counts[id] - expected) / expected;
  }
  EXPECT_EQ(counts[0], 0);
  EXPECT_LT(chi2, 13.8);  // 2 degrees of freedom, p = 0.001
  EXPECT_EQ(decoder.Sample(d, Sampling::kGreedy, rng), 2);
}

}  // namespace
}  // namespace stylomark
