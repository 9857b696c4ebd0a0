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
#include <cctype>
#include <cmath>
#include <map>
#include <set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "stylomark/generator.h"
#include "test_support.h"

namespace stylomark {
namespace {

using json = nlohmann::json;

std::vector<std::string> SentenceTexts(std::string_view text) {
  std::vector<std::string> out;
  for (const Sentence& s : SplitSentences(text)) out.push_back(s.text);
  return out;
}

std::vector<std::string> MockTexts(int count) {
  std::vector<std::string> texts;
  for (int seed = 0; seed < count; ++seed) {
    EmbedConfig config;
    config.seed = 500 + seed;
    texts.push_back(GeneratePlain(testing::BuiltinMockModel(), "Q", config).text);
  }
  return texts;
}

TEST(AttackSpecTest, ParsesAndRoundTrips) {
  for (const char* text :
       {"none", "pseudo-translation:0.2", "drop-sentences:0.25",
        "shuffle-sentences", "synonym-swap:0.1", "cyclic-translation:de"}) {
    absl::StatusOr<AttackSpec> spec = AttackSpec::Parse(text);
    ASSERT_TRUE(spec.ok()) << text << " " << spec.status();
    EXPECT_EQ(spec->ToString(), text);
  }
  EXPECT_EQ(AttackSpec::Parse("cyclic-translation")->pivot, "es");
  EXPECT_DOUBLE_EQ(AttackSpec::Parse("pseudo-translation:0.2")->fraction, 0.2);
}

TEST(AttackSpecTest, RejectsBadSpecs) {
  for (const char* text : {"paraphrase", "pseudo-translation:1.5",
                           "drop-sentences:-0.1", "synonym-swap:abc",
                           "shuffle-sentences:0.3", "none:1"}) {
    EXPECT_FALSE(AttackSpec::Parse(text).ok()) << text;
  }
}

TEST(PseudoTranslateTest, ZeroIntensityIsIdentity) {
  for (const std::string& text : MockTexts(5)) {
    EXPECT_EQ(PseudoTranslate(text, 1, 0.0, testing::StandinLexicon()), text);
  }
}

TEST(PseudoTranslateTest, KeepsSentencesAndWordCounts) {
  int changed_words = 0, total_words = 0;
  for (const std::string& text : MockTexts(40)) {
    const std::string attacked =
        PseudoTranslate(text, 9, 0.2, testing::StandinLexicon());
    EXPECT_EQ(attacked, PseudoTranslate(text, 9, 0.2, testing::StandinLexicon()));
    const std::vector<Sentence> before = SplitSentences(text);
    const std::vector<Sentence> after = SplitSentences(attacked);
    ASSERT_EQ(before.size(), after.size()) << text << "\n" << attacked;
    for (size_t i = 0; i < before.size(); ++i) {
      ASSERT_EQ(before[i].words.size(), after[i].words.size());
      for (size_t w = 0; w < before[i].words.size(); ++w) {
        changed_words += before[i].words[w] != after[i].words[w];
        ++total_words;
      }
    }
  }
  ASSERT_GT(total_words, 1000);
  const double rate = static_cast<double>(changed_words) / total_words;
  EXPECT_GT(rate, 0.12);
  EXPECT_LT(rate, 0.22);
}

TEST(PseudoTranslateTest, KeepsCaseAndPunctuation) {
  const std::string attacked = PseudoTranslate(
      "\"Qqqz,\" said Zzyq. Wwxq!", 3, 1.0, testing::StandinLexicon());
  ASSERT_EQ(SentenceTexts(attacked).size(), 2u) << attacked;
  EXPECT_EQ(attacked.front(), '"');
  EXPECT_TRUE(std::isupper(static_cast<unsigned char>(attacked[1]))) << attacked;
  EXPECT_EQ(attacked.back(), '!');
}

TEST(SynonymSwapTest, TouchesOnlyLexiconWords) {
  const NormLexicon& lex = testing::StandinLexicon();
  for (const std::string& text : MockTexts(20)) {
    const std::vector<Sentence> before = SplitSentences(text);
    const std::vector<Sentence> after = SplitSentences(SynonymSwap(text, 4, 0.5, lex));
    ASSERT_EQ(before.size(), after.size());
    for (size_t i = 0; i < before.size(); ++i) {
      ASSERT_EQ(before[i].words.size(), after[i].words.size());
      for (size_t w = 0; w < before[i].words.size(); ++w) {
        if (before[i].words[w] != after[i].words[w]) {
          EXPECT_NE(lex.Find(before[i].words[w]), nullptr);
          EXPECT_NE(lex.Find(after[i].words[w]), nullptr);
        }
      }
    }
  }
}

TEST(DropSentencesTest, DropsFloorOfFractionAndKeepsOrder) {
  const std::string text = "One a. Two b. Three c. Four d. Five e. Six f. Seven g.";
  const std::vector<std::string> all = SentenceTexts(text);
  for (double fraction : {0.0, 0.1, 0.25, 0.5, 0.99, 1.0}) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const std::vector<int> dropped = DroppedSentenceIndices(7, fraction, seed);
      EXPECT_EQ(dropped.size(), static_cast<size_t>(std::floor(fraction * 7)));
      EXPECT_TRUE(std::is_sorted(dropped.begin(), dropped.end()));
      std::vector<std::string> want;
      for (int i = 0; i < 7; ++i) {
        if (!std::binary_search(dropped.begin(), dropped.end(), i)) {
          want.push_back(all[i]);
        }
      }
      EXPECT_EQ(SentenceTexts(DropSentences(text, fraction, seed)), want);
    }
  }
}

TEST(ShuffleSentencesTest, IsAUniformPermutation) {
  std::map<std::vector<int>, int> counts;
  const int trials = 6000;
  for (int seed = 0; seed < trials; ++seed) {
    const std::vector<int> p = SentencePermutation(3, seed);
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    ASSERT_EQ(sorted, (std::vector<int>{0, 1, 2}));
    ++counts[p];
  }
  ASSERT_EQ(counts.size(), 6u);
  double chi2 = 0;
  for (const auto& [p, c] : counts) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
  EXPECT_LT(chi2, 20.5);  // 5 degrees of freedom, p = 0.001

  const std::string text = "One a. Two b. Three c. Four d.";
  const std::vector<int> p = SentencePermutation(4, 77);
  const std::vector<std::string> all = SentenceTexts(text);
  std::vector<std::string> want;
  for (int i : p) want.push_back(all[i]);
  EXPECT_EQ(SentenceTexts(ShuffleSentences(text, 77)), want);
}

// Tags text on the way to the pivot language and untags it on the way back.
class UpperTranslator : public Translator {
 public:
  absl::StatusOr<std::string> Translate(std::string_view text,
                                        std::string_view source,
                                        std::string_view target) override {
    ++calls;
    std::string out(text);
    if (target == "en") {
      return out.substr(out.find('|') + 1);
    }
    return std::string(target) + "|" + out + "|" + std::string(source);
  }
  int calls = 0;
};

TEST(TranscriptCacheTest, StoresAndReloads) {
  const std::string path = testing::TempPath("transcripts.jsonl");
  {
    std::unique_ptr<TranscriptCache> cache = *TranscriptCache::Open(path);
    EXPECT_EQ(cache->size(), 0u);
    ASSERT_TRUE(cache->Store("hello", "en", "es", "hola").ok());
  }
  std::unique_ptr<TranscriptCache> reopened = *TranscriptCache::Open(path);
  EXPECT_EQ(reopened->size(), 1u);
  EXPECT_EQ(reopened->Lookup("hello", "en", "es"), "hola");
  EXPECT_FALSE(reopened->Lookup("hello", "en", "fr").has_value());
  EXPECT_NE(TranscriptCache::Key("a", "en", "es"), TranscriptCache::Key("a", "en", "fr"));
}

TEST(CachedTranslatorTest, ServesFromCacheAndFallsThrough) {
  std::unique_ptr<TranscriptCache> cache =
      *TranscriptCache::Open(testing::TempPath("cache.jsonl"));
  UpperTranslator inner;
  CachedTranslator cached(cache.get(), &inner);
  const CyclicTranscript first = *CyclicTranslate("Some text.", cached, "es");
  EXPECT_EQ(first.text, "Some text.|en");
  EXPECT_EQ(inner.calls, 2);
  const CyclicTranscript again = *CyclicTranslate("Some text.", cached, "es");
  EXPECT_EQ(again.text, first.text);
  EXPECT_EQ(inner.calls, 2);

  CachedTranslator offline(cache.get(), nullptr);
  EXPECT_EQ(offline.Translate("Unseen.", "en", "es").status().code(),
            absl::StatusCode::kUnavailable);
}

TEST(HttpTranslatorTest, TalksToFakeService) {
  testing::FakeServer fake;
  json last;
  fake.server().Post("/", [&last](const httplib::Request& req,
                                  httplib::Response& res) {
    last = json::parse(req.body);
    res.set_content(json{{"text", "[" + last["target"].get<std::string>() + "] " +
                                      last["text"].get<std::string>()}}
                        .dump(),
                    "application/json");
  });
  const std::string endpoint = fake.Start();
  HttpTranslator translator(endpoint);
  Attacker attacker(testing::StandinLexicon(), &translator);
  absl::StatusOr<AttackOutcome> out =
      attacker.Apply("Hi there.", *AttackSpec::Parse("cyclic-translation:fr"));
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_EQ(out->text, "[en] [fr] Hi there.");
  ASSERT_EQ(out->audit.size(), 1u);
  EXPECT_EQ(out->audit[0], "[fr] Hi there.");
  EXPECT_EQ(last["source"], "fr");
}

TEST(AttackerTest, DispatchesAndRequiresTranslator) {
  Attacker attacker(testing::StandinLexicon());
  AttackSpec none;
  EXPECT_EQ(attacker.Apply("Keep me. Please.", none)->text, "Keep me. Please.");
  AttackSpec drop = *AttackSpec::Parse("drop-sentences:0.5");
  drop.seed = 3;
  EXPECT_EQ(attacker.Apply("One a. Two b. Three c. Four d.", drop)->text,
            DropSentences("One a. Two b. Three c. Four d.", 0.5, 3));
  EXPECT_FALSE(attacker.Apply("x", *AttackSpec::Parse("cyclic-translation")).ok());
}

}  // namespace
}  // namespace stylomark
