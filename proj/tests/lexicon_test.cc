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
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "absl/strings/str_cat.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace stylomark {
namespace {

using ::testing::HasSubstr;

std::string Header() {
  return "Word,Auditory.mean,Gustatory.mean,Haptic.mean,Interoceptive.mean,"
         "Olfactory.mean,Visual.mean,Foot_leg.mean,Hand_arm.mean,Head.mean,"
         "Mouth.mean,Torso.mean\n";
}

std::string Row(const std::string& word, double v) {
  std::string row = word;
  for (int c = 0; c < kNumSensorCategories; ++c) absl::StrAppend(&row, ",", v);
  return row + "\n";
}

TEST(LexiconTest, PopulationStatistics) {
  const NormLexicon lex = testing::TinyLexicon({{"a", 1}, {"b", 2}, {"c", 3}});
  for (SensorCategory c : AllSensorCategories()) {
    EXPECT_DOUBLE_EQ(lex.Stats(c).mean, 2.0);
    EXPECT_DOUBLE_EQ(lex.Stats(c).stddev, std::sqrt(2.0 / 3.0));
  }
}

TEST(LexiconTest, ParsesLancasterHeader) {
  const std::string csv = Header() + Row("Apple", 1) + Row("pear", 2.5);
  absl::StatusOr<NormLexicon> lex =
      NormLexicon::Parse(csv, ColumnMap::Lancaster());
  ASSERT_TRUE(lex.ok()) << lex.status();
  EXPECT_EQ(lex->size(), 2u);
  EXPECT_EQ(*lex->Rating("APPLE", SensorCategory::kVisual), 1.0);
  EXPECT_FALSE(lex->Rating("plum", SensorCategory::kVisual).has_value());
  EXPECT_EQ(lex->fingerprint().size(), 64u);
}

TEST(LexiconTest, MissingColumnIsError) {
  absl::StatusOr<NormLexicon> lex =
      NormLexicon::Parse("Word,Auditory.mean\nx,1\n", ColumnMap::Lancaster());
  ASSERT_FALSE(lex.ok());
  EXPECT_THAT(std::string(lex.status().message()),
              HasSubstr("missing column 'Gustatory.mean'"));
}

TEST(LexiconTest, NonNumericRatingIsErrorWithLine) {
  std::string csv = Header() + Row("a", 1);
  csv += "b,1,1,1,1,1,x,1,1,1,1,1\n";
  absl::StatusOr<NormLexicon> lex =
      NormLexicon::Parse(csv, ColumnMap::Lancaster());
  ASSERT_FALSE(lex.ok());
  EXPECT_THAT(std::string(lex.status().message()), HasSubstr("line 3"));
  EXPECT_THAT(std::string(lex.status().message()), HasSubstr("Visual.mean"));
}

TEST(LexiconTest, NegativeRatingIsError) {
  const std::string csv = Header() + Row("a", 1) + Row("b", -1);
  EXPECT_FALSE(NormLexicon::Parse(csv, ColumnMap::Lancaster()).ok());
}

TEST(LexiconTest, EmptyFileIsError) {
  EXPECT_FALSE(NormLexicon::Parse("", ColumnMap::Lancaster()).ok());
  EXPECT_FALSE(NormLexicon::Parse(Header(), ColumnMap::Lancaster()).ok());
}

TEST(LexiconTest, ZeroVarianceIsError) {
  const std::string csv = Header() + Row("a", 2) + Row("b", 2);
  absl::StatusOr<NormLexicon> lex =
      NormLexicon::Parse(csv, ColumnMap::Lancaster());
  ASSERT_FALSE(lex.ok());
  EXPECT_THAT(std::string(lex.status().message()), HasSubstr("zero variance"));
}

TEST(LexiconTest, MultiWordAndDuplicateRowsWarn) {
  const std::string csv =
      Header() + Row("a", 1) + Row("ice cream", 3) + Row("A", 5) + Row("b", 2);
  absl::StatusOr<NormLexicon> lex =
      NormLexicon::Parse(csv, ColumnMap::Lancaster());
  ASSERT_TRUE(lex.ok()) << lex.status();
  EXPECT_EQ(lex->size(), 2u);
  EXPECT_EQ(*lex->Rating("a", SensorCategory::kAuditory), 1.0);  // first wins
  std::vector<int> lines;
  for (const IngestWarning& w : lex->warnings()) {
    if (w.line > 0) lines.push_back(w.line);
  }
  EXPECT_THAT(lines, ::testing::ElementsAre(3, 4));
}

TEST(LexiconTest, ColumnMapRemapsNames) {
  absl::StatusOr<ColumnMap> map = ColumnMap::Parse(
      "[lexicon]\nword = term\ndelimiter = tab\n"
      "auditory = A\ngustatory = G\nhaptic = H\ninteroceptive = I\n"
      "olfactory = O\nvisual = V\nfoot_leg = F\nhand_arm = HA\nhead = HE\n"
      "mouth = M\ntorso = T\n");
  ASSERT_TRUE(map.ok()) << map.status();
  const std::string tsv =
      "term\tA\tG\tH\tI\tO\tV\tF\tHA\tHE\tM\tT\n"
      "x\t0\t2\t2\t3\t4\t5\t6\t7\t8\t9\t10\n"
      "y\t1\t1\t1\t1\t1\t1\t1\t1\t1\t1\t1\n";
  absl::StatusOr<NormLexicon> lex = NormLexicon::Parse(tsv, *map);
  ASSERT_TRUE(lex.ok()) << lex.status();
  EXPECT_EQ(*lex->Rating("x", SensorCategory::kTorso), 10.0);
  EXPECT_EQ(*lex->Rating("x", SensorCategory::kHandArm), 7.0);
  EXPECT_FALSE(ColumnMap::Parse("colour = x\n").ok());
}

TEST(LexiconTest, CategoryNamesRoundTrip) {
  for (SensorCategory c : AllSensorCategories()) {
    EXPECT_EQ(*ParseSensorCategory(SensorCategoryName(c)), c);
  }
  EXPECT_EQ(*ParseSensorCategory("Foot/Leg"), SensorCategory::kFootLeg);
  EXPECT_EQ(*ParseSensorCategory("Vision"), SensorCategory::kVisual);
  EXPECT_FALSE(ParseSensorCategory("balance").ok());
}

// Independent statement of the threshold rule over distinct values.
double OracleThreshold(std::vector<double> ratings) {
  const double n = static_cast<double>(ratings.size());
  std::sort(ratings.begin(), ratings.end());
  std::vector<double> distinct = ratings;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const auto frac = [&](double v) {
    return static_cast<double>(ratings.end() -
                               std::lower_bound(ratings.begin(), ratings.end(), v)) /
           n;
  };
  for (size_t i = 0; i < distinct.size(); ++i) {
    if (frac(distinct[i]) <= kMatchTargetFraction) {
      if (frac(distinct[i]) < kMatchBandLow && i > 0 &&
          frac(distinct[i - 1]) <= kMatchBandHigh) {
        return distinct[i - 1];
      }
      return distinct[i];
    }
  }
  return distinct.back();
}

TEST(LexiconTest, ThresholdMatchesOracleOnRandomLexicons) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 20 + static_cast<int>(rng() % 300);
    const int levels = 2 + static_cast<int>(rng() % 40);
    std::vector<NormEntry> entries(n);
    for (int i = 0; i < n; ++i) {
      entries[i].word = absl::StrCat("w", i);
      for (int c = 0; c < kNumSensorCategories; ++c) {
        entries[i].ratings[c] = static_cast<double>(rng() % levels) / 8.0;
      }
    }
    entries[0].ratings.fill(0.0);
    entries[1].ratings.fill(1.0);
    absl::StatusOr<NormLexicon> lex = NormLexicon::FromEntries(entries);
    ASSERT_TRUE(lex.ok()) << lex.status();
    for (SensorCategory c : AllSensorCategories()) {
      std::vector<double> ratings;
      for (const NormEntry& e : lex->entries()) ratings.push_back(e.ratings[Index(c)]);
      const double tau = OracleThreshold(ratings);
      EXPECT_EQ(lex->MatchThreshold(c), tau);
      const double matched = static_cast<double>(
          std::count_if(ratings.begin(), ratings.end(),
                        [&](double r) { return r >= tau; }));
      EXPECT_DOUBLE_EQ(lex->MatchFraction(c), matched / ratings.size());
    }
  }
}

TEST(LexiconTest, IsMatchAgreesWithThreshold) {
  const NormLexicon& lex = testing::StandinLexicon();
  for (SensorCategory c : AllSensorCategories()) {
    const double tau = lex.MatchThreshold(c);
    int matched = 0;
    for (const NormEntry& e : lex.entries()) {
      const bool m = lex.IsMatch(e.word, c);
      EXPECT_EQ(m, e.ratings[Index(c)] >= tau);
      matched += m;
    }
    EXPECT_DOUBLE_EQ(lex.MatchFraction(c),
                     static_cast<double>(matched) / lex.size());
  }
}

TEST(LexiconTest, DominantCategoryTiesToLowestIndex) {
  NormEntry e;
  e.word = "x";
  e.ratings.fill(1.0);
  e.ratings[Index(SensorCategory::kVisual)] = 3.0;
  e.ratings[Index(SensorCategory::kHead)] = 3.0;
  const NormLexicon lex = testing::TinyLexicon({{"a", 1}, {"b", 2}});
  EXPECT_EQ(lex.DominantCategory(e), SensorCategory::kVisual);
}

TEST(LexiconTest, NearestByRatingBruteForce) {
  const NormLexicon& lex = testing::StandinLexicon();
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const NormEntry& e = lex.entries()[rng() % lex.size()];
    const SensorCategory c = SensorCategoryAt(static_cast<int>(rng() % 11));
    const double own = e.ratings[Index(c)];
    const NormEntry* got = lex.NearestByRating(e.word, c);
    ASSERT_NE(got, nullptr);
    EXPECT_NE(got->word, e.word);
    double best = INFINITY;
    for (const NormEntry& other : lex.entries()) {
      if (other.word == e.word) continue;
      best = std::min(best, std::fabs(other.ratings[Index(c)] - own));
    }
    EXPECT_EQ(std::fabs(got->ratings[Index(c)] - own), best);
  }
  EXPECT_EQ(lex.NearestByRating("notaword-xyz", SensorCategory::kVisual), nullptr);
}

TEST(LexiconTest, NearestByRatingPrefersLowerOnTie) {
  const NormLexicon lex =
      testing::TinyLexicon({{"low", 1.0}, {"mid", 2.0}, {"high", 3.0}});
  EXPECT_EQ(lex.NearestByRating("mid", SensorCategory::kAuditory)->word, "low");
  EXPECT_EQ(lex.NearestByRating("low", SensorCategory::kAuditory)->word, "mid");
  EXPECT_EQ(lex.NearestByRating("high", SensorCategory::kAuditory)->word, "mid");
}

TEST(LexiconTest, StandinIngestsWithinBand) {
  const NormLexicon& lex = testing::StandinLexicon();
  EXPECT_NEAR(static_cast<double>(lex.size()), 40000.0, 400.0);
  for (SensorCategory c : AllSensorCategories()) {
    EXPECT_GT(lex.Stats(c).stddev, 0.0);
    EXPECT_TRUE(lex.MatchBandOk(c)) << SensorCategoryName(c);
  }
}

}  // namespace
}  // namespace stylomark
