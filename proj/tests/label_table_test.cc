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
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "stylomark/text_util.h"
#include "test_support.h"

namespace stylomark {
namespace {

using ::testing::HasSubstr;

std::string MinimalTable() {
  std::string tsv = "version\tt-1\n";
  for (int i = 0; i < kNumLetters; ++i) {
    absl::StrAppend(&tsv, "acrostic\tL", i, "\t",
                    std::string(1, static_cast<char>('A' + i)), "\n");
  }
  for (SensorCategory c : AllSensorCategories()) {
    absl::StrAppend(&tsv, "sensor\tS", Index(c), "\t", ToAbsl(SensorCategoryName(c)),
                    "\n");
  }
  return tsv;
}

TEST(LabelTableTest, BuiltinHasFullTable) {
  const LabelTable& table = LabelTable::Builtin();
  ASSERT_EQ(table.acrostic_labels().size(), 26u);
  ASSERT_EQ(table.sensor_labels().size(), 11u);
  std::set<char> letters;
  for (int i = 0; i < 26; ++i) letters.insert(table.LetterAt(i));
  EXPECT_EQ(letters.size(), 26u);
  std::set<SensorCategory> categories;
  for (int i = 0; i < 11; ++i) categories.insert(table.CategoryAt(i));
  EXPECT_EQ(categories.size(), 11u);
  EXPECT_EQ(table.LetterAt(0), 'a');
  EXPECT_EQ(table.CategoryAt(0), SensorCategory::kAuditory);
  EXPECT_EQ(table.seeds_version(), "seeds-v2");
}

TEST(LabelTableTest, BuiltinSeedListsHaveEqualLengths) {
  const LabelTable& table = LabelTable::Builtin();
  for (const std::string& label : table.acrostic_labels()) {
    EXPECT_EQ(table.SeedTerms(label).size(), 60u) << label;
  }
  for (const std::string& label : table.sensor_labels()) {
    EXPECT_EQ(table.SeedTerms(label).size(), 30u) << label;
  }
}

TEST(LabelTableTest, LoadMatchesBuiltin) {
  absl::StatusOr<LabelTable> loaded = LabelTable::Load(
      testing::DataPath("labels.tsv"), testing::DataPath("seed_terms.tsv"));
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  EXPECT_EQ(loaded->acrostic_labels(), LabelTable::Builtin().acrostic_labels());
  EXPECT_EQ(loaded->version(), LabelTable::Builtin().version());
}

TEST(LabelTableTest, ParsesMinimalTableAndSeeds) {
  absl::StatusOr<LabelTable> table =
      LabelTable::Parse(MinimalTable(), "version\ts-1\nacrostic\tL3\tFoo BAR foo\n");
  ASSERT_TRUE(table.ok()) << table.status();
  EXPECT_EQ(table->LetterAt(3), 'd');
  EXPECT_THAT(table->SeedTerms("L3"), ::testing::ElementsAre("foo", "bar"));
  EXPECT_TRUE(table->SeedTerms("L4").empty());
  EXPECT_EQ(table->seeds_version(), "s-1");
}

TEST(LabelTableTest, RejectsMalformedTables) {
  EXPECT_THAT(std::string(LabelTable::Parse("version\tx\n", "").status().message()),
              HasSubstr("26 acrostic and 11 sensor"));
  std::string duplicate = MinimalTable();
  duplicate += "acrostic\tExtra\tA\n";
  EXPECT_FALSE(LabelTable::Parse(duplicate, "").ok());
  std::string no_version = MinimalTable().substr(MinimalTable().find('\n') + 1);
  EXPECT_FALSE(LabelTable::Parse(no_version, "").ok());
  EXPECT_FALSE(
      LabelTable::Parse(MinimalTable() + "taste\tX\tY\n", "").ok());
  EXPECT_FALSE(
      LabelTable::Parse(MinimalTable(), "acrostic\tNope\tword\n").ok());
}

}  // namespace
}  // namespace stylomark
