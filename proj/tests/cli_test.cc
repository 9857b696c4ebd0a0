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

#include "cli.h"

#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "stylomark/text_util.h"
#include "test_support.h"

namespace stylomark {
namespace {

using ::testing::HasSubstr;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult RunCli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "stylomark");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::Run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Embed(const std::string& out_path, int seed) {
  const CliResult r = RunCli({"embed", "--prompt", "Tell me about rivers.",
                              "--seed", std::to_string(seed), "--out", out_path});
  EXPECT_EQ(r.code, 0) << r.err;
  return r.out;
}

TEST(CliTest, HelpAndVersionExitZero) {
  const CliResult help = RunCli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_THAT(help.out, HasSubstr("embed"));
  EXPECT_EQ(RunCli({"detect", "--help"}).code, 0);
  const CliResult version = RunCli({"--version"});
  EXPECT_EQ(version.code, 0);
  EXPECT_THAT(version.out, HasSubstr("stylomark 0.1.0"));
  EXPECT_THAT(version.out, HasSubstr("seeds-v2"));
}

TEST(CliTest, UsageErrorsExit64) {
  EXPECT_EQ(RunCli({"--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"embed", "--seed", "notanumber"}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, cli::kExitUsage);
}

TEST(CliTest, EmbedThenDetectIsWatermarked) {
  const std::string path = testing::TempPath("embed.txt");
  const std::string text = Embed(path, 11);
  EXPECT_EQ(*ReadFile(path), text);
  EXPECT_TRUE(ReadFile(path + ".trace.jsonl").ok());
  EXPECT_TRUE(ReadFile(path + ".config.ini").ok());

  const CliResult detect = RunCli({"detect", "--in", path});
  EXPECT_EQ(detect.code, cli::kExitWatermarked) << detect.out << detect.err;
  EXPECT_THAT(detect.out, HasSubstr("WATERMARKED"));

  const CliResult piped = RunCli({"detect", "--in", "-", "--json"}, text);
  EXPECT_EQ(piped.code, cli::kExitWatermarked);
  EXPECT_EQ(nlohmann::json::parse(piped.out)["decision"], "watermarked");
}

TEST(CliTest, PlainTextIsNotWatermarked) {
  const std::string text =
      "The meeting ran long. Everyone went home afterwards. Nobody said much "
      "about it. The next day was quiet. Work resumed as usual.";
  const CliResult r = RunCli({"detect", "--in", "-"}, text);
  EXPECT_EQ(r.code, cli::kExitNotWatermarked) << r.out << r.err;
}

TEST(CliTest, ShortTextIsInsufficient) {
  const CliResult r = RunCli({"detect", "--in", "-"}, "Only one sentence here.");
  EXPECT_EQ(r.code, cli::kExitInsufficientText);
  EXPECT_THAT(r.err, HasSubstr("insufficient text"));
}

TEST(CliTest, MissingInputFileFails) {
  EXPECT_EQ(RunCli({"detect", "--in", "/nonexistent/x.txt"}).code,
            cli::kExitFailure);
}

TEST(CliTest, ResolvedConfigReplaysTheRun) {
  const std::string first = testing::TempPath("first.txt");
  const std::string text = Embed(first, 5);
  const std::string config = first + ".config.ini";
  const std::string ini = *ReadFile(config);
  EXPECT_THAT(ini, HasSubstr("[embed]"));
  EXPECT_THAT(ini, HasSubstr("seed = \"5\""));
  EXPECT_THAT(ini, HasSubstr("bias-sensor = \"3"));
  const CliResult replay = RunCli(
      {"embed", "--config", config, "--out", testing::TempPath("second.txt")});
  EXPECT_EQ(replay.code, 0) << replay.err;
  EXPECT_EQ(replay.out, text);
}

TEST(CliTest, CommandLineWinsOverConfigAndConflictIsLogged) {
  const std::string config = testing::TempPath("conflict.ini");
  ASSERT_TRUE(WriteFile(config, "[embed]\nseed = 3\nprompt = \"Hello.\"\n").ok());
  const CliResult r = RunCli({"embed", "--config", config, "--seed", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_THAT(r.err, HasSubstr("conflicts with the command line; using 4"));
  const CliResult direct = RunCli({"embed", "--prompt", "Hello.", "--seed", "4"});
  EXPECT_EQ(r.out, direct.out);
}

TEST(CliTest, UnknownConfigKeyIsUsageError) {
  const std::string config = testing::TempPath("unknown.ini");
  ASSERT_TRUE(WriteFile(config, "[embed]\ncolour = blue\n").ok());
  EXPECT_EQ(RunCli({"embed", "--config", config}).code, cli::kExitUsage);
}

TEST(CliTest, AttackPipesIntoDetect) {
  const std::string path = testing::TempPath("attack_src.txt");
  const std::string text = Embed(path, 21);
  const CliResult attacked =
      RunCli({"attack", "--in", "-", "--kind", "drop-sentences:0.25", "--seed", "2"},
             text);
  ASSERT_EQ(attacked.code, 0) << attacked.err;
  EXPECT_LT(attacked.out.size(), text.size());
  const CliResult detect = RunCli({"detect", "--in", "-"}, attacked.out);
  EXPECT_TRUE(detect.code == cli::kExitWatermarked ||
              detect.code == cli::kExitNotWatermarked ||
              detect.code == cli::kExitInsufficientText);
  EXPECT_EQ(RunCli({"attack", "--in", "-", "--kind", "cyclic-translation"}, text).code,
            cli::kExitFailure);
}

TEST(CliTest, EvalWritesRecordsTableAndPlot) {
  const std::string prompts = testing::TempPath("prompts.txt");
  ASSERT_TRUE(WriteFile(prompts, "# corpus-version: cli-test\nOne?\nTwo?\n").ok());
  const std::string records = testing::TempPath("run.jsonl");
  const CliResult r =
      RunCli({"eval", "--prompts", prompts, "--samples", "2", "--out", records,
              "--table", records + ".table", "--plot", records + ".csv",
              "--min-sentences", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_THAT(r.out, HasSubstr("# decision threshold (1 - alpha): 0.95"));
  EXPECT_EQ(*ReadFile(records + ".table"), r.out);
  EXPECT_THAT(*ReadFile(records), HasSubstr("\"type\":\"header\""));
  EXPECT_TRUE(ReadFile(records + ".csv").ok());
}

TEST(CliTest, LexiconStatsReportsEveryCategory) {
  const CliResult r = RunCli({"lexicon-stats"});
  ASSERT_EQ(r.code, 0) << r.err;
  int lines = 0;
  for (size_t pos = 0; (pos = r.out.find('\n', pos)) != std::string::npos; ++pos) {
    ++lines;
  }
  EXPECT_EQ(lines, 12);
  EXPECT_THAT(r.out, HasSubstr("\"name\":\"visual\""));
}

}  // namespace
}  // namespace stylomark
