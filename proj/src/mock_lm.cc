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

#include "stylomark/mock_lm.h"

#include <map>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "stylomark/segmenter.h"
#include "stylomark/text_util.h"

namespace stylomark {
namespace {

std::vector<std::vector<std::string>> Paragraphs(std::string_view corpus) {
  std::vector<std::vector<std::string>> paragraphs(1);
  for (absl::string_view line : absl::StrSplit(ToAbsl(corpus), '\n')) {
    if (StripAsciiWhitespace(ToStd(line)).empty()) {
      if (!paragraphs.back().empty()) paragraphs.emplace_back();
      continue;
    }
    for (absl::string_view tok :
         absl::StrSplit(line, absl::ByAnyChar(" \t\r\f\v"), absl::SkipEmpty())) {
      paragraphs.back().emplace_back(tok);
    }
  }
  if (paragraphs.back().empty()) paragraphs.pop_back();
  return paragraphs;
}

}  // namespace

absl::StatusOr<MockLanguageModel> MockLanguageModel::Build(
    std::string_view corpus, const MockLmOptions& options) {
  const std::vector<std::vector<std::string>> paragraphs = Paragraphs(corpus);
  std::vector<std::string> tokens = {std::string(kStopToken)};
  std::unordered_map<std::string, int> ids = {{tokens[0], 0}};
  size_t corpus_tokens = 0;
  for (const auto& p : paragraphs) {
    for (const std::string& t : p) {
      if (ids.emplace(t, static_cast<int>(tokens.size())).second) {
        tokens.push_back(t);
      }
    }
    corpus_tokens += p.size();
  }
  if (corpus_tokens < options.min_tokens) {
    return absl::InvalidArgumentError(
        absl::StrCat("corpus has ", corpus_tokens, " tokens; at least ",
                     options.min_tokens, " required"));
  }

  MockLanguageModel model;
  absl::StatusOr<Vocabulary> vocab = Vocabulary::Create(std::move(tokens));
  if (!vocab.ok()) return vocab.status();
  model.vocab_ = *std::move(vocab);
  const size_t v = model.vocab_.size();
  model.ends_sentence_.resize(v, false);
  for (size_t id = 1; id < v; ++id) {
    model.ends_sentence_[id] = EndsAtBoundary(model.vocab_.token(id));
  }

  std::vector<size_t> unigram_counts(v, 0);
  std::map<int, std::map<int, size_t>> bigram;  // context -1 = start
  for (const auto& p : paragraphs) {
    int context = -1;
    for (const std::string& t : p) {
      const int id = ids.at(t);
      ++bigram[context][id];
      ++unigram_counts[id];
      context = model.ContextAfter(id);
    }
    ++bigram[context][0];
    ++unigram_counts[0];
  }
  size_t n = 0;
  for (size_t c : unigram_counts) n += c;
  model.total_ = n;
  model.unigram_.resize(v);
  for (size_t id = 0; id < v; ++id) {
    model.unigram_[id] = static_cast<double>(unigram_counts[id] + 1) /
                         static_cast<double>(n + v);
  }
  model.successors_.resize(v);
  for (const auto& [context, next] : bigram) {
    Successors& s = context < 0 ? model.start_ : model.successors_[context];
    for (const auto& [id, count] : next) {
      s.counts.emplace_back(id, count);
      s.total += count;
    }
  }
  model.fingerprint_ = Sha256Hex(corpus).substr(0, 16);
  return model;
}

int MockLanguageModel::ContextAfter(int token) const {
  return ends_sentence_[token] ? -1 : token;
}

TokenDistribution MockLanguageModel::DistributionAfter(int context) const {
  const Successors& s = context < 0 ? start_ : successors_[context];
  TokenDistribution dist;
  if (s.total == 0) {
    dist.probs = unigram_;
    return dist;
  }
  const double c = static_cast<double>(s.total);
  const double types = static_cast<double>(s.counts.size());
  const double lambda = c / (c + types);
  dist.probs.resize(unigram_.size());
  for (size_t id = 0; id < unigram_.size(); ++id) {
    dist.probs[id] = (1.0 - lambda) * unigram_[id];
  }
  for (const auto& [id, count] : s.counts) {
    dist.probs[id] += lambda * static_cast<double>(count) / c;
  }
  return dist;
}

absl::StatusOr<TokenDistribution> MockLanguageModel::NextDistribution(
    std::string_view /*prompt*/, const std::vector<int>& generated) const {
  int context = -1;
  if (!generated.empty()) {
    const int last = generated.back();
    if (last < 0 || static_cast<size_t>(last) >= vocab_.size()) {
      return absl::InvalidArgumentError(absl::StrCat("token id ", last,
                                                     " outside vocabulary"));
    }
    context = ContextAfter(last);
  }
  return DistributionAfter(context);
}

std::string MockLanguageModel::Describe() const {
  return absl::StrCat("mock-bigram/", fingerprint_);
}

}  // namespace stylomark
