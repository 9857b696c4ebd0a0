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

#ifndef STYLOMARK_SEGMENTER_H_
#define STYLOMARK_SEGMENTER_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "absl/status/statusor.h"

namespace stylomark {

// Tokens that end in '.' without ending a sentence. Matching is
// case-insensitive on the whole token.
class AbbreviationList {
 public:
  // One token per line; '#' starts a comment. A comment of the form
  // "# version: <id>" sets the list version.
  static absl::StatusOr<AbbreviationList> Parse(std::string_view text);
  // The list compiled into the binary.
  static const AbbreviationList& Builtin();

  bool Contains(std::string_view token) const;
  const std::string& version() const { return version_; }
  size_t size() const { return tokens_.size(); }

 private:
  std::unordered_set<std::string> tokens_;
  std::string version_ = "unversioned";
};

struct Sentence {
  std::string text;
  int index = 0;
  // Byte range of `text` in the source document.
  size_t begin = 0;
  size_t end = 0;
  std::vector<std::string> words;
  std::optional<char> first_alpha;
};

// Word tokens: split on whitespace and on en/em dashes, strip leading and
// trailing non-alphanumerics, ASCII case-fold, drop empties.
std::vector<std::string> Words(std::string_view text);

// Lowercase first letter of the first word that starts with an ASCII
// letter.
std::optional<char> FirstAlpha(const std::vector<std::string>& words);

// A boundary follows a run of '.', '!' or '?' (plus any closing quotes or
// brackets) when the next non-space character is an ASCII capital or the
// text ends. A lone '.' closing a listed abbreviation never ends a
// sentence. Text after the last boundary forms a final sentence.
std::vector<Sentence> SplitSentences(
    std::string_view text,
    const AbbreviationList& abbreviations = AbbreviationList::Builtin());

// True when `text`, ignoring trailing whitespace, ends exactly at a
// sentence boundary, i.e. whatever comes next starts a new sentence
// provided it begins with a capital letter.
bool EndsAtBoundary(
    std::string_view text,
    const AbbreviationList& abbreviations = AbbreviationList::Builtin());

}  // namespace stylomark

#endif  // STYLOMARK_SEGMENTER_H_
