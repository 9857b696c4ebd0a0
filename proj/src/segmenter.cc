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

#include "stylomark/segmenter.h"

#include "absl/strings/str_cat.h"
#include "stylomark/builtin_data.h"
#include "stylomark/text_util.h"

namespace stylomark {
namespace {

bool IsTerminal(char c) { return c == '.' || c == '!' || c == '?'; }

// Length of a closing quote or bracket at `pos`, or 0.
size_t CloserLength(std::string_view text, size_t pos) {
  const char c = text[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']' || c == '}') return 1;
  if (static_cast<unsigned char>(c) >= 0x80) {
    size_t len = 0;
    const char32_t cp = DecodeUtf8(text, pos, &len);
    // right single/double quotation marks, right guillemet
    if (cp == 0x2019 || cp == 0x201D || cp == 0xBB) return len;
  }
  return 0;
}

// Leading characters to ignore when matching an abbreviation token.
bool IsOpener(char c) {
  return c == '"' || c == '\'' || c == '(' || c == '[' || c == '{';
}

struct TerminalRun {
  size_t run_end = 0;  // one past the last terminal character
  size_t end = 0;      // one past trailing closers
};

TerminalRun ScanTerminalRun(std::string_view text, size_t start) {
  TerminalRun run;
  size_t j = start;
  while (j < text.size() && IsTerminal(text[j])) ++j;
  run.run_end = j;
  while (j < text.size()) {
    const size_t len = CloserLength(text, j);
    if (len == 0) break;
    j += len;
  }
  run.end = j;
  return run;
}

// Whether the terminal run starting at `start` closes a listed abbreviation.
bool ClosesAbbreviation(std::string_view text, size_t start,
                        const TerminalRun& run,
                        const AbbreviationList& abbreviations) {
  if (run.run_end != start + 1 || text[start] != '.') return false;
  size_t token_begin = start;
  while (token_begin > 0 && !IsAsciiSpace(text[token_begin - 1])) {
    --token_begin;
  }
  while (token_begin < start && IsOpener(text[token_begin])) ++token_begin;
  return abbreviations.Contains(
      text.substr(token_begin, run.run_end - token_begin));
}

}  // namespace

absl::StatusOr<AbbreviationList> AbbreviationList::Parse(
    std::string_view text) {
  AbbreviationList list;
  size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = StripAsciiWhitespace(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      line.remove_prefix(1);
      line = StripAsciiWhitespace(line);
      constexpr std::string_view kTag = "version:";
      if (line.substr(0, kTag.size()) == kTag) {
        list.version_ = std::string(StripAsciiWhitespace(line.substr(kTag.size())));
      }
      continue;
    }
    if (line.back() != '.' ||
        line.find_first_of(" \t") != std::string_view::npos) {
      return absl::InvalidArgumentError(absl::StrCat(
          "abbreviation line ", line_no, ": '", ToAbsl(line),
          "' must be a single token ending in '.'"));
    }
    list.tokens_.insert(CaseFold(line));
  }
  return list;
}

const AbbreviationList& AbbreviationList::Builtin() {
  static const AbbreviationList* const kBuiltin = [] {
    absl::StatusOr<AbbreviationList> list = Parse(builtin::abbreviations());
    return new AbbreviationList(*std::move(list));
  }();
  return *kBuiltin;
}

bool AbbreviationList::Contains(std::string_view token) const {
  return tokens_.count(CaseFold(token)) > 0;
}

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> words;
  // Code points of the current raw token: (byte offset, length, alnum).
  struct Unit {
    size_t pos;
    size_t len;
    bool alnum;
  };
  std::vector<Unit> units;
  const auto flush = [&] {
    size_t first = 0;
    size_t last = units.size();
    while (first < last && !units[first].alnum) ++first;
    while (last > first && !units[last - 1].alnum) --last;
    if (first < last) {
      const size_t begin = units[first].pos;
      const size_t end = units[last - 1].pos + units[last - 1].len;
      words.push_back(CaseFold(text.substr(begin, end - begin)));
    }
    units.clear();
  };
  size_t pos = 0;
  while (pos < text.size()) {
    size_t len = 0;
    const char32_t cp = DecodeUtf8(text, pos, &len);
    if ((cp < 0x80 && IsAsciiSpace(static_cast<char>(cp))) ||
        IsDashSeparator(cp) || cp == 0xA0) {
      flush();
    } else {
      units.push_back({pos, len, IsAlnumCodePoint(cp)});
    }
    pos += len;
  }
  flush();
  return words;
}

std::optional<char> FirstAlpha(const std::vector<std::string>& words) {
  for (const std::string& word : words) {
    if (!word.empty() && IsAsciiAlpha(word.front())) {
      return AsciiLower(word.front());
    }
  }
  return std::nullopt;
}

std::vector<Sentence> SplitSentences(std::string_view text,
                                     const AbbreviationList& abbreviations) {
  std::vector<Sentence> sentences;
  const auto emit = [&](size_t begin, size_t end) {
    Sentence s;
    s.text = std::string(text.substr(begin, end - begin));
    s.index = static_cast<int>(sentences.size());
    s.begin = begin;
    s.end = end;
    s.words = Words(s.text);
    s.first_alpha = FirstAlpha(s.words);
    sentences.push_back(std::move(s));
  };

  size_t begin = 0;
  while (begin < text.size() && IsAsciiSpace(text[begin])) ++begin;
  size_t i = begin;
  while (i < text.size()) {
    if (!IsTerminal(text[i])) {
      ++i;
      continue;
    }
    const TerminalRun run = ScanTerminalRun(text, i);
    size_t next = run.end;
    while (next < text.size() && IsAsciiSpace(text[next])) ++next;
    const bool followed_ok =
        next == text.size() || (next > run.end && IsAsciiUpper(text[next]));
    if (followed_ok && !ClosesAbbreviation(text, i, run, abbreviations)) {
      emit(begin, run.end);
      begin = next;
      i = next;
    } else {
      i = run.end;
    }
  }
  if (begin < text.size()) {
    size_t end = text.size();
    while (end > begin && IsAsciiSpace(text[end - 1])) --end;
    emit(begin, end);
  }
  return sentences;
}

bool EndsAtBoundary(std::string_view text,
                    const AbbreviationList& abbreviations) {
  size_t end = text.size();
  while (end > 0 && IsAsciiSpace(text[end - 1])) --end;
  if (end == 0) return false;
  text = text.substr(0, end);
  // Find the start of the trailing terminal run, skipping closers.
  size_t j = text.size();
  while (j > 0) {
    if (IsTerminal(text[j - 1])) break;
    // Step back over one closer, ASCII or a multi-byte quote.
    size_t k = j - 1;
    while (k > 0 && (static_cast<unsigned char>(text[k]) & 0xC0) == 0x80) --k;
    if (CloserLength(text, k) != j - k) return false;
    j = k;
  }
  if (j == 0) return false;
  size_t start = j - 1;
  while (start > 0 && IsTerminal(text[start - 1])) --start;
  const TerminalRun run = ScanTerminalRun(text, start);
  if (run.end != text.size()) return false;
  return !ClosesAbbreviation(text, start, run, abbreviations);
}

}  // namespace stylomark
