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

#ifndef STYLOMARK_TEXT_UTIL_H_
#define STYLOMARK_TEXT_UTIL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace stylomark {

// The installed Abseil has its own string_view type.
inline absl::string_view ToAbsl(std::string_view s) {
  return absl::string_view(s.data(), s.size());
}
inline std::string_view ToStd(absl::string_view s) {
  return std::string_view(s.data(), s.size());
}

// ASCII case folding. Bytes >= 0x80 pass through unchanged.
std::string CaseFold(std::string_view text);

inline bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
inline char AsciiLower(char c) {
  return IsAsciiUpper(c) ? static_cast<char>(c - 'A' + 'a') : c;
}
inline char AsciiUpper(char c) {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

std::string_view StripAsciiWhitespace(std::string_view text);

// Decodes one UTF-8 code point starting at `pos`. Malformed input is
// consumed one byte at a time and reported as U+FFFD.
char32_t DecodeUtf8(std::string_view text, size_t pos, size_t* length);

// Letters and digits. Non-ASCII code points count as alphanumeric unless
// they fall in a punctuation or symbol range.
bool IsAlnumCodePoint(char32_t cp);

// Unicode dashes that separate words (en dash, em dash, horizontal bar).
bool IsDashSeparator(char32_t cp);

// Lines of a text file with '#' comments and blank lines removed.
std::vector<std::string_view> ContentLines(std::string_view text);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, std::string_view contents);

// Hex SHA-256 of `data`.
std::string Sha256Hex(std::string_view data);

// 64-bit mix of a seed with a stream id; used to derive per-item seeds.
uint64_t MixSeed(uint64_t seed, uint64_t stream);

// Uniform double in [0, 1) from a 64-bit random word. Platform independent.
inline double UnitFromBits(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by rejection. `Engine` yields 64-bit words.
template <typename Engine>
uint64_t UniformIndex(Engine& engine, uint64_t n) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % n;
}

}  // namespace stylomark

#endif  // STYLOMARK_TEXT_UTIL_H_
