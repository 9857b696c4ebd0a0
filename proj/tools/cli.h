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

#ifndef STYLOMARK_TOOLS_CLI_H_
#define STYLOMARK_TOOLS_CLI_H_

#include <iosfwd>

namespace stylomark::cli {

inline constexpr int kExitNotWatermarked = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInsufficientText = 2;
inline constexpr int kExitWatermarked = 10;
inline constexpr int kExitUsage = 64;

// Entry point for the stylomark command. `in` serves "--in -".
int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace stylomark::cli

#endif  // STYLOMARK_TOOLS_CLI_H_
