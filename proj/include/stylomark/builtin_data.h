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

#ifndef STYLOMARK_BUILTIN_DATA_H_
#define STYLOMARK_BUILTIN_DATA_H_

#include <string_view>

// Data files compiled into the library so embed and detect agree on them
// without any path configuration.
namespace stylomark::builtin {

std::string_view labels();
std::string_view seed_terms();
std::string_view abbreviations();
std::string_view prompts();
std::string_view mock_corpus();

}  // namespace stylomark::builtin

#endif  // STYLOMARK_BUILTIN_DATA_H_
