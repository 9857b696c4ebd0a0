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

#ifndef STYLOMARK_VERSION_H_
#define STYLOMARK_VERSION_H_

namespace stylomark {

inline constexpr char kVersion[] = "0.1.0";
// Wire protocol spoken with the classifier and distribution services.
inline constexpr char kProtocolVersion[] = "v1";
// Schema of trace, report and records files.
inline constexpr char kRecordSchema[] = "stylomark-records-v1";

}  // namespace stylomark

#endif  // STYLOMARK_VERSION_H_
