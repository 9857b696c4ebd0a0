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

#ifndef STYLOMARK_HTTP_CLIENT_H_
#define STYLOMARK_HTTP_CLIENT_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace stylomark {

struct RemoteOptions {
  double connect_timeout_seconds = 5.0;
  double read_timeout_seconds = 60.0;
};

// Minimal JSON-over-HTTP calls. `endpoint` is "http://host:port" with an
// optional path prefix. Transport failures and 5xx replies map to
// Unavailable, 4xx replies to FailedPrecondition.
absl::StatusOr<std::string> HttpGet(const std::string& endpoint,
                                    const std::string& path,
                                    const RemoteOptions& options);
absl::StatusOr<std::string> HttpPostJson(const std::string& endpoint,
                                         const std::string& path,
                                         const std::string& body,
                                         const RemoteOptions& options);

// Status for a response that does not follow the wire protocol.
absl::Status ProtocolError(std::string_view what);

}  // namespace stylomark

#endif  // STYLOMARK_HTTP_CLIENT_H_
