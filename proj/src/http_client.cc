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

#include "stylomark/http_client.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "httplib.h"
#include "stylomark/text_util.h"

namespace stylomark {
namespace {

struct Target {
  std::string origin;  // scheme://host:port
  std::string prefix;  // path prefix without trailing '/'
};

absl::StatusOr<Target> SplitEndpoint(const std::string& endpoint) {
  const size_t scheme = endpoint.find("://");
  if (scheme == std::string::npos || endpoint.compare(0, scheme, "http") != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("endpoint must be an http:// URL: '", endpoint, "'"));
  }
  const size_t slash = endpoint.find('/', scheme + 3);
  Target target;
  target.origin = endpoint.substr(0, slash);
  if (slash != std::string::npos) {
    target.prefix = endpoint.substr(slash);
    while (!target.prefix.empty() && target.prefix.back() == '/') {
      target.prefix.pop_back();
    }
  }
  return target;
}

void Configure(httplib::Client& client, const RemoteOptions& options) {
  const auto split = [](double seconds, time_t* sec, time_t* usec) {
    *sec = static_cast<time_t>(seconds);
    *usec = static_cast<time_t>(std::llround((seconds - *sec) * 1e6));
  };
  time_t sec, usec;
  split(options.connect_timeout_seconds, &sec, &usec);
  client.set_connection_timeout(sec, usec);
  split(options.read_timeout_seconds, &sec, &usec);
  client.set_read_timeout(sec, usec);
  client.set_write_timeout(sec, usec);
}

absl::StatusOr<std::string> Finish(const httplib::Result& result,
                                   const std::string& url) {
  if (!result) {
    return absl::UnavailableError(absl::StrCat(
        "transport error calling ", url, ": ", httplib::to_string(result.error())));
  }
  if (result->status >= 500) {
    return absl::UnavailableError(
        absl::StrCat(url, " returned HTTP ", result->status, ": ", result->body));
  }
  if (result->status != 200) {
    return absl::FailedPreconditionError(
        absl::StrCat(url, " returned HTTP ", result->status, ": ", result->body));
  }
  return result->body;
}

}  // namespace

absl::StatusOr<std::string> HttpGet(const std::string& endpoint,
                                    const std::string& path,
                                    const RemoteOptions& options) {
  absl::StatusOr<Target> target = SplitEndpoint(endpoint);
  if (!target.ok()) return target.status();
  httplib::Client client(target->origin);
  Configure(client, options);
  const std::string full = target->prefix + path;
  return Finish(client.Get(full), target->origin + full);
}

absl::StatusOr<std::string> HttpPostJson(const std::string& endpoint,
                                         const std::string& path,
                                         const std::string& body,
                                         const RemoteOptions& options) {
  absl::StatusOr<Target> target = SplitEndpoint(endpoint);
  if (!target.ok()) return target.status();
  httplib::Client client(target->origin);
  Configure(client, options);
  std::string full = target->prefix + path;
  if (full.empty()) full = "/";
  return Finish(client.Post(full, body, "application/json"),
                target->origin + full);
}

absl::Status ProtocolError(std::string_view what) {
  return absl::DataLossError(absl::StrCat("protocol error: ", ToAbsl(what)));
}

}  // namespace stylomark
