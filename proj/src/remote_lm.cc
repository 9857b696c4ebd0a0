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

#include "stylomark/remote_lm.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "nlohmann/json.hpp"
#include "stylomark/text_util.h"
#include "stylomark/version.h"

namespace stylomark {

using json = nlohmann::json;

absl::StatusOr<std::unique_ptr<RemoteLanguageModel>>
RemoteLanguageModel::Connect(const std::string& endpoint,
                             const RemoteOptions& options) {
  absl::StatusOr<std::string> body = HttpGet(endpoint, "/v1/vocabulary", options);
  if (!body.ok()) return body.status();
  const json reply = json::parse(*body, nullptr, /*allow_exceptions=*/false);
  if (!reply.is_object() || !reply.contains("tokens") ||
      !reply["tokens"].is_array() || !reply.contains("stop_token") ||
      !reply["stop_token"].is_number_integer()) {
    return ProtocolError("vocabulary reply needs 'tokens' and 'stop_token'");
  }
  if (reply.contains("protocol") && reply["protocol"] != kProtocolVersion) {
    return absl::FailedPreconditionError(
        absl::StrCat("model service speaks protocol ", reply["protocol"].dump(),
                     ", expected ", kProtocolVersion));
  }
  std::vector<std::string> tokens;
  for (const json& t : reply["tokens"]) {
    if (!t.is_string()) return ProtocolError("non-string token");
    tokens.push_back(t.get<std::string>());
  }
  absl::StatusOr<Vocabulary> vocab = Vocabulary::Create(std::move(tokens));
  if (!vocab.ok()) return ProtocolError(ToStd(vocab.status().message()));
  const int64_t stop = reply["stop_token"].get<int64_t>();
  if (stop < 0 || static_cast<size_t>(stop) >= vocab->size()) {
    return ProtocolError("stop_token outside vocabulary");
  }
  std::unique_ptr<RemoteLanguageModel> model(new RemoteLanguageModel());
  model->endpoint_ = endpoint;
  model->options_ = options;
  model->vocab_ = *std::move(vocab);
  model->stop_token_ = static_cast<int>(stop);
  std::string name = "unknown";
  if (reply.contains("model") && reply["model"].is_string()) {
    name = reply["model"].get<std::string>();
  }
  model->description_ = absl::StrCat("remote:", endpoint, ":", name);
  return model;
}

absl::StatusOr<TokenDistribution> ParseNextDistribution(std::string_view body,
                                                        size_t vocab_size) {
  const json reply = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (!reply.is_object() || !reply.contains("ids") || !reply["ids"].is_array() ||
      !reply.contains("probs") || !reply["probs"].is_array()) {
    return ProtocolError("distribution reply needs 'ids' and 'probs'");
  }
  const json& ids = reply["ids"];
  const json& probs = reply["probs"];
  if (ids.size() != probs.size()) {
    return ProtocolError("'ids' and 'probs' differ in length");
  }
  double residual = 0.0;
  if (reply.contains("residual_mass")) {
    if (!reply["residual_mass"].is_number()) {
      return ProtocolError("non-numeric residual_mass");
    }
    residual = reply["residual_mass"].get<double>();
  }
  if (!std::isfinite(residual) || residual < 0.0) {
    return ProtocolError("invalid residual_mass");
  }

  TokenDistribution dist;
  dist.probs.assign(vocab_size, 0.0);
  std::vector<bool> listed(vocab_size, false);
  double sum = residual;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (!ids[i].is_number_integer() || !probs[i].is_number()) {
      return ProtocolError("malformed id or probability");
    }
    const int64_t id = ids[i].get<int64_t>();
    const double p = probs[i].get<double>();
    if (id < 0 || static_cast<size_t>(id) >= vocab_size || listed[id]) {
      return ProtocolError(absl::StrCat("bad or repeated token id ", id));
    }
    if (!std::isfinite(p) || p < 0.0) {
      return ProtocolError("invalid probability");
    }
    listed[id] = true;
    dist.probs[id] = p;
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    return ProtocolError(absl::StrCat("probabilities sum to ", sum));
  }
  const size_t tail = vocab_size - ids.size();
  if (tail > 0) {
    dist.unboostable.assign(vocab_size, false);
    const double share = residual / static_cast<double>(tail);
    for (size_t id = 0; id < vocab_size; ++id) {
      if (!listed[id]) {
        dist.probs[id] = share;
        dist.unboostable[id] = true;
      }
    }
  } else if (residual > 1e-6) {
    return ProtocolError("residual mass with a complete distribution");
  }
  double total = 0.0;
  for (double p : dist.probs) total += p;
  if (!(total > 0.0)) return ProtocolError("empty distribution");
  for (double& p : dist.probs) p /= total;
  return dist;
}

absl::StatusOr<TokenDistribution> RemoteLanguageModel::NextDistribution(
    std::string_view prompt, const std::vector<int>& generated) const {
  const json request = {{"prompt", std::string(prompt)}, {"context", generated}};
  absl::StatusOr<std::string> body = HttpPostJson(
      endpoint_, "/v1/next-distribution",
      request.dump(-1, ' ', false, json::error_handler_t::replace), options_);
  if (!body.ok()) return body.status();
  return ParseNextDistribution(*body, vocab_.size());
}

}  // namespace stylomark
