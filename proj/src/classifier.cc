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

#include "stylomark/classifier.h"

#include <cmath>
#include <unordered_map>

#include "absl/strings/str_cat.h"
#include "nlohmann/json.hpp"
#include "stylomark/segmenter.h"
#include "stylomark/version.h"

namespace stylomark {

using json = nlohmann::json;

std::string ClassifierBinding::ToString() const {
  if (kind == Kind::kBuiltin) return absl::StrCat("builtin:", version);
  return absl::StrCat("remote:", endpoint, ":", version);
}

int ArgmaxLowestIndex(const std::vector<double>& scores) {
  int best = 0;
  for (size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = static_cast<int>(i);
  }
  return best;
}

double SeedWeight(size_t rank, size_t count) {
  return 2.0 - static_cast<double>(rank) / static_cast<double>(count);
}

BuiltinClassifier::BuiltinClassifier(const LabelTable& table) : table_(table) {}

ClassifierBinding BuiltinClassifier::binding() const {
  ClassifierBinding binding;
  binding.kind = ClassifierBinding::Kind::kBuiltin;
  binding.version = absl::StrCat("bow-cosine-ranked/", table_.seeds_version());
  return binding;
}

absl::StatusOr<std::shared_ptr<const BuiltinClassifier::Space>>
BuiltinClassifier::SpaceFor(const std::vector<std::string>& labels) const {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = spaces_.find(labels);
  if (it != spaces_.end()) return it->second;

  auto space = std::make_shared<Space>();
  for (size_t l = 0; l < labels.size(); ++l) {
    const std::vector<std::string>& terms = table_.SeedTerms(labels[l]);
    if (terms.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("no seed terms for label '", labels[l], "'"));
    }
    double mass = 0.0;
    double mass2 = 0.0;
    for (size_t r = 0; r < terms.size(); ++r) {
      const double m = SeedWeight(r, terms.size());
      mass += m;
      mass2 += m * m;
      space->term_labels[terms[r]].push_back({static_cast<int>(l), m});
    }
    space->seed_mass.push_back(mass);
    space->seed_mass2.push_back(mass2);
  }
  space->vocabulary_size = space->term_labels.size();
  spaces_.emplace(labels, space);
  return std::shared_ptr<const Space>(space);
}

absl::StatusOr<Classification> BuiltinClassifier::Classify(
    std::string_view text, const std::vector<std::string>& labels) const {
  if (labels.empty()) return absl::InvalidArgumentError("no labels");
  absl::StatusOr<std::shared_ptr<const Space>> space = SpaceFor(labels);
  if (!space.ok()) return space.status();
  const Space& s = **space;

  // Counts c_w for text words inside the space. Smoothed vectors are
  // t_w = c_w + 1 and s_w = 1 + m_l(w) over every w in W.
  std::map<std::string_view, int> counts;
  const std::vector<std::string> words = Words(text);
  for (const std::string& w : words) {
    if (s.term_labels.count(w) > 0) ++counts[w];
  }
  const double w_size = static_cast<double>(s.vocabulary_size);
  double text_sum = w_size;   // sum of t_w
  double text_norm2 = w_size;  // sum of t_w^2
  // sum of m_l(w) c_w over w in S_l
  std::vector<double> label_hits(labels.size(), 0.0);
  for (const auto& [word, c] : counts) {
    text_sum += c;
    text_norm2 += static_cast<double>(c) * c + 2.0 * c;
    for (const auto& [l, m] : s.term_labels.find(word)->second) {
      label_hits[l] += m * c;
    }
  }

  Classification result;
  result.scores.resize(labels.size());
  for (size_t l = 0; l < labels.size(); ++l) {
    const double dot = text_sum + s.seed_mass[l] + label_hits[l];
    const double seed_norm2 = w_size + 2.0 * s.seed_mass[l] + s.seed_mass2[l];
    result.scores[l] = dot / std::sqrt(text_norm2 * seed_norm2);
  }
  result.index = ArgmaxLowestIndex(result.scores);
  return result;
}

RemoteClassifier::RemoteClassifier(std::string endpoint, RemoteOptions options)
    : endpoint_(std::move(endpoint)), options_(options) {}

absl::StatusOr<std::unique_ptr<RemoteClassifier>> RemoteClassifier::Connect(
    const std::string& endpoint, const RemoteOptions& options) {
  absl::StatusOr<std::string> body = HttpGet(endpoint, "/health", options);
  if (!body.ok()) return body.status();
  const json health = json::parse(*body, nullptr, /*allow_exceptions=*/false);
  if (!health.is_object() || !health.contains("protocol") ||
      !health["protocol"].is_string()) {
    return ProtocolError("/health must return an object with 'protocol'");
  }
  const std::string protocol = health["protocol"].get<std::string>();
  if (protocol != kProtocolVersion) {
    return absl::FailedPreconditionError(
        absl::StrCat("classifier speaks protocol ", protocol, ", expected ",
                     kProtocolVersion));
  }
  std::string model = "unknown";
  if (health.contains("model") && health["model"].is_string()) {
    model = health["model"].get<std::string>();
  }
  std::unique_ptr<RemoteClassifier> classifier(
      new RemoteClassifier(endpoint, options));
  classifier->binding_.kind = ClassifierBinding::Kind::kRemote;
  classifier->binding_.endpoint = endpoint;
  classifier->binding_.version = absl::StrCat(protocol, "/", model);
  return classifier;
}

absl::StatusOr<Classification> ParseClassifyResponse(std::string_view body,
                                                     size_t label_count) {
  const json reply = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (!reply.is_object()) return ProtocolError("response is not an object");
  if (!reply.contains("index") || !reply["index"].is_number_integer()) {
    return ProtocolError("missing integer 'index'");
  }
  if (!reply.contains("scores") || !reply["scores"].is_array()) {
    return ProtocolError("missing array 'scores'");
  }
  const json& scores = reply["scores"];
  if (scores.size() != label_count) {
    return ProtocolError(absl::StrCat("expected ", label_count,
                                      " scores, got ", scores.size()));
  }
  Classification result;
  for (const json& v : scores) {
    if (!v.is_number()) return ProtocolError("non-numeric score");
    const double x = v.get<double>();
    if (!std::isfinite(x)) return ProtocolError("non-finite score");
    result.scores.push_back(x);
  }
  const int64_t index = reply["index"].get<int64_t>();
  if (index < 0 || static_cast<size_t>(index) >= label_count) {
    return ProtocolError(absl::StrCat("index ", index, " out of range"));
  }
  result.index = static_cast<int>(index);
  if (result.index != ArgmaxLowestIndex(result.scores)) {
    return ProtocolError(absl::StrCat(
        "index ", index, " is not the lowest-index argmax of scores"));
  }
  return result;
}

absl::StatusOr<Classification> RemoteClassifier::Classify(
    std::string_view text, const std::vector<std::string>& labels) const {
  if (labels.empty()) return absl::InvalidArgumentError("no labels");
  const json request = {{"text", std::string(text)}, {"labels", labels}};
  absl::StatusOr<std::string> body =
      HttpPostJson(endpoint_, "/classify",
                   request.dump(-1, ' ', false, json::error_handler_t::replace),
                   options_);
  if (!body.ok()) return body.status();
  return ParseClassifyResponse(*body, labels.size());
}

}  // namespace stylomark
