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

#ifndef STYLOMARK_CLASSIFIER_H_
#define STYLOMARK_CLASSIFIER_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "stylomark/http_client.h"
#include "stylomark/label_table.h"

namespace stylomark {

// Identifies the classifier behind a set of keys. Embed and detect must use
// equal bindings for keys to agree.
struct ClassifierBinding {
  enum class Kind { kBuiltin, kRemote };
  Kind kind = Kind::kBuiltin;
  std::string endpoint;  // remote only
  std::string version;

  std::string ToString() const;
  bool operator==(const ClassifierBinding& other) const {
    return kind == other.kind && endpoint == other.endpoint &&
           version == other.version;
  }
};

struct Classification {
  int index = 0;
  std::vector<double> scores;  // aligned with the requested labels
};

// Position of the largest score; the lowest position wins ties.
int ArgmaxLowestIndex(const std::vector<double>& scores);

class Classifier {
 public:
  virtual ~Classifier() = default;
  // Implementations are safe to call from several threads at once.
  virtual absl::StatusOr<Classification> Classify(
      std::string_view text, const std::vector<std::string>& labels) const = 0;
  virtual ClassifierBinding binding() const = 0;
};

// Weight of the seed term at `rank` in a list of `count` terms: 2 for the
// first term, falling linearly to just above 1 for the last. Lists are
// ordered most characteristic first.
double SeedWeight(size_t rank, size_t count);

// Add-one smoothed bag-of-words cosine between the text and each label's
// weighted seed-term bag, over the union of the requested labels' seed
// terms. Weights rank terms within a label, so labels with equal hit counts
// rarely tie.
class BuiltinClassifier : public Classifier {
 public:
  explicit BuiltinClassifier(const LabelTable& table);

  absl::StatusOr<Classification> Classify(
      std::string_view text,
      const std::vector<std::string>& labels) const override;
  ClassifierBinding binding() const override;

 private:
  struct Space {
    size_t vocabulary_size = 0;      // |W|
    std::vector<double> seed_mass;   // sum of m_l(w)
    std::vector<double> seed_mass2;  // sum of m_l(w)^2
    // term -> (label position, weight)
    std::map<std::string, std::vector<std::pair<int, double>>, std::less<>>
        term_labels;
  };
  absl::StatusOr<std::shared_ptr<const Space>> SpaceFor(
      const std::vector<std::string>& labels) const;

  LabelTable table_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<std::string>, std::shared_ptr<const Space>>
      spaces_;
};

// Client for the classification service:
//   POST /classify {"text", "labels"} -> {"index", "scores"}
//   GET /health -> {"protocol", "model"}
class RemoteClassifier : public Classifier {
 public:
  // Checks /health and requires a matching protocol version.
  static absl::StatusOr<std::unique_ptr<RemoteClassifier>> Connect(
      const std::string& endpoint, const RemoteOptions& options = {});

  absl::StatusOr<Classification> Classify(
      std::string_view text,
      const std::vector<std::string>& labels) const override;
  ClassifierBinding binding() const override { return binding_; }

 private:
  RemoteClassifier(std::string endpoint, RemoteOptions options);

  std::string endpoint_;
  RemoteOptions options_;
  ClassifierBinding binding_;
};

// Validates a /classify response body against the request's label count.
absl::StatusOr<Classification> ParseClassifyResponse(std::string_view body,
                                                     size_t label_count);

}  // namespace stylomark

#endif  // STYLOMARK_CLASSIFIER_H_
