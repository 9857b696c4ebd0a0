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

#ifndef STYLOMARK_DETECTOR_H_
#define STYLOMARK_DETECTOR_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "stylomark/keygen.h"
#include "stylomark/lexicon.h"
#include "stylomark/segmenter.h"
#include "stylomark/stats.h"

namespace stylomark {

struct SensorScore {
  double mean = 0.0;  // X_i; meaningless when words_scored == 0
  int words_scored = 0;
};

// Mean rating in `category` over the in-lexicon words of the sentence.
SensorScore ScoreSentence(const Sentence& sentence, SensorCategory category,
                          const NormLexicon& lexicon);

struct SentenceScore {
  int index = 0;
  WatermarkKey key;  // derived from sentence index - 1
  double x = 0.0;
  double z = 0.0;  // 0 when no word was scored
  int words_scored = 0;
  bool neutral = false;
  bool acrostic_hit = false;
};

struct DetectorConfig {
  double alpha = 0.05;
  AcrosticMode mode = AcrosticMode::kPmf;
  int parallelism = 1;  // concurrent classifier calls
};

struct DetectionReport {
  int total_sentences = 0;
  int n = 0;  // scored sentences
  int k = 0;  // acrostic hits
  double stouffer_z = 0.0;
  double p_s = 1.0;
  double p_a_pmf = 1.0;
  double p_a_tail = 1.0;
  double p_a = 1.0;  // the value for `mode`
  double p = 1.0;
  double confidence = 0.0;
  double alpha = 0.05;
  AcrosticMode mode = AcrosticMode::kPmf;
  bool watermarked = false;
  ClassifierBinding binding;
  std::string label_table_version;
  std::string lexicon_fingerprint;
  std::vector<SentenceScore> sentences;

  std::string ToJson() const;
  std::string Summary() const;
};

// Status for texts too short to carry evidence: fewer than two sentences,
// or no sentence with a recoverable key before it.
absl::Status InsufficientTextError(std::string_view detail);
bool IsInsufficientText(const absl::Status& status);

class Detector {
 public:
  // Both references must outlive the detector.
  Detector(const NormLexicon& lexicon, const KeyDeriver& keys)
      : lexicon_(lexicon), keys_(keys) {}

  absl::StatusOr<DetectionReport> Detect(std::string_view text,
                                         const DetectorConfig& config) const;
  // Keys recovered from a segmented text, by source sentence index.
  absl::StatusOr<std::vector<std::optional<WatermarkKey>>> RecoverKeys(
      const std::vector<Sentence>& sentences, int parallelism = 1) const;

 private:
  const NormLexicon& lexicon_;
  const KeyDeriver& keys_;
};

}  // namespace stylomark

#endif  // STYLOMARK_DETECTOR_H_
