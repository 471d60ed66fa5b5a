// Copyright 2026 The hofnet Authors.
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

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hofnet/types.hpp"

namespace hofnet {

// Classes in display order: HOF first, as in the usual report layout.
inline constexpr std::array<Label, 2> kReportClasses{Label::HOF, Label::NOT};

// counts[actual][predicted], indexed in kReportClasses order.
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(std::array<std::array<std::size_t, 2>, 2> counts) : counts_(counts) {}

  std::size_t operator()(Label actual, Label predicted) const {
    return counts_[index(actual)][index(predicted)];
  }
  std::size_t& at(Label actual, Label predicted) { return counts_[index(actual)][index(predicted)]; }

  std::size_t total() const;
  std::size_t support(Label actual) const;
  std::size_t predicted(Label predicted) const;
  std::size_t correct() const;

  const auto& counts() const { return counts_; }

  static std::size_t index(Label l) { return l == Label::HOF ? 0 : 1; }

  bool operator==(const ConfusionMatrix&) const = default;

 private:
  std::array<std::array<std::size_t, 2>, 2> counts_{};
};

// Throws std::invalid_argument on empty input or a length mismatch.
ConfusionMatrix confusion(std::span<const Label> predicted, std::span<const Label> actual);

struct ClassMetrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::size_t support = 0;
};

struct EvalReport {
  std::array<ClassMetrics, 2> per_class;  // kReportClasses order
  ClassMetrics macro;                     // unweighted mean of per-class values
  ClassMetrics weighted;                  // support-weighted mean
  double accuracy = 0;
  std::size_t total = 0;
  // One entry per metric that hit a zero denominator and was set to 0.
  std::vector<std::string> warnings;

  const ClassMetrics& of(Label l) const { return per_class[ConfusionMatrix::index(l)]; }
};

// Precision/recall with 0 for zero denominators; F1 is the harmonic mean
// (0 when precision + recall is 0); macro F1 is the mean of per-class F1.
EvalReport report(const ConfusionMatrix& cm);

double macro_f1(std::span<const Label> predicted, std::span<const Label> actual);

// Half-up rounding to two decimals for display.
double round2(double x);

// Fixed-width table: confusion matrix, then per-class rows with Precision,
// Recall, F1-score and Support, then accuracy, macro and weighted averages.
std::string format_report(const EvalReport& r, const ConfusionMatrix* cm = nullptr);

// {"per_class": {"HOF": {...}, "NOT": {...}}, "macro_avg": {...},
//  "weighted_avg": {...}, "accuracy": x, "support": n, "warnings": [...]}
std::string report_to_json(const EvalReport& r);

// Header "actual\predicted<TAB>HOF<TAB>NOT", then one row per actual class.
std::string confusion_to_tsv(const ConfusionMatrix& cm);

}  // namespace hofnet
