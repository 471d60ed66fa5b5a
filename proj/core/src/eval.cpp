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

#include "hofnet/eval.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace hofnet {

std::size_t ConfusionMatrix::total() const {
  return counts_[0][0] + counts_[0][1] + counts_[1][0] + counts_[1][1];
}

std::size_t ConfusionMatrix::support(Label actual) const {
  const auto& row = counts_[index(actual)];
  return row[0] + row[1];
}

std::size_t ConfusionMatrix::predicted(Label predicted) const {
  const auto c = index(predicted);
  return counts_[0][c] + counts_[1][c];
}

std::size_t ConfusionMatrix::correct() const { return counts_[0][0] + counts_[1][1]; }

ConfusionMatrix confusion(std::span<const Label> predicted, std::span<const Label> actual) {
  if (predicted.size() != actual.size()) {
    throw std::invalid_argument("confusion: " + std::to_string(predicted.size()) + " predictions for " +
                                std::to_string(actual.size()) + " labels");
  }
  if (predicted.empty()) throw std::invalid_argument("confusion: no examples");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < predicted.size(); ++i) ++cm.at(actual[i], predicted[i]);
  return cm;
}

EvalReport report(const ConfusionMatrix& cm) {
  EvalReport r;
  r.total = cm.total();
  if (r.total == 0) throw std::invalid_argument("report: empty confusion matrix");
  for (Label l : kReportClasses) {
    auto& m = r.per_class[ConfusionMatrix::index(l)];
    const std::size_t tp = cm(l, l);
    const std::size_t pred = cm.predicted(l);
    m.support = cm.support(l);
    const std::string name(label_name(l));
    if (pred == 0) {
      r.warnings.push_back(name + " precision: no predictions of this class");
    } else {
      m.precision = static_cast<double>(tp) / static_cast<double>(pred);
    }
    if (m.support == 0) {
      r.warnings.push_back(name + " recall: class has no support");
    } else {
      m.recall = static_cast<double>(tp) / static_cast<double>(m.support);
    }
    if (m.precision + m.recall > 0) {
      m.f1 = 2 * m.precision * m.recall / (m.precision + m.recall);
    }
  }
  const double n = static_cast<double>(r.total);
  for (const auto& m : r.per_class) {
    const double w = static_cast<double>(m.support) / n;
    r.macro.precision += m.precision / 2;
    r.macro.recall += m.recall / 2;
    r.macro.f1 += m.f1 / 2;
    r.weighted.precision += m.precision * w;
    r.weighted.recall += m.recall * w;
    r.weighted.f1 += m.f1 * w;
  }
  r.macro.support = r.weighted.support = r.total;
  r.accuracy = static_cast<double>(cm.correct()) / n;
  return r;
}

double macro_f1(std::span<const Label> predicted, std::span<const Label> actual) {
  return report(confusion(predicted, actual)).macro.f1;
}

double round2(double x) {
  // The small bias keeps exact decimal halves (0.815) from rounding down
  // because of their binary representation.
  return std::floor(x * 100.0 + 0.5 + 1e-9) / 100.0;
}

std::string format_report(const EvalReport& r, const ConfusionMatrix* cm) {
  std::string out;
  char line[160];
  if (cm) {
    out += "Confusion Matrix (rows actual, columns predicted)\n";
    std::snprintf(line, sizeof line, "%-14s%10s%10s\n", "", "HOF", "NOT");
    out += line;
    for (Label a : kReportClasses) {
      std::snprintf(line, sizeof line, "%-14s%10zu%10zu\n", std::string(label_name(a)).c_str(),
                    (*cm)(a, Label::HOF), (*cm)(a, Label::NOT));
      out += line;
    }
    out += '\n';
  }
  std::snprintf(line, sizeof line, "%-14s%10s%10s%10s%10s\n", "", "Precision", "Recall", "F1-score",
                "Support");
  out += line;
  for (Label l : kReportClasses) {
    const auto& m = r.of(l);
    std::snprintf(line, sizeof line, "%-14s%10.2f%10.2f%10.2f%10zu\n", std::string(label_name(l)).c_str(),
                  round2(m.precision), round2(m.recall), round2(m.f1), m.support);
    out += line;
  }
  out += '\n';
  std::snprintf(line, sizeof line, "%-14s%10s%10s%10.2f%10zu\n", "Accuracy", "", "", round2(r.accuracy),
                r.total);
  out += line;
  for (auto [name, m] : {std::pair{"Macro avg", &r.macro}, std::pair{"Weighted avg", &r.weighted}}) {
    std::snprintf(line, sizeof line, "%-14s%10.2f%10.2f%10.2f%10zu\n", name, round2(m->precision),
                  round2(m->recall), round2(m->f1), m->support);
    out += line;
  }
  return out;
}

namespace {

nlohmann::json metrics_json(const ClassMetrics& m) {
  return {{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}, {"support", m.support}};
}

}  // namespace

std::string report_to_json(const EvalReport& r) {
  nlohmann::json j;
  for (Label l : kReportClasses) j["per_class"][std::string(label_name(l))] = metrics_json(r.of(l));
  j["macro_avg"] = metrics_json(r.macro);
  j["weighted_avg"] = metrics_json(r.weighted);
  j["accuracy"] = r.accuracy;
  j["support"] = r.total;
  j["warnings"] = r.warnings;
  return j.dump(2);
}

std::string confusion_to_tsv(const ConfusionMatrix& cm) {
  std::string out = "actual\\predicted\tHOF\tNOT\n";
  for (Label a : kReportClasses) {
    out += std::string(label_name(a)) + '\t' + std::to_string(cm(a, Label::HOF)) + '\t' +
           std::to_string(cm(a, Label::NOT)) + '\n';
  }
  return out;
}

}  // namespace hofnet
