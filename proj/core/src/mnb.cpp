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

#include "hofnet/mnb.hpp"

#include <cmath>
#include <stdexcept>

#include "hofnet/error.hpp"

namespace hofnet {

MultinomialNB MultinomialNB::fit(std::span<const BowVector> xs, std::span<const Label> labels,
                                 std::size_t vocab_size, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("MNB alpha must be positive");
  if (xs.size() != labels.size()) throw std::invalid_argument("feature/label count mismatch");

  std::array<std::vector<double>, 2> counts{std::vector<double>(vocab_size, 0.0),
                                            std::vector<double>(vocab_size, 0.0)};
  std::array<std::size_t, 2> docs{0, 0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int c = label_value(labels[i]);
    ++docs[c];
    for (const auto& [id, w] : xs[i].entries) {
      if (id < 0 || static_cast<std::size_t>(id) >= vocab_size) {
        throw ShapeError("token id outside vocabulary");
      }
      counts[c][id] += w;
    }
  }
  for (int c = 0; c < 2; ++c) {
    if (docs[c] == 0) {
      throw DataError("MNB needs at least one " + std::string(label_name(static_cast<Label>(c))) +
                      " example");
    }
  }

  MultinomialNB m;
  m.alpha_ = alpha;
  const double n = static_cast<double>(xs.size());
  for (int c = 0; c < 2; ++c) {
    m.log_prior_[c] = std::log(static_cast<double>(docs[c]) / n);
    double total = 0.0;
    for (double v : counts[c]) total += v;
    const double denom = total + alpha * static_cast<double>(vocab_size);
    m.log_likelihood_[c].resize(vocab_size);
    for (std::size_t t = 0; t < vocab_size; ++t) {
      m.log_likelihood_[c][t] = std::log((counts[c][t] + alpha) / denom);
    }
  }
  return m;
}

std::array<double, 2> MultinomialNB::joint_log_likelihood(const BowVector& x) const {
  std::array<double, 2> out = log_prior_;
  for (const auto& [id, w] : x.entries) {
    if (id < 0 || static_cast<std::size_t>(id) >= vocab_size()) {
      throw ShapeError("token id outside vocabulary");
    }
    for (int c = 0; c < 2; ++c) out[c] += w * log_likelihood_[c][id];
  }
  return out;
}

std::array<double, 2> MultinomialNB::log_posteriors(const BowVector& x) const {
  auto j = joint_log_likelihood(x);
  const double hi = std::max(j[0], j[1]);
  const double lse = hi + std::log(std::exp(j[0] - hi) + std::exp(j[1] - hi));
  return {j[0] - lse, j[1] - lse};
}

Label MultinomialNB::predict(const BowVector& x) const {
  auto j = joint_log_likelihood(x);
  return j[1] >= j[0] ? Label::HOF : Label::NOT;
}

}  // namespace hofnet
