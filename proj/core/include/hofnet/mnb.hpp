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
#include <span>
#include <vector>

#include "hofnet/bow.hpp"
#include "hofnet/types.hpp"

namespace hofnet {

// Multinomial naive Bayes with additive (Laplace) smoothing. Arrays indexed by
// label_value(): 0 = NOT, 1 = HOF.
class MultinomialNB {
 public:
  // Throws std::invalid_argument if alpha <= 0 or sizes differ; DataError if a
  // class has no examples.
  static MultinomialNB fit(std::span<const BowVector> xs, std::span<const Label> labels,
                           std::size_t vocab_size, double alpha);

  // log P(c) + sum_t x_t log P(t | c), unnormalized.
  std::array<double, 2> joint_log_likelihood(const BowVector& x) const;
  // Normalized log P(c | x).
  std::array<double, 2> log_posteriors(const BowVector& x) const;
  // Argmax of the posterior; ties go to HOF.
  Label predict(const BowVector& x) const;

  double alpha() const { return alpha_; }
  std::size_t vocab_size() const { return log_likelihood_[0].size(); }
  double log_prior(Label c) const { return log_prior_[label_value(c)]; }
  double log_likelihood(Label c, std::int32_t id) const {
    return log_likelihood_[label_value(c)].at(static_cast<std::size_t>(id));
  }

 private:
  double alpha_ = 1.0;
  std::array<double, 2> log_prior_{};
  std::array<std::vector<double>, 2> log_likelihood_;
};

}  // namespace hofnet
