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

#include <span>
#include <vector>

#include "hofnet/bow.hpp"
#include "hofnet/types.hpp"

namespace hofnet {

// Least-squares classifier on targets HOF = +1, NOT = -1 with an l2 penalty
// on the weights only. The fitted objective is
//   (1/N) sum_i (w.x_i + b - y_i)^2 + lambda |w|^2
// so replicating the training set leaves the minimizer unchanged. The
// stationarity conditions, multiplied through by N, are
//   (X^T X + N lambda I) w + X^T 1 b = X^T y
//   1^T X w + N b                    = 1^T y
// and are solved by conjugate gradient.
class RidgeClassifier {
 public:
  struct Options {
    double lambda = 1.0;
    bool fit_intercept = true;
    double tolerance = 1e-8;  // on |residual| / |rhs|
  };

  // Throws std::invalid_argument for lambda <= 0 or size mismatch, and
  // TrainingError if CG does not converge within 10 * (V + 1) iterations.
  static RidgeClassifier fit(std::span<const BowVector> xs, std::span<const Label> labels,
                             std::size_t vocab_size, Options options);
  static RidgeClassifier fit(std::span<const BowVector> xs, std::span<const Label> labels,
                             std::size_t vocab_size, double lambda) {
    return fit(xs, labels, vocab_size, Options{lambda});
  }

  // Builds a model from explicit parameters.
  RidgeClassifier(std::vector<double> weights, double bias, double lambda);

  double decision(const BowVector& x) const;
  // decision >= 0 -> HOF.
  Label predict(const BowVector& x) const;

  const std::vector<double>& weights() const { return weights_; }
  double bias() const { return bias_; }
  double lambda() const { return lambda_; }
  std::size_t iterations() const { return iterations_; }
  double relative_residual() const { return residual_; }

 private:
  RidgeClassifier() = default;

  std::vector<double> weights_;
  double bias_ = 0.0;
  double lambda_ = 1.0;
  std::size_t iterations_ = 0;
  double residual_ = 0.0;
};

}  // namespace hofnet
