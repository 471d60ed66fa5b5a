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

#include "hofnet/ridge.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hofnet/error.hpp"

namespace hofnet {
namespace {

// The unknown vector is [w_0 .. w_{V-1}, b].
struct NormalSystem {
  std::span<const BowVector> xs;
  std::size_t vocab;
  double n_lambda;
  bool intercept;

  void apply(const std::vector<double>& v, std::vector<double>& out, std::vector<double>& scratch) const {
    const double b = intercept ? v[vocab] : 0.0;
    scratch.assign(xs.size(), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double s = b;
      for (const auto& [id, w] : xs[i].entries) s += w * v[id];
      scratch[i] = s;
    }
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (const auto& [id, w] : xs[i].entries) out[id] += w * scratch[i];
    }
    for (std::size_t t = 0; t < vocab; ++t) out[t] += n_lambda * v[t];
    out[vocab] = intercept ? std::accumulate(scratch.begin(), scratch.end(), 0.0) : 0.0;
  }
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

RidgeClassifier::RidgeClassifier(std::vector<double> weights, double bias, double lambda)
    : weights_(std::move(weights)), bias_(bias), lambda_(lambda) {}

RidgeClassifier RidgeClassifier::fit(std::span<const BowVector> xs, std::span<const Label> labels,
                                     std::size_t vocab_size, Options options) {
  if (!(options.lambda > 0.0)) throw std::invalid_argument("ridge lambda must be positive");
  if (xs.size() != labels.size()) throw std::invalid_argument("feature/label count mismatch");
  if (xs.empty()) throw DataError("ridge needs at least one example");
  for (const auto& x : xs) {
    for (const auto& [id, w] : x.entries) {
      if (id < 0 || static_cast<std::size_t>(id) >= vocab_size) {
        throw ShapeError("token id outside vocabulary");
      }
    }
  }

  const std::size_t dim = vocab_size + 1;
  NormalSystem sys{xs, vocab_size, static_cast<double>(xs.size()) * options.lambda,
                   options.fit_intercept};

  std::vector<double> rhs(dim, 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double y = labels[i] == Label::HOF ? 1.0 : -1.0;
    for (const auto& [id, w] : xs[i].entries) rhs[id] += w * y;
    if (options.fit_intercept) rhs[vocab_size] += y;
  }

  // Without an intercept the last coordinate is pinned to zero; give it a
  // unit diagonal so the operator stays positive definite.
  auto apply = [&](const std::vector<double>& v, std::vector<double>& out, std::vector<double>& scratch) {
    sys.apply(v, out, scratch);
    if (!options.fit_intercept) out[vocab_size] = v[vocab_size];
  };

  std::vector<double> x(dim, 0.0), r = rhs, p = rhs, ap(dim), scratch;
  const double rhs_norm = std::sqrt(dot(rhs, rhs));
  RidgeClassifier model;
  model.lambda_ = options.lambda;
  double rr = dot(r, r);
  std::size_t it = 0;
  const std::size_t max_iter = 10 * dim;
  if (rhs_norm > 0.0) {
    while (std::sqrt(rr) / rhs_norm >= options.tolerance) {
      if (it >= max_iter) {
        throw TrainingError("ridge conjugate gradient did not converge in " +
                            std::to_string(max_iter) + " iterations");
      }
      apply(p, ap, scratch);
      const double alpha = rr / dot(p, ap);
      for (std::size_t i = 0; i < dim; ++i) {
        x[i] += alpha * p[i];
        r[i] -= alpha * ap[i];
      }
      const double rr_next = dot(r, r);
      if (!std::isfinite(rr_next)) throw TrainingError("ridge conjugate gradient diverged");
      const double beta = rr_next / rr;
      for (std::size_t i = 0; i < dim; ++i) p[i] = r[i] + beta * p[i];
      rr = rr_next;
      ++it;
    }
    model.residual_ = std::sqrt(rr) / rhs_norm;
  }
  model.iterations_ = it;
  model.bias_ = options.fit_intercept ? x[vocab_size] : 0.0;
  x.resize(vocab_size);
  model.weights_ = std::move(x);
  return model;
}

double RidgeClassifier::decision(const BowVector& x) const {
  double s = bias_;
  for (const auto& [id, w] : x.entries) {
    if (id < 0 || static_cast<std::size_t>(id) >= weights_.size()) {
      throw ShapeError("token id outside vocabulary");
    }
    s += w * weights_[id];
  }
  return s;
}

Label RidgeClassifier::predict(const BowVector& x) const {
  return decision(x) >= 0.0 ? Label::HOF : Label::NOT;
}

}  // namespace hofnet
