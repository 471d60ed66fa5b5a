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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hofnet/bow.hpp"
#include "hofnet/rng.hpp"
#include "hofnet/types.hpp"

namespace hofnet {

inline constexpr std::size_t kDnnHiddenLayers = 5;
inline constexpr std::size_t kDnnHiddenWidth = 8;

struct DenseLayer {
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<double> weights;  // out x in, row-major
  std::vector<double> biases;   // out
};

// Feed-forward classifier over sparse bag-of-words input: five ReLU layers of
// eight units and a two-way softmax (index = label_value, so 1 is HOF).
class DnnModel {
 public:
  DnnModel() = default;
  explicit DnnModel(std::size_t input_dim);

  std::size_t input_dim() const { return layers.empty() ? 0 : layers.front().in; }

  // Glorot-uniform weights, zero biases.
  void initialize(std::uint64_t seed);
  void set_zero();
  bool all_finite() const;

  // "hidden1.weights", "hidden1.biases", ..., "output.weights", "output.biases".
  template <typename F>
  void visit(F&& f) {
    for (std::size_t l = 0; l < layers.size(); ++l) {
      const std::string name =
          l + 1 == layers.size() ? std::string("output") : "hidden" + std::to_string(l + 1);
      f(name + ".weights", std::span<double>(layers[l].weights));
      f(name + ".biases", std::span<double>(layers[l].biases));
    }
  }

  std::vector<DenseLayer> layers;  // kDnnHiddenLayers hidden layers, then the output
};

// Drop rates: on the input features, then after each hidden layer.
struct DnnDropout {
  double input = 0.5;
  std::array<double, kDnnHiddenLayers> hidden{0.5, 0.5, 0.0, 0.0, 0.0};

  static DnnDropout none() { return DnnDropout{0.0, {}}; }
  void validate() const;
};

// Inverted-dropout multipliers. `input` has one entry per nonzero feature of
// the example it was sampled for.
struct DnnMasks {
  std::vector<double> input;
  std::array<std::vector<double>, kDnnHiddenLayers> hidden;

  static DnnMasks sample(const DnnDropout& dropout, const BowVector& x, Rng& rng);
  static DnnMasks ones(const BowVector& x);
};

struct DnnTrace {
  bool valid = false;
  BowVector input;  // after input dropout
  std::array<std::vector<double>, kDnnHiddenLayers> pre;  // pre-activations
  std::array<std::vector<double>, kDnnHiddenLayers> out;  // after ReLU and dropout
  std::array<std::vector<double>, kDnnHiddenLayers> masks;
  std::array<double, 2> logits{};
  std::array<double, 2> probabilities{};
};

// Class probabilities {NOT, HOF}. Null masks means inference.
std::array<double, 2> dnn_forward(const BowVector& x, const DnnModel& model,
                                  const DnnMasks* masks, DnnTrace* trace = nullptr);

// Cross-entropy of class y from logits, computed stably.
double dnn_loss(const std::array<double, 2>& logits, int y);

// Accumulates the gradient of the mean batch cross-entropy into `grad`
// (shaped like `model`, zeroed by the caller).
void dnn_backward(std::span<const DnnTrace> traces, std::span<const int> labels,
                  const DnnModel& model, DnnModel& grad);

double dnn_batch_loss(std::span<const BowVector> xs, std::span<const int> labels,
                      const DnnModel& model, std::span<const DnnMasks> masks);

struct DnnTrainConfig {
  int epochs = 100;
  int batch_size = 32;
  double lr = 0.04;
  DnnDropout dropout;
  std::uint64_t seed = 0;

  void validate() const;
};

// Plain minibatch SGD. Returns the mean training loss per epoch. Throws
// TrainingError if the loss or the weights become non-finite.
std::vector<double> train_dnn(std::span<const BowVector> xs, std::span<const Label> labels,
                              DnnModel& model, const DnnTrainConfig& config);

// P(HOF | x) at inference.
double dnn_probability(const BowVector& x, const DnnModel& model);
// HOF iff P(HOF) >= P(NOT).
Label dnn_predict(const BowVector& x, const DnnModel& model);

}  // namespace hofnet
