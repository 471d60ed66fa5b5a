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

#include "hofnet/dnn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hofnet/error.hpp"

namespace hofnet {
namespace {

double sample_unit(double rate, Rng& rng) {
  if (rate <= 0.0) return 1.0;
  const double keep = 1.0 - rate;
  return rng.bernoulli(keep) ? 1.0 / keep : 0.0;
}

void check_rate(double r, const char* what) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw ConfigError(std::string(what) + " dropout must be in [0, 1)");
  }
}

}  // namespace

DnnModel::DnnModel(std::size_t input_dim) {
  if (input_dim == 0) throw ShapeError("DNN input dimension must be positive");
  std::size_t in = input_dim;
  for (std::size_t l = 0; l < kDnnHiddenLayers; ++l) {
    layers.push_back({in, kDnnHiddenWidth, std::vector<double>(in * kDnnHiddenWidth, 0.0),
                      std::vector<double>(kDnnHiddenWidth, 0.0)});
    in = kDnnHiddenWidth;
  }
  layers.push_back({in, 2, std::vector<double>(in * 2, 0.0), std::vector<double>(2, 0.0)});
}

void DnnModel::initialize(std::uint64_t seed) {
  Rng rng = Rng::derive(seed, "dnn-init");
  for (auto& layer : layers) {
    const double a = std::sqrt(6.0 / static_cast<double>(layer.in + layer.out));
    for (auto& w : layer.weights) w = rng.uniform(-a, a);
    std::fill(layer.biases.begin(), layer.biases.end(), 0.0);
  }
}

void DnnModel::set_zero() {
  for (auto& layer : layers) {
    std::fill(layer.weights.begin(), layer.weights.end(), 0.0);
    std::fill(layer.biases.begin(), layer.biases.end(), 0.0);
  }
}

bool DnnModel::all_finite() const {
  for (const auto& layer : layers) {
    for (double w : layer.weights) if (!std::isfinite(w)) return false;
    for (double b : layer.biases) if (!std::isfinite(b)) return false;
  }
  return true;
}

void DnnDropout::validate() const {
  check_rate(input, "input");
  for (double r : hidden) check_rate(r, "hidden");
}

DnnMasks DnnMasks::sample(const DnnDropout& dropout, const BowVector& x, Rng& rng) {
  DnnMasks m;
  m.input.resize(x.entries.size());
  for (auto& v : m.input) v = sample_unit(dropout.input, rng);
  for (std::size_t l = 0; l < kDnnHiddenLayers; ++l) {
    m.hidden[l].resize(kDnnHiddenWidth);
    for (auto& v : m.hidden[l]) v = sample_unit(dropout.hidden[l], rng);
  }
  return m;
}

DnnMasks DnnMasks::ones(const BowVector& x) {
  DnnMasks m;
  m.input.assign(x.entries.size(), 1.0);
  for (auto& h : m.hidden) h.assign(kDnnHiddenWidth, 1.0);
  return m;
}

std::array<double, 2> dnn_forward(const BowVector& x, const DnnModel& model, const DnnMasks* masks,
                                  DnnTrace* trace) {
  if (model.layers.size() != kDnnHiddenLayers + 1) throw ShapeError("DNN model is not initialized");
  if (masks && masks->input.size() != x.entries.size()) {
    throw ShapeError("DNN input mask does not match the example");
  }
  DnnTrace local;
  DnnTrace& t = trace ? *trace : local;
  t.input = x;
  for (std::size_t i = 0; i < t.input.entries.size(); ++i) {
    auto& [id, w] = t.input.entries[i];
    if (id < 0 || static_cast<std::size_t>(id) >= model.input_dim()) {
      throw ShapeError("token id outside DNN input dimension");
    }
    if (masks) w *= masks->input[i];
  }

  const DenseLayer& first = model.layers[0];
  std::vector<double> z(first.biases);
  for (const auto& [id, w] : t.input.entries) {
    if (w == 0.0) continue;
    for (std::size_t o = 0; o < first.out; ++o) z[o] += first.weights[o * first.in + id] * w;
  }
  for (std::size_t l = 0; l < kDnnHiddenLayers; ++l) {
    if (l > 0) {
      const DenseLayer& layer = model.layers[l];
      const auto& prev = t.out[l - 1];
      z.assign(layer.biases.begin(), layer.biases.end());
      for (std::size_t o = 0; o < layer.out; ++o) {
        for (std::size_t i = 0; i < layer.in; ++i) z[o] += layer.weights[o * layer.in + i] * prev[i];
      }
    }
    t.pre[l] = z;
    t.masks[l] = masks ? masks->hidden[l] : std::vector<double>(kDnnHiddenWidth, 1.0);
    t.out[l].resize(kDnnHiddenWidth);
    for (std::size_t o = 0; o < kDnnHiddenWidth; ++o) {
      t.out[l][o] = std::max(0.0, z[o]) * t.masks[l][o];
    }
  }

  const DenseLayer& head = model.layers.back();
  const auto& last = t.out[kDnnHiddenLayers - 1];
  for (std::size_t c = 0; c < 2; ++c) {
    double s = head.biases[c];
    for (std::size_t i = 0; i < head.in; ++i) s += head.weights[c * head.in + i] * last[i];
    t.logits[c] = s;
  }
  const double hi = std::max(t.logits[0], t.logits[1]);
  const double e0 = std::exp(t.logits[0] - hi), e1 = std::exp(t.logits[1] - hi);
  t.probabilities = {e0 / (e0 + e1), e1 / (e0 + e1)};
  t.valid = true;
  return t.probabilities;
}

double dnn_loss(const std::array<double, 2>& logits, int y) {
  const double hi = std::max(logits[0], logits[1]);
  const double lse = hi + std::log(std::exp(logits[0] - hi) + std::exp(logits[1] - hi));
  return lse - logits[static_cast<std::size_t>(y)];
}

void dnn_backward(std::span<const DnnTrace> traces, std::span<const int> labels,
                  const DnnModel& model, DnnModel& grad) {
  if (traces.size() != labels.size()) throw std::invalid_argument("trace/label count mismatch");
  if (traces.empty()) return;
  const double scale = 1.0 / static_cast<double>(traces.size());
  for (std::size_t n = 0; n < traces.size(); ++n) {
    const DnnTrace& t = traces[n];
    if (!t.valid) throw std::logic_error("dnn_backward needs a trace from dnn_forward");

    // d loss / d logits = softmax - onehot
    std::vector<double> delta(2);
    for (std::size_t c = 0; c < 2; ++c) {
      delta[c] = (t.probabilities[c] - (static_cast<int>(c) == labels[n] ? 1.0 : 0.0)) * scale;
    }
    const DenseLayer& head = model.layers.back();
    DenseLayer& ghead = grad.layers.back();
    std::vector<double> up(head.in, 0.0);
    const auto& last = t.out[kDnnHiddenLayers - 1];
    for (std::size_t c = 0; c < 2; ++c) {
      ghead.biases[c] += delta[c];
      for (std::size_t i = 0; i < head.in; ++i) {
        ghead.weights[c * head.in + i] += delta[c] * last[i];
        up[i] += delta[c] * head.weights[c * head.in + i];
      }
    }

    for (std::size_t l = kDnnHiddenLayers; l-- > 0;) {
      // up holds d loss / d out[l]; push through dropout and ReLU.
      std::vector<double> dz(kDnnHiddenWidth);
      for (std::size_t o = 0; o < kDnnHiddenWidth; ++o) {
        dz[o] = t.pre[l][o] > 0.0 ? up[o] * t.masks[l][o] : 0.0;
      }
      const DenseLayer& layer = model.layers[l];
      DenseLayer& g = grad.layers[l];
      for (std::size_t o = 0; o < layer.out; ++o) g.biases[o] += dz[o];
      if (l == 0) {
        for (const auto& [id, w] : t.input.entries) {
          if (w == 0.0) continue;
          for (std::size_t o = 0; o < layer.out; ++o) g.weights[o * layer.in + id] += dz[o] * w;
        }
      } else {
        const auto& prev = t.out[l - 1];
        up.assign(layer.in, 0.0);
        for (std::size_t o = 0; o < layer.out; ++o) {
          for (std::size_t i = 0; i < layer.in; ++i) {
            g.weights[o * layer.in + i] += dz[o] * prev[i];
            up[i] += dz[o] * layer.weights[o * layer.in + i];
          }
        }
      }
    }
  }
}

double dnn_batch_loss(std::span<const BowVector> xs, std::span<const int> labels,
                      const DnnModel& model, std::span<const DnnMasks> masks) {
  if (xs.size() != labels.size()) throw std::invalid_argument("feature/label count mismatch");
  if (!masks.empty() && masks.size() != xs.size()) throw std::invalid_argument("mask count mismatch");
  if (xs.empty()) return 0.0;
  double total = 0.0;
  DnnTrace t;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    dnn_forward(xs[i], model, masks.empty() ? nullptr : &masks[i], &t);
    total += dnn_loss(t.logits, labels[i]);
  }
  return total / static_cast<double>(xs.size());
}

void DnnTrainConfig::validate() const {
  if (epochs < 1) throw ConfigError("DNN epochs must be at least 1");
  if (batch_size < 1) throw ConfigError("DNN batch size must be at least 1");
  if (!(lr > 0.0)) throw ConfigError("DNN learning rate must be positive");
  dropout.validate();
}

std::vector<double> train_dnn(std::span<const BowVector> xs, std::span<const Label> labels,
                              DnnModel& model, const DnnTrainConfig& config) {
  config.validate();
  if (xs.size() != labels.size()) throw std::invalid_argument("feature/label count mismatch");
  if (xs.empty()) throw DataError("DNN needs at least one training example");

  Rng shuffle_rng = Rng::derive(config.seed, "dnn-shuffle");
  Rng dropout_rng = Rng::derive(config.seed, "dnn-dropout");
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  DnnModel grad = model;
  std::vector<DnnTrace> traces;
  std::vector<int> ys;
  std::vector<double> history;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    shuffle_rng.shuffle(std::span<std::size_t>(order));
    double total = 0.0;
    for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(config.batch_size)) {
      const std::size_t stop = std::min(order.size(), start + static_cast<std::size_t>(config.batch_size));
      traces.assign(stop - start, DnnTrace{});
      ys.resize(stop - start);
      for (std::size_t j = start; j < stop; ++j) {
        const std::size_t i = order[j];
        DnnMasks m = DnnMasks::sample(config.dropout, xs[i], dropout_rng);
        dnn_forward(xs[i], model, &m, &traces[j - start]);
        ys[j - start] = label_value(labels[i]);
        total += dnn_loss(traces[j - start].logits, ys[j - start]);
      }
      grad.set_zero();
      dnn_backward(traces, ys, model, grad);
      for (std::size_t l = 0; l < model.layers.size(); ++l) {
        auto& layer = model.layers[l];
        const auto& g = grad.layers[l];
        for (std::size_t k = 0; k < layer.weights.size(); ++k) layer.weights[k] -= config.lr * g.weights[k];
        for (std::size_t k = 0; k < layer.biases.size(); ++k) layer.biases[k] -= config.lr * g.biases[k];
      }
    }
    const double mean = total / static_cast<double>(xs.size());
    if (!std::isfinite(mean) || !model.all_finite()) {
      throw TrainingError("DNN training diverged at epoch " + std::to_string(epoch + 1));
    }
    history.push_back(mean);
  }
  return history;
}

double dnn_probability(const BowVector& x, const DnnModel& model) {
  return dnn_forward(x, model, nullptr)[1];
}

Label dnn_predict(const BowVector& x, const DnnModel& model) {
  const auto p = dnn_forward(x, model, nullptr);
  return p[1] >= p[0] ? Label::HOF : Label::NOT;
}

}  // namespace hofnet
