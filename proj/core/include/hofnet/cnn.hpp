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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hofnet/corpus.hpp"
#include "hofnet/embedding.hpp"
#include "hofnet/rng.hpp"

namespace hofnet {

// Drop rates (not keep rates) at the four dropout sites: whole word rows of
// the input, the pooled features of each filter bank, and the dense layer
// activations. Dropout is inverted: survivors are scaled by 1/keep during
// training so inference uses the weights as they are.
struct DropoutSpec {
  double input = 0.5;
  std::vector<double> banks{0.5, 0.2, 0.2};
  double dense = 0.5;

  static DropoutSpec none(std::size_t bank_count);
  void validate(std::size_t bank_count) const;
};

struct CnnConfig {
  std::size_t dim = 200;
  std::vector<int> heights{3, 4, 5};
  std::vector<int> counts{256, 256, 512};
  std::size_t dense = 256;
  std::size_t max_len = 64;  // longer inputs are truncated
  std::size_t min_len = 5;   // shorter inputs are padded; must fit the tallest filter
  DropoutSpec dropout;
  bool fine_tune_embeddings = true;

  // Three banks of heights 3/4/5 with counts base/base/2*base.
  static CnnConfig scaled(std::size_t dim, int base_count, std::size_t dense);

  std::size_t pooled_width() const;
  void validate() const;  // throws ShapeError / ConfigError
};

template <typename Real>
struct FilterBank {
  int height = 0;
  int count = 0;
  std::vector<Real> weights;  // count x (height * dim), row-major
  std::vector<Real> biases;   // count
};

// Embedding lookup -> parallel filter banks (ReLU, max over positions) ->
// concatenation -> dense ReLU layer -> single sigmoid unit.
//
// Parameters are plain public vectors; the same type doubles as the gradient
// and Adam moment container. Row 0 of the embedding (xxpad) is never read:
// pad positions are always the zero vector.
template <typename Real>
class BasicCnn {
 public:
  BasicCnn() = default;
  BasicCnn(CnnConfig config, std::size_t vocab_size);

  const CnnConfig& config() const { return config_; }
  std::size_t vocab_size() const { return vocab_size_; }
  std::size_t dim() const { return config_.dim; }

  // Glorot-uniform conv and dense weights (fan_in + fan_out of each layer),
  // zero biases. Embedding rows are uniform in [-embedding_scale, scale].
  void initialize(std::uint64_t seed, double embedding_scale = 0.05);

  // Copies pretrained input vectors for every word of `vocab` found in
  // `vectors`. Returns how many rows were filled.
  std::size_t load_embeddings(const Vocabulary& vocab, const WordVectors& vectors);

  void set_zero();
  bool all_finite() const;

  // Visits parameter groups in their canonical order with a name, e.g.
  // "embedding", "bank3.weights", "bank3.biases", ..., "output.bias".
  template <typename F>
  void visit(F&& f) {
    f("embedding", std::span<Real>(embedding));
    for (auto& b : banks) {
      const std::string h = std::to_string(b.height);
      f("bank" + h + ".weights", std::span<Real>(b.weights));
      f("bank" + h + ".biases", std::span<Real>(b.biases));
    }
    f("dense.weights", std::span<Real>(dense_weights));
    f("dense.biases", std::span<Real>(dense_biases));
    f("output.weights", std::span<Real>(output_weights));
    f("output.bias", std::span<Real>(output_bias));
  }
  template <typename F>
  void visit(F&& f) const {
    const_cast<BasicCnn*>(this)->visit(
        [&](const std::string& name, std::span<Real> s) { f(name, std::span<const Real>(s)); });
  }

  std::vector<Real> embedding;  // vocab_size x dim
  std::vector<FilterBank<Real>> banks;
  std::vector<Real> dense_weights;   // dense x pooled_width
  std::vector<Real> dense_biases;    // dense
  std::vector<Real> output_weights;  // dense
  std::vector<Real> output_bias;     // 1

 private:
  CnnConfig config_;
  std::size_t vocab_size_ = 0;
};

using CnnModel = BasicCnn<float>;

template <typename Real>
struct TweetMatrix {
  std::size_t rows = 0;
  std::size_t dim = 0;
  std::vector<Real> values;  // rows x dim
};

// Maps ids to embedding rows, truncating at max_len and right-padding with
// zero rows up to min_len.
template <typename Real>
TweetMatrix<Real> embed_and_pad(std::span<const std::int32_t> ids, const BasicCnn<Real>& model);

// ReLU(filter . rows[position, position + height) + bias), positions 0-based.
template <typename Real>
Real conv_feature(std::span<const Real> filter, Real bias, const TweetMatrix<Real>& t,
                  std::size_t position, int height);

template <typename Real>
struct PoolResult {
  Real value;
  std::size_t argmax;  // first maximal position
};
template <typename Real>
PoolResult<Real> max_pool(std::span<const Real> features);

// Per-unit multipliers: 0 for dropped units, 1/keep for survivors.
template <typename Real>
struct DropoutMasks {
  std::vector<Real> input;               // one per tweet row
  std::vector<std::vector<Real>> banks;  // one per filter
  std::vector<Real> dense;               // one per dense unit

  static DropoutMasks sample(const CnnConfig& config, std::size_t rows, Rng& rng);
  static DropoutMasks ones(const CnnConfig& config, std::size_t rows);
};

// Everything backward() needs from one forward pass.
template <typename Real>
struct ForwardTrace {
  bool valid = false;
  std::vector<std::int32_t> ids;  // after truncation
  TweetMatrix<Real> input;        // after input dropout
  std::vector<Real> input_mask;
  std::vector<std::vector<std::size_t>> argmax;  // per bank, per filter
  std::vector<std::vector<Real>> pooled;         // per bank, before dropout
  std::vector<std::vector<Real>> bank_masks;
  std::vector<Real> features;    // concatenated pooled features after dropout
  std::vector<Real> dense_pre;   // dense pre-activations
  std::vector<Real> dense_out;   // after ReLU and dropout
  std::vector<Real> dense_mask;
  Real logit = 0;
  Real probability = 0;
};

enum class Mode { Train, Infer };

// Probability of HOF. With `masks` null no dropout is applied (inference);
// otherwise the given masks are used, which lets tests replay a training
// pass exactly. `trace`, when given, receives the intermediate values.
template <typename Real>
Real forward(std::span<const std::int32_t> ids, const BasicCnn<Real>& model,
             const DropoutMasks<Real>* masks, ForwardTrace<Real>* trace = nullptr);

// Samples fresh masks from `rng` in Train mode; ignores it in Infer mode.
template <typename Real>
Real forward(std::span<const std::int32_t> ids, const BasicCnn<Real>& model, Mode mode,
             Rng& rng, ForwardTrace<Real>* trace = nullptr);

// Binary cross-entropy with p clamped to [1e-7, 1 - 1e-7].
double bce_loss(double p, int y);

// Accumulates into `grad` (shaped like the model, zeroed by the caller) the
// exact gradient of the mean batch loss over `traces`. Max pooling routes
// the gradient to the first maximal position; the pad row gets nothing.
// Throws std::logic_error if a trace does not come from a forward pass.
template <typename Real>
void backward(std::span<const ForwardTrace<Real>> traces, std::span<const int> labels,
              const BasicCnn<Real>& model, BasicCnn<Real>& grad);

template <typename Real>
BasicCnn<Real> backward(std::span<const ForwardTrace<Real>> traces, std::span<const int> labels,
                        const BasicCnn<Real>& model);

// Mean batch loss evaluated with fixed masks (one set per example, or none).
template <typename Real>
double batch_loss(std::span<const std::vector<std::int32_t>> batch, std::span<const int> labels,
                  const BasicCnn<Real>& model, std::span<const DropoutMasks<Real>> masks);

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

template <typename Real>
class Adam {
 public:
  Adam(const BasicCnn<Real>& model, AdamConfig config);

  // One bias-corrected update. The embedding is frozen unless the model
  // config enables fine-tuning; row 0 stays zero either way.
  void step(BasicCnn<Real>& model, const BasicCnn<Real>& grad);

  long steps() const { return t_; }

 private:
  AdamConfig config_;
  BasicCnn<Real> m_;
  BasicCnn<Real> v_;
  long t_ = 0;
};

struct TrainConfig {
  int epochs = 20;
  int batch_size = 32;
  AdamConfig adam;
  int patience = 3;
  std::uint64_t seed = 0;

  void validate() const;
};

struct EpochRecord {
  int epoch = 0;          // 1-based
  double train_loss = 0;  // mean training-mode loss over the epoch
  double val_macro_f1 = 0;
};

struct CnnTrainResult {
  CnnModel model;  // best-on-validation weights
  std::vector<EpochRecord> history;
  int best_epoch = 0;
};

// Adam over seeded minibatch shuffles. After each epoch the validation
// macro-F1 is recorded; the best weights are kept and training stops once
// `patience` epochs pass without improvement (patience 0 runs one epoch).
// With an empty validation set the training set is scored instead.
// Throws TrainingError if the loss becomes non-finite.
CnnTrainResult train_cnn(std::span<const EncodedExample> train,
                         std::span<const EncodedExample> val, CnnModel model,
                         const TrainConfig& config);

double predict_probability(std::span<const std::int32_t> ids, const CnnModel& model);

// HOF iff the inference probability is at least 0.5.
Label predict(std::span<const std::int32_t> ids, const CnnModel& model);
Label label_for_probability(double p);

std::vector<Label> predict_all(std::span<const EncodedExample> examples, const CnnModel& model);

// Checkpoint: a text manifest (shape, dropout, vocabulary fingerprint, array
// lengths) followed by every parameter group as little-endian float32 in
// canonical order. Round trips are bit-exact.
void save_checkpoint(const CnnModel& model, std::uint64_t vocab_fingerprint,
                     const std::filesystem::path& path);

struct LoadedCheckpoint {
  CnnModel model;
  std::uint64_t vocab_fingerprint = 0;
  std::vector<std::string> warnings;
};

// Throws DataError/ShapeError on manifest or length problems. A fingerprint
// that differs from `expected_vocab` (when given) only adds a warning.
LoadedCheckpoint load_checkpoint(const std::filesystem::path& path,
                                 const Vocabulary* expected_vocab = nullptr);

}  // namespace hofnet
