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

#include "hofnet/cnn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hofnet/error.hpp"
#include "hofnet/eval.hpp"

namespace hofnet {

namespace {

constexpr double kProbClamp = 1e-7;

template <typename Real>
Real dot(const Real* a, const Real* b, std::size_t n) {
  Real s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

template <typename Real>
Real sigmoid(Real x) {
  if (x >= 0) return Real(1) / (Real(1) + std::exp(-x));
  const Real e = std::exp(x);
  return e / (Real(1) + e);
}

std::size_t padded_rows(std::size_t length, const CnnConfig& c) {
  return std::max(std::min(length, c.max_len), c.min_len);
}

template <typename Real>
std::vector<Real> sample_mask(std::size_t n, double drop, Rng& rng) {
  std::vector<Real> mask(n, Real(1));
  if (drop <= 0.0) return mask;
  const Real scale = static_cast<Real>(1.0 / (1.0 - drop));
  for (auto& m : mask) m = rng.bernoulli(drop) ? Real(0) : scale;
  return mask;
}

template <typename Real>
std::vector<std::pair<std::string, std::span<Real>>> groups(BasicCnn<Real>& model) {
  std::vector<std::pair<std::string, std::span<Real>>> out;
  model.visit([&](const std::string& name, std::span<Real> s) { out.emplace_back(name, s); });
  return out;
}

template <typename Real>
void glorot(std::span<Real> w, std::size_t fan_in, std::size_t fan_out, Rng& rng) {
  const double a = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  for (auto& x : w) x = static_cast<Real>(rng.uniform(-a, a));
}

}  // namespace

DropoutSpec DropoutSpec::none(std::size_t bank_count) {
  return DropoutSpec{0.0, std::vector<double>(bank_count, 0.0), 0.0};
}

void DropoutSpec::validate(std::size_t bank_count) const {
  auto ok = [](double r) { return r >= 0.0 && r < 1.0; };
  if (!ok(input) || !ok(dense) || !std::all_of(banks.begin(), banks.end(), ok)) {
    throw ConfigError("dropout rates must lie in [0, 1)");
  }
  if (banks.size() != bank_count) {
    throw ConfigError("dropout lists " + std::to_string(banks.size()) + " bank rates for " +
                      std::to_string(bank_count) + " banks");
  }
}

CnnConfig CnnConfig::scaled(std::size_t dim, int base_count, std::size_t dense) {
  CnnConfig c;
  c.dim = dim;
  c.counts = {base_count, base_count, 2 * base_count};
  c.dense = dense;
  return c;
}

std::size_t CnnConfig::pooled_width() const {
  return static_cast<std::size_t>(std::accumulate(counts.begin(), counts.end(), 0));
}

void CnnConfig::validate() const {
  if (dim == 0) throw ShapeError("embedding dim must be positive");
  if (heights.empty() || heights.size() != counts.size()) {
    throw ShapeError("filter heights and counts must be nonempty and of equal length");
  }
  for (std::size_t b = 0; b < heights.size(); ++b) {
    if (heights[b] < 1 || counts[b] < 1) throw ShapeError("filter heights and counts must be positive");
  }
  const int tallest = *std::max_element(heights.begin(), heights.end());
  if (min_len < static_cast<std::size_t>(tallest)) {
    throw ShapeError("min_len " + std::to_string(min_len) + " is shorter than the tallest filter (" +
                     std::to_string(tallest) + ")");
  }
  if (max_len < min_len) throw ShapeError("max_len must be at least min_len");
  if (dense == 0) throw ShapeError("dense width must be positive");
  dropout.validate(heights.size());
}

template <typename Real>
BasicCnn<Real>::BasicCnn(CnnConfig config, std::size_t vocab_size)
    : config_(std::move(config)), vocab_size_(vocab_size) {
  config_.validate();
  if (vocab_size_ < 2) throw ShapeError("vocabulary must hold at least xxpad and xxunk");
  const std::size_t n = config_.dim;
  embedding.assign(vocab_size_ * n, Real(0));
  for (std::size_t b = 0; b < config_.heights.size(); ++b) {
    FilterBank<Real> bank;
    bank.height = config_.heights[b];
    bank.count = config_.counts[b];
    bank.weights.assign(static_cast<std::size_t>(bank.count * bank.height) * n, Real(0));
    bank.biases.assign(static_cast<std::size_t>(bank.count), Real(0));
    banks.push_back(std::move(bank));
  }
  const std::size_t pooled = config_.pooled_width();
  dense_weights.assign(config_.dense * pooled, Real(0));
  dense_biases.assign(config_.dense, Real(0));
  output_weights.assign(config_.dense, Real(0));
  output_bias.assign(1, Real(0));
}

template <typename Real>
void BasicCnn<Real>::initialize(std::uint64_t seed, double embedding_scale) {
  set_zero();
  Rng rng = Rng::derive(seed, "cnn-init");
  const std::size_t n = config_.dim;
  for (std::size_t i = n; i < embedding.size(); ++i) {
    embedding[i] = static_cast<Real>(rng.uniform(-embedding_scale, embedding_scale));
  }
  for (auto& b : banks) {
    glorot(std::span<Real>(b.weights), static_cast<std::size_t>(b.height) * n,
           static_cast<std::size_t>(b.count), rng);
  }
  glorot(std::span<Real>(dense_weights), config_.pooled_width(), config_.dense, rng);
  glorot(std::span<Real>(output_weights), config_.dense, 1, rng);
}

template <typename Real>
std::size_t BasicCnn<Real>::load_embeddings(const Vocabulary& vocab, const WordVectors& vectors) {
  if (vectors.matrix.dim() != config_.dim) {
    throw ShapeError("dimension mismatch: vectors have " + std::to_string(vectors.matrix.dim()) +
                     ", model expects " + std::to_string(config_.dim));
  }
  if (vocab.size() != vocab_size_) {
    throw ShapeError("vocabulary size " + std::to_string(vocab.size()) + " does not match model (" +
                     std::to_string(vocab_size_) + ")");
  }
  std::size_t filled = 0;
  const std::size_t n = config_.dim;
  for (std::size_t id = 1; id < vocab.size(); ++id) {
    const auto src = vectors.vocab.find(vocab.word(static_cast<std::int32_t>(id)));
    if (!src) continue;
    const auto row = vectors.matrix.input(static_cast<std::size_t>(*src));
    for (std::size_t d = 0; d < n; ++d) embedding[id * n + d] = static_cast<Real>(row[d]);
    ++filled;
  }
  return filled;
}

template <typename Real>
void BasicCnn<Real>::set_zero() {
  visit([](const std::string&, std::span<Real> s) { std::fill(s.begin(), s.end(), Real(0)); });
}

template <typename Real>
bool BasicCnn<Real>::all_finite() const {
  bool ok = true;
  visit([&](const std::string&, std::span<const Real> s) {
    ok = ok && std::all_of(s.begin(), s.end(), [](Real x) { return std::isfinite(x); });
  });
  return ok;
}

template <typename Real>
TweetMatrix<Real> embed_and_pad(std::span<const std::int32_t> ids, const BasicCnn<Real>& model) {
  const auto& cfg = model.config();
  const std::size_t n = cfg.dim;
  const std::size_t len = std::min(ids.size(), cfg.max_len);
  TweetMatrix<Real> t;
  t.rows = padded_rows(ids.size(), cfg);
  t.dim = n;
  t.values.assign(t.rows * n, Real(0));
  for (std::size_t r = 0; r < len; ++r) {
    const auto id = ids[r];
    if (id < 0 || static_cast<std::size_t>(id) >= model.vocab_size()) {
      throw ShapeError("token id " + std::to_string(id) + " outside vocabulary of " +
                       std::to_string(model.vocab_size()));
    }
    if (id == Vocabulary::kPadId) continue;
    std::copy_n(model.embedding.begin() + static_cast<std::ptrdiff_t>(id * n), n,
                t.values.begin() + static_cast<std::ptrdiff_t>(r * n));
  }
  return t;
}

template <typename Real>
Real conv_feature(std::span<const Real> filter, Real bias, const TweetMatrix<Real>& t,
                  std::size_t position, int height) {
  const std::size_t width = static_cast<std::size_t>(height) * t.dim;
  if (filter.size() != width || position + static_cast<std::size_t>(height) > t.rows) {
    throw ShapeError("filter slice does not fit the tweet matrix");
  }
  const Real z = dot(filter.data(), t.values.data() + position * t.dim, width) + bias;
  return z > Real(0) ? z : Real(0);
}

template <typename Real>
PoolResult<Real> max_pool(std::span<const Real> features) {
  if (features.empty()) throw std::invalid_argument("max_pool over no features");
  PoolResult<Real> best{features[0], 0};
  for (std::size_t k = 1; k < features.size(); ++k) {
    if (features[k] > best.value) best = {features[k], k};
  }
  return best;
}

template <typename Real>
DropoutMasks<Real> DropoutMasks<Real>::sample(const CnnConfig& c, std::size_t rows, Rng& rng) {
  DropoutMasks m;
  m.input = sample_mask<Real>(rows, c.dropout.input, rng);
  for (std::size_t b = 0; b < c.counts.size(); ++b) {
    m.banks.push_back(sample_mask<Real>(static_cast<std::size_t>(c.counts[b]), c.dropout.banks[b], rng));
  }
  m.dense = sample_mask<Real>(c.dense, c.dropout.dense, rng);
  return m;
}

template <typename Real>
DropoutMasks<Real> DropoutMasks<Real>::ones(const CnnConfig& c, std::size_t rows) {
  DropoutMasks m;
  m.input.assign(rows, Real(1));
  for (int count : c.counts) m.banks.emplace_back(static_cast<std::size_t>(count), Real(1));
  m.dense.assign(c.dense, Real(1));
  return m;
}

template <typename Real>
Real forward(std::span<const std::int32_t> ids, const BasicCnn<Real>& model,
             const DropoutMasks<Real>* masks, ForwardTrace<Real>* trace) {
  const auto& cfg = model.config();
  const std::size_t n = cfg.dim;
  ForwardTrace<Real> local;
  ForwardTrace<Real>& tr = trace ? *trace : local;
  tr.valid = false;

  tr.input = embed_and_pad(ids, model);
  const std::size_t rows = tr.input.rows;
  tr.ids.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(std::min(ids.size(), cfg.max_len)));

  const DropoutMasks<Real> unit = masks ? DropoutMasks<Real>{} : DropoutMasks<Real>::ones(cfg, rows);
  const DropoutMasks<Real>& mk = masks ? *masks : unit;
  if (mk.input.size() != rows || mk.banks.size() != model.banks.size() ||
      mk.dense.size() != cfg.dense) {
    throw ShapeError("dropout masks do not match the model and input");
  }
  for (std::size_t b = 0; b < model.banks.size(); ++b) {
    if (mk.banks[b].size() != static_cast<std::size_t>(model.banks[b].count)) {
      throw ShapeError("dropout mask for bank " + std::to_string(b) + " has the wrong width");
    }
  }
  tr.input_mask = mk.input;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t d = 0; d < n; ++d) tr.input.values[r * n + d] *= mk.input[r];
  }

  tr.argmax.assign(model.banks.size(), {});
  tr.pooled.assign(model.banks.size(), {});
  tr.bank_masks = mk.banks;
  tr.features.clear();
  tr.features.reserve(cfg.pooled_width());
  std::vector<Real> feats;
  for (std::size_t b = 0; b < model.banks.size(); ++b) {
    const auto& bank = model.banks[b];
    const std::size_t h = static_cast<std::size_t>(bank.height);
    const std::size_t width = h * n;
    const std::size_t positions = rows - h + 1;
    feats.resize(positions);
    tr.argmax[b].resize(static_cast<std::size_t>(bank.count));
    tr.pooled[b].resize(static_cast<std::size_t>(bank.count));
    for (std::size_t j = 0; j < static_cast<std::size_t>(bank.count); ++j) {
      const std::span<const Real> filter(bank.weights.data() + j * width, width);
      for (std::size_t k = 0; k < positions; ++k) {
        feats[k] = conv_feature(filter, bank.biases[j], tr.input, k, bank.height);
      }
      const auto pool = max_pool(std::span<const Real>(feats));
      tr.argmax[b][j] = pool.argmax;
      tr.pooled[b][j] = pool.value;
      tr.features.push_back(pool.value * mk.banks[b][j]);
    }
  }

  const std::size_t pooled = tr.features.size();
  tr.dense_pre.resize(cfg.dense);
  tr.dense_out.resize(cfg.dense);
  tr.dense_mask = mk.dense;
  for (std::size_t i = 0; i < cfg.dense; ++i) {
    const Real z = dot(model.dense_weights.data() + i * pooled, tr.features.data(), pooled) +
                   model.dense_biases[i];
    tr.dense_pre[i] = z;
    tr.dense_out[i] = (z > Real(0) ? z : Real(0)) * mk.dense[i];
  }
  tr.logit = dot(model.output_weights.data(), tr.dense_out.data(), cfg.dense) + model.output_bias[0];
  tr.probability = sigmoid(tr.logit);
  tr.valid = true;
  return tr.probability;
}

template <typename Real>
Real forward(std::span<const std::int32_t> ids, const BasicCnn<Real>& model, Mode mode, Rng& rng,
             ForwardTrace<Real>* trace) {
  if (mode == Mode::Infer) return forward(ids, model, static_cast<const DropoutMasks<Real>*>(nullptr), trace);
  const auto masks = DropoutMasks<Real>::sample(model.config(), padded_rows(ids.size(), model.config()), rng);
  return forward(ids, model, &masks, trace);
}

double bce_loss(double p, int y) {
  const double q = std::clamp(p, kProbClamp, 1.0 - kProbClamp);
  return y ? -std::log(q) : -std::log(1.0 - q);
}

template <typename Real>
void backward(std::span<const ForwardTrace<Real>> traces, std::span<const int> labels,
              const BasicCnn<Real>& model, BasicCnn<Real>& grad) {
  if (traces.size() != labels.size()) throw std::invalid_argument("backward: labels/traces size mismatch");
  if (traces.empty()) return;
  const auto& cfg = model.config();
  const std::size_t n = cfg.dim;
  const std::size_t pooled = cfg.pooled_width();
  const Real scale = Real(1) / static_cast<Real>(traces.size());
  std::vector<Real> d_features(pooled);
  std::vector<Real> d_input;

  for (std::size_t e = 0; e < traces.size(); ++e) {
    const auto& tr = traces[e];
    if (!tr.valid) throw std::logic_error("backward called without a cached forward pass");
    const double p = tr.probability;
    // The clamp makes the loss flat where it saturates.
    if (p < kProbClamp || p > 1.0 - kProbClamp) continue;
    const Real d_logit = (tr.probability - static_cast<Real>(labels[e])) * scale;

    grad.output_bias[0] += d_logit;
    std::fill(d_features.begin(), d_features.end(), Real(0));
    for (std::size_t i = 0; i < cfg.dense; ++i) {
      grad.output_weights[i] += d_logit * tr.dense_out[i];
      if (tr.dense_pre[i] <= Real(0) || tr.dense_mask[i] == Real(0)) continue;
      const Real d_pre = d_logit * model.output_weights[i] * tr.dense_mask[i];
      grad.dense_biases[i] += d_pre;
      Real* gw = grad.dense_weights.data() + i * pooled;
      const Real* w = model.dense_weights.data() + i * pooled;
      for (std::size_t j = 0; j < pooled; ++j) {
        gw[j] += d_pre * tr.features[j];
        d_features[j] += d_pre * w[j];
      }
    }

    d_input.assign(tr.input.values.size(), Real(0));
    std::size_t offset = 0;
    for (std::size_t b = 0; b < model.banks.size(); ++b) {
      const auto& bank = model.banks[b];
      auto& gbank = grad.banks[b];
      const std::size_t width = static_cast<std::size_t>(bank.height) * n;
      for (std::size_t j = 0; j < static_cast<std::size_t>(bank.count); ++j, ++offset) {
        if (tr.pooled[b][j] <= Real(0)) continue;
        const Real g = d_features[offset] * tr.bank_masks[b][j];
        if (g == Real(0)) continue;
        const std::size_t start = tr.argmax[b][j] * n;
        gbank.biases[j] += g;
        Real* gw = gbank.weights.data() + j * width;
        const Real* w = bank.weights.data() + j * width;
        const Real* x = tr.input.values.data() + start;
        Real* dx = d_input.data() + start;
        for (std::size_t k = 0; k < width; ++k) {
          gw[k] += g * x[k];
          dx[k] += g * w[k];
        }
      }
    }

    if (!cfg.fine_tune_embeddings) continue;
    for (std::size_t r = 0; r < tr.ids.size(); ++r) {
      const auto id = tr.ids[r];
      if (id == Vocabulary::kPadId || tr.input_mask[r] == Real(0)) continue;
      Real* ge = grad.embedding.data() + static_cast<std::size_t>(id) * n;
      const Real* dx = d_input.data() + r * n;
      for (std::size_t d = 0; d < n; ++d) ge[d] += dx[d] * tr.input_mask[r];
    }
  }
}

template <typename Real>
BasicCnn<Real> backward(std::span<const ForwardTrace<Real>> traces, std::span<const int> labels,
                        const BasicCnn<Real>& model) {
  BasicCnn<Real> grad(model.config(), model.vocab_size());
  backward(traces, labels, model, grad);
  return grad;
}

template <typename Real>
double batch_loss(std::span<const std::vector<std::int32_t>> batch, std::span<const int> labels,
                  const BasicCnn<Real>& model, std::span<const DropoutMasks<Real>> masks) {
  if (batch.size() != labels.size() || (!masks.empty() && masks.size() != batch.size())) {
    throw std::invalid_argument("batch_loss: size mismatch");
  }
  double total = 0.0;
  for (std::size_t e = 0; e < batch.size(); ++e) {
    const Real p = forward(std::span<const std::int32_t>(batch[e]), model,
                           masks.empty() ? nullptr : &masks[e]);
    total += bce_loss(static_cast<double>(p), labels[e]);
  }
  return total / static_cast<double>(batch.size());
}

template <typename Real>
Adam<Real>::Adam(const BasicCnn<Real>& model, AdamConfig config)
    : config_(config),
      m_(model.config(), model.vocab_size()),
      v_(model.config(), model.vocab_size()) {}

template <typename Real>
void Adam<Real>::step(BasicCnn<Real>& model, const BasicCnn<Real>& grad) {
  ++t_;
  const double c1 = 1.0 - std::pow(config_.beta1, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(config_.beta2, static_cast<double>(t_));
  const Real b1 = static_cast<Real>(config_.beta1);
  const Real b2 = static_cast<Real>(config_.beta2);
  const Real step = static_cast<Real>(config_.lr * std::sqrt(c2) / c1);
  const Real eps = static_cast<Real>(config_.epsilon * std::sqrt(c2));

  auto params = groups(model);
  auto grads = groups(const_cast<BasicCnn<Real>&>(grad));
  auto ms = groups(m_);
  auto vs = groups(v_);
  const bool tune = model.config().fine_tune_embeddings;
  const std::size_t n = model.dim();
  for (std::size_t gi = 0; gi < params.size(); ++gi) {
    std::size_t first = 0;
    if (params[gi].first == "embedding") {
      if (!tune) continue;
      first = n;  // row 0 (xxpad) stays zero
    }
    auto p = params[gi].second;
    auto g = grads[gi].second;
    auto m = ms[gi].second;
    auto v = vs[gi].second;
    for (std::size_t i = first; i < p.size(); ++i) {
      m[i] = b1 * m[i] + (Real(1) - b1) * g[i];
      v[i] = b2 * v[i] + (Real(1) - b2) * g[i] * g[i];
      p[i] -= step * m[i] / (std::sqrt(v[i]) + eps);
    }
  }
}

void TrainConfig::validate() const {
  if (epochs < 1) throw ConfigError("epochs must be positive");
  if (batch_size < 1) throw ConfigError("batch_size must be positive");
  if (patience < 0) throw ConfigError("patience must not be negative");
  if (!(adam.lr > 0) || !(adam.epsilon > 0) || !(adam.beta1 > 0 && adam.beta1 < 1) ||
      !(adam.beta2 > 0 && adam.beta2 < 1)) {
    throw ConfigError("Adam lr/epsilon must be positive and betas in (0, 1)");
  }
}

double predict_probability(std::span<const std::int32_t> ids, const CnnModel& model) {
  return static_cast<double>(forward(ids, model, static_cast<const DropoutMasks<float>*>(nullptr)));
}

Label label_for_probability(double p) { return p >= 0.5 ? Label::HOF : Label::NOT; }

Label predict(std::span<const std::int32_t> ids, const CnnModel& model) {
  return label_for_probability(predict_probability(ids, model));
}

std::vector<Label> predict_all(std::span<const EncodedExample> examples, const CnnModel& model) {
  std::vector<Label> out;
  out.reserve(examples.size());
  for (const auto& ex : examples) out.push_back(predict(ex.ids, model));
  return out;
}

namespace {

std::vector<Label> labels_of(std::span<const EncodedExample> examples) {
  std::vector<Label> out;
  out.reserve(examples.size());
  for (const auto& ex : examples) {
    if (!ex.label) throw DataError("training and validation examples must be labelled");
    out.push_back(*ex.label);
  }
  return out;
}

}  // namespace

CnnTrainResult train_cnn(std::span<const EncodedExample> train, std::span<const EncodedExample> val,
                         CnnModel model, const TrainConfig& config) {
  config.validate();
  if (train.empty()) throw DataError("empty training set");
  const auto train_labels = labels_of(train);
  const auto selection = val.empty() ? train : val;
  const auto selection_labels = labels_of(selection);

  Rng shuffle_rng = Rng::derive(config.seed, "cnn-shuffle");
  Rng dropout_rng = Rng::derive(config.seed, "cnn-dropout");
  Adam<float> adam(model, config.adam);
  CnnModel grad(model.config(), model.vocab_size());

  CnnTrainResult result;
  result.model = model;
  double best = -1.0;
  int since_best = 0;
  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<ForwardTrace<float>> traces;
  std::vector<int> batch_labels;
  const auto batch_size = static_cast<std::size_t>(config.batch_size);

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    shuffle_rng.shuffle(std::span(order));
    double total_loss = 0.0;
    for (std::size_t start = 0; start < order.size(); start += batch_size) {
      const std::size_t end = std::min(order.size(), start + batch_size);
      traces.resize(end - start);
      batch_labels.resize(end - start);
      for (std::size_t i = start; i < end; ++i) {
        const auto& ex = train[order[i]];
        const float p = forward(std::span<const std::int32_t>(ex.ids), model, Mode::Train,
                                dropout_rng, &traces[i - start]);
        batch_labels[i - start] = label_value(train_labels[order[i]]);
        total_loss += bce_loss(p, batch_labels[i - start]);
      }
      if (!std::isfinite(total_loss)) {
        throw TrainingError("non-finite loss in epoch " + std::to_string(epoch) + " at example " +
                            std::to_string(start));
      }
      grad.set_zero();
      backward(std::span<const ForwardTrace<float>>(traces), std::span<const int>(batch_labels), model,
               grad);
      adam.step(model, grad);
    }
    if (!model.all_finite()) {
      throw TrainingError("parameters diverged to non-finite values in epoch " + std::to_string(epoch));
    }
    const double f1 = macro_f1(predict_all(selection, model), selection_labels);
    result.history.push_back({epoch, total_loss / static_cast<double>(train.size()), f1});
    if (f1 > best) {
      best = f1;
      result.model = model;
      result.best_epoch = epoch;
      since_best = 0;
    } else {
      ++since_best;
    }
    if (since_best >= config.patience) break;
  }
  return result;
}

#define HOFNET_INSTANTIATE_CNN(Real)                                                              \
  template class BasicCnn<Real>;                                                                  \
  template struct DropoutMasks<Real>;                                                             \
  template class Adam<Real>;                                                                      \
  template TweetMatrix<Real> embed_and_pad(std::span<const std::int32_t>, const BasicCnn<Real>&); \
  template Real conv_feature(std::span<const Real>, Real, const TweetMatrix<Real>&, std::size_t,   \
                             int);                                                                \
  template PoolResult<Real> max_pool(std::span<const Real>);                                      \
  template Real forward(std::span<const std::int32_t>, const BasicCnn<Real>&,                     \
                        const DropoutMasks<Real>*, ForwardTrace<Real>*);                          \
  template Real forward(std::span<const std::int32_t>, const BasicCnn<Real>&, Mode, Rng&,         \
                        ForwardTrace<Real>*);                                                     \
  template void backward(std::span<const ForwardTrace<Real>>, std::span<const int>,               \
                         const BasicCnn<Real>&, BasicCnn<Real>&);                                 \
  template BasicCnn<Real> backward(std::span<const ForwardTrace<Real>>, std::span<const int>,     \
                                   const BasicCnn<Real>&);                                        \
  template double batch_loss(std::span<const std::vector<std::int32_t>>, std::span<const int>,    \
                             const BasicCnn<Real>&, std::span<const DropoutMasks<Real>>);

HOFNET_INSTANTIATE_CNN(float)
HOFNET_INSTANTIATE_CNN(double)

#undef HOFNET_INSTANTIATE_CNN

}  // namespace hofnet
