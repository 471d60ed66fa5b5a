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

#include <cmath>

#include <gtest/gtest.h>

#include "hofnet/error.hpp"
#include "hofnet/synthetic.hpp"
#include "support/grad_cases.hpp"

namespace hofnet {
namespace {

CnnConfig tiny_config() {
  CnnConfig c;
  c.dim = 4;
  c.heights = {2, 3};
  c.counts = {2, 3};
  c.dense = 5;
  c.min_len = 3;
  c.max_len = 6;
  c.dropout.banks = {0.5, 0.2};
  return c;
}

TEST(CnnConfig, DefaultsDescribeTheReferenceShape) {
  const CnnConfig c;
  EXPECT_EQ(c.dim, 200u);
  EXPECT_EQ(c.heights, (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(c.counts, (std::vector<int>{256, 256, 512}));
  EXPECT_EQ(c.pooled_width(), 1024u);
  EXPECT_NO_THROW(c.validate());
  const CnnConfig s = CnnConfig::scaled(16, 8, 10);
  EXPECT_EQ(s.counts, (std::vector<int>{8, 8, 16}));
  EXPECT_EQ(s.pooled_width(), 32u);
}

TEST(CnnConfig, ValidationErrors) {
  CnnConfig c = tiny_config();
  c.min_len = 2;
  EXPECT_THROW(c.validate(), ShapeError);
  c = tiny_config();
  c.counts = {2};
  EXPECT_THROW(c.validate(), ShapeError);
  c = tiny_config();
  c.dropout.dense = 1.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = tiny_config();
  c.dropout.banks = {0.5};
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_THROW(CnnModel(tiny_config(), 1), ShapeError);
}

TEST(CnnModel, ParameterShapes) {
  CnnModel m(tiny_config(), 10);
  EXPECT_EQ(m.embedding.size(), 40u);
  ASSERT_EQ(m.banks.size(), 2u);
  EXPECT_EQ(m.banks[0].weights.size(), 2u * 2u * 4u);
  EXPECT_EQ(m.banks[1].weights.size(), 3u * 3u * 4u);
  EXPECT_EQ(m.dense_weights.size(), 5u * 5u);
  EXPECT_EQ(m.output_weights.size(), 5u);
  std::vector<std::string> names;
  m.visit([&](const std::string& n, std::span<float>) { names.push_back(n); });
  EXPECT_EQ(names, (std::vector<std::string>{"embedding", "bank2.weights", "bank2.biases", "bank3.weights",
                                             "bank3.biases", "dense.weights", "dense.biases", "output.weights",
                                             "output.bias"}));
}

TEST(CnnModel, InitializationIsSeededAndKeepsPadRowZero) {
  CnnModel a(tiny_config(), 10), b(tiny_config(), 10), c(tiny_config(), 10);
  a.initialize(3);
  b.initialize(3);
  c.initialize(4);
  EXPECT_EQ(a.embedding, b.embedding);
  EXPECT_EQ(a.banks[1].weights, b.banks[1].weights);
  EXPECT_NE(a.dense_weights, c.dense_weights);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(a.embedding[j], 0.0f);
  for (float v : a.banks[0].biases) EXPECT_EQ(v, 0.0f);
  // Glorot bound for the dense layer: sqrt(6 / (5 + 5)).
  const float bound = std::sqrt(6.0f / 10.0f);
  for (float v : a.dense_weights) EXPECT_LE(std::abs(v), bound);
}

TEST(EmbedAndPad, TruncatesAndPads) {
  CnnModel m(tiny_config(), 10);
  for (std::size_t i = 0; i < m.embedding.size(); ++i) m.embedding[i] = static_cast<float>(i);
  const std::vector<std::int32_t> shortish{3};
  const auto t = embed_and_pad<float>(shortish, m);
  EXPECT_EQ(t.rows, 3u);
  EXPECT_EQ(t.values[0], 12.0f);
  EXPECT_EQ(t.values[4], 0.0f);
  EXPECT_EQ(t.values[11], 0.0f);
  const std::vector<std::int32_t> longish{1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_EQ(embed_and_pad<float>(longish, m).rows, 6u);
  const std::vector<std::int32_t> bad{12};
  EXPECT_THROW(embed_and_pad<float>(bad, m), ShapeError);
}

TEST(ConvFeature, DotProductPlusBiasThroughRelu) {
  TweetMatrix<double> t{3, 2, {1, 2, 3, 4, 5, 6}};
  const std::vector<double> f{1, 0, 0, 1};  // picks x[p][0] + x[p+1][1]
  EXPECT_DOUBLE_EQ(conv_feature<double>(f, 0.5, t, 0, 2), 1 + 4 + 0.5);
  EXPECT_DOUBLE_EQ(conv_feature<double>(f, 0.0, t, 1, 2), 3 + 6);
  EXPECT_DOUBLE_EQ(conv_feature<double>(f, -100.0, t, 1, 2), 0.0);
  EXPECT_THROW(conv_feature<double>(f, 0.0, t, 2, 2), ShapeError);
}

TEST(MaxPool, FirstMaximumWins) {
  const std::vector<double> v{1, 3, 2, 3};
  const auto r = max_pool<double>(v);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.argmax, 1u);
  EXPECT_THROW(max_pool<double>(std::span<const double>{}), std::invalid_argument);
}

TEST(Dropout, MasksAreZeroOrInverseKeep) {
  const CnnConfig c = tiny_config();
  Rng rng(1);
  std::size_t dropped = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = DropoutMasks<double>::sample(c, 6, rng);
    ASSERT_EQ(m.input.size(), 6u);
    ASSERT_EQ(m.banks[1].size(), 3u);
    for (double v : m.input) {
      EXPECT_TRUE(v == 0.0 || v == 2.0);
      dropped += v == 0.0;
      ++total;
    }
    for (double v : m.banks[1]) EXPECT_TRUE(v == 0.0 || std::abs(v - 1.25) < 1e-12);
  }
  EXPECT_NEAR(static_cast<double>(dropped) / total, 0.5, 0.05);
  const auto ones = DropoutMasks<double>::ones(c, 4);
  for (double v : ones.dense) EXPECT_EQ(v, 1.0);
}

TEST(Forward, ZeroModelGivesOneHalf) {
  CnnModel m(tiny_config(), 10);
  m.set_zero();
  const std::vector<std::int32_t> ids{2, 3, 4};
  EXPECT_FLOAT_EQ(predict_probability(ids, m), 0.5f);
  EXPECT_EQ(predict(ids, m), Label::HOF);
  EXPECT_EQ(label_for_probability(0.4999), Label::NOT);
}

TEST(Forward, InferenceIgnoresRngAndMatchesNullMasks) {
  CnnModel m(tiny_config(), 10);
  m.initialize(2, 0.5);
  const std::vector<std::int32_t> ids{2, 3, 4, 5};
  Rng r1(1), r2(99);
  const float a = forward<float>(ids, m, Mode::Infer, r1);
  const float b = forward<float>(ids, m, Mode::Infer, r2);
  const float c = forward<float>(ids, m, static_cast<const DropoutMasks<float>*>(nullptr));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  const auto ones = DropoutMasks<float>::ones(m.config(), 4);
  EXPECT_EQ(forward<float>(ids, m, &ones), a);
}

TEST(Forward, PadRowContentIsIgnored) {
  CnnModel m(tiny_config(), 10);
  m.initialize(2, 0.5);
  const std::vector<std::int32_t> ids{2};
  const float before = predict_probability(ids, m);
  for (std::size_t j = 0; j < 4; ++j) m.embedding[j] = 7.0f;
  EXPECT_EQ(predict_probability(ids, m), before);
}

TEST(Loss, BceClampsProbabilities) {
  EXPECT_NEAR(bce_loss(0.5, 1), std::log(2.0), 1e-15);
  EXPECT_NEAR(bce_loss(0.25, 0), -std::log(0.75), 1e-15);
  EXPECT_NEAR(bce_loss(0.0, 1), -std::log(1e-7), 1e-9);
  EXPECT_TRUE(std::isfinite(bce_loss(1.0, 0)));
}

class CnnGradient : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(CnnGradient, MatchesCentralDifferences) {
  testing::CnnGradCase c;
  c.config = tiny_config();
  c.vocab = 9;
  for (const auto& g : testing::cnn_gradient_check(c, GetParam())) {
    EXPECT_LT(g.relative_error, 1e-5) << g.name;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, CnnGradient, ::testing::Values(1, 2, 3, 4));

TEST(Backward, RejectsTracesWithoutForwardPass) {
  BasicCnn<double> m(tiny_config(), 9);
  std::vector<ForwardTrace<double>> traces(1);
  const std::vector<int> labels{1};
  EXPECT_THROW(backward<double>(traces, labels, m), std::logic_error);
}

TEST(Backward, PadRowGetsNoGradient) {
  BasicCnn<double> m(tiny_config(), 9);
  m.initialize(1, 0.5);
  const std::vector<std::int32_t> ids{0, 3};
  ForwardTrace<double> t;
  const auto ones = DropoutMasks<double>::ones(m.config(), 3);
  forward<double>(ids, m, &ones, &t);
  const std::vector<ForwardTrace<double>> traces{t};
  const std::vector<int> labels{1};
  const auto g = backward<double>(traces, labels, m);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(g.embedding[j], 0.0);
}

TEST(Adam, FirstStepMovesEachParameterByLr) {
  CnnConfig cfg = tiny_config();
  CnnModel m(cfg, 5);
  m.set_zero();
  CnnModel g = m;
  g.set_zero();
  g.output_bias[0] = 0.3f;
  g.dense_biases[0] = -2.0f;
  Adam<float> adam(m, AdamConfig{0.01, 0.9, 0.999, 1e-8});
  adam.step(m, g);
  EXPECT_NEAR(m.output_bias[0], -0.01f, 1e-6);
  EXPECT_NEAR(m.dense_biases[0], 0.01f, 1e-6);
  EXPECT_EQ(m.dense_biases[1], 0.0f);
  EXPECT_EQ(adam.steps(), 1);
}

TEST(Adam, FrozenEmbeddingsStayPut) {
  CnnConfig cfg = tiny_config();
  cfg.fine_tune_embeddings = false;
  CnnModel m(cfg, 5);
  m.initialize(1);
  const auto before = m.embedding;
  CnnModel g = m;
  for (auto& v : g.embedding) v = 1.0f;
  Adam<float> adam(m, AdamConfig{});
  adam.step(m, g);
  EXPECT_EQ(m.embedding, before);

  cfg.fine_tune_embeddings = true;
  CnnModel tuned(cfg, 5);
  tuned.initialize(1);
  Adam<float> adam2(tuned, AdamConfig{});
  adam2.step(tuned, g);
  EXPECT_NE(tuned.embedding, before);
  for (std::size_t j = 0; j < cfg.dim; ++j) EXPECT_EQ(tuned.embedding[j], 0.0f);
}

TEST(LoadEmbeddings, CopiesKnownWordsAndChecksDim) {
  const Vocabulary vocab = Vocabulary::build(std::vector<TokenStream>{{"a", "b"}}, 1);
  Vocabulary vv;
  vv.add("b");
  WordVectors wv{vv, EmbeddingMatrix(vv.size(), 4)};
  auto row = wv.matrix.input(*vv.find("b"));
  for (std::size_t j = 0; j < 4; ++j) row[j] = 0.25 * static_cast<double>(j + 1);
  CnnModel m(tiny_config(), vocab.size());
  m.initialize(1);
  EXPECT_EQ(m.load_embeddings(vocab, wv), 2u);  // "b" and the shared xxunk row
  const std::size_t b = static_cast<std::size_t>(*vocab.find("b"));
  EXPECT_EQ(m.embedding[b * 4 + 3], 1.0f);

  WordVectors wrong{vv, EmbeddingMatrix(vv.size(), 3)};
  try {
    m.load_embeddings(vocab, wrong);
    FAIL();
  } catch (const ShapeError& e) {
    EXPECT_NE(std::string(e.what()).find("dimension mismatch: vectors have 3, model expects 4"), std::string::npos);
  }
}

std::vector<EncodedExample> synthetic_encoded(std::size_t n, std::uint64_t seed, Vocabulary& vocab) {
  TrigramTaskConfig cfg;
  cfg.examples = n;
  cfg.vocab = 60;
  cfg.patterns = 4;
  cfg.min_len = 8;
  cfg.max_len = 12;
  cfg.seed = seed;
  const auto task = generate_trigram_task(cfg);
  std::vector<const Dataset*> ds{&task.data};
  vocab = Vocabulary::build(ds, 1);
  std::vector<EncodedExample> out;
  for (const auto& ex : task.data.examples()) out.push_back(encode(ex, vocab));
  return out;
}

TEST(TrainCnn, PatienceStopsAStalledRun) {
  Vocabulary vocab;
  const auto data = synthetic_encoded(40, 1, vocab);
  CnnConfig cfg = tiny_config();
  cfg.max_len = 12;
  CnnModel m(cfg, vocab.size());
  m.initialize(1);
  TrainConfig tc;
  tc.epochs = 20;
  tc.patience = 2;
  tc.adam.lr = 1e-12;  // nothing changes, so validation F1 never improves
  tc.seed = 1;
  const auto r = train_cnn(data, data, m, tc);
  EXPECT_EQ(r.history.size(), 3u);
  EXPECT_EQ(r.best_epoch, 1);
  tc.patience = 0;
  EXPECT_EQ(train_cnn(data, data, m, tc).history.size(), 1u);
}

TEST(TrainCnn, DeterministicAndLearnsTheToyTask) {
  Vocabulary vocab;
  const auto data = synthetic_encoded(300, 2, vocab);
  const std::span<const EncodedExample> all(data);
  CnnConfig cfg = CnnConfig::scaled(8, 4, 8);
  cfg.max_len = 12;
  CnnModel m(cfg, vocab.size());
  m.initialize(5);
  TrainConfig tc;
  tc.epochs = 15;
  tc.adam.lr = 5e-3;
  tc.patience = 15;
  tc.seed = 5;
  const auto a = train_cnn(all.first(240), all.subspan(240), m, tc);
  const auto b = train_cnn(all.first(240), all.subspan(240), m, tc);
  EXPECT_EQ(a.model.dense_weights, b.model.dense_weights);
  ASSERT_EQ(a.history.size(), b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) EXPECT_EQ(a.history[i].train_loss, b.history[i].train_loss);
  EXPECT_LT(a.history.back().train_loss, a.history.front().train_loss);
  double best = 0;
  for (const auto& e : a.history) best = std::max(best, e.val_macro_f1);
  EXPECT_GT(best, 0.8);
  EXPECT_EQ(a.history[static_cast<std::size_t>(a.best_epoch - 1)].val_macro_f1, best);
}

TEST(TrainCnn, Errors) {
  CnnModel m(tiny_config(), 5);
  TrainConfig tc;
  EXPECT_THROW(train_cnn({}, {}, m, tc), DataError);
  const std::vector<EncodedExample> unlabelled{{{2, 3}, std::nullopt}};
  EXPECT_THROW(train_cnn(unlabelled, {}, m, tc), DataError);
  tc.batch_size = 0;
  EXPECT_THROW(tc.validate(), ConfigError);
}

}  // namespace
}  // namespace hofnet
