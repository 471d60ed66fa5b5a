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

#include "hofnet/baselines.hpp"

#include <cmath>

#include "hofnet/error.hpp"
#include "hofnet/eval.hpp"

namespace hofnet {
namespace {

std::vector<Label> labels_of(std::span<const EncodedExample> xs) {
  std::vector<Label> out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    if (!x.label) throw DataError("baseline training data must be labelled");
    out.push_back(*x.label);
  }
  return out;
}

int as_int(double v, const char* name) {
  if (!(v >= 1.0) || v != std::floor(v)) {
    throw ConfigError(std::string(name) + " must be a positive integer");
  }
  return static_cast<int>(v);
}

}  // namespace

BaselineKind parse_baseline(std::string_view name) {
  if (name == "mnb") return BaselineKind::MNB;
  if (name == "ridge") return BaselineKind::Ridge;
  if (name == "knn") return BaselineKind::KNN;
  if (name == "dnn") return BaselineKind::DNN;
  throw ConfigError("unknown baseline '" + std::string(name) + "' (expected mnb, ridge, knn or dnn)");
}

std::string_view baseline_name(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::MNB: return "mnb";
    case BaselineKind::Ridge: return "ridge";
    case BaselineKind::KNN: return "knn";
    case BaselineKind::DNN: return "dnn";
  }
  return "?";
}

BowScheme baseline_scheme(BaselineKind kind) {
  return kind == BaselineKind::MNB ? BowScheme::Count : BowScheme::TfIdf;
}

std::vector<ParamSet> default_grid(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::MNB: return expand_grid({{"alpha", {0.1, 0.5, 1.0, 2.0}}});
    case BaselineKind::Ridge: return expand_grid({{"lambda", {1e-3, 1e-2, 1e-1, 1.0}}});
    case BaselineKind::KNN: return expand_grid({{"k", {1, 5, 15, 25}}});
    case BaselineKind::DNN: return expand_grid({{"epochs", {30, 60}}, {"lr", {0.04}}});
  }
  return {};
}

std::vector<Label> fit_predict_baseline(BaselineKind kind, const ParamSet& params,
                                        std::span<const EncodedExample> train,
                                        std::span<const EncodedExample> test,
                                        std::size_t vocab_size, std::uint64_t seed) {
  const auto ys = labels_of(train);
  const BowScheme scheme = baseline_scheme(kind);
  TfIdf idf;
  if (scheme == BowScheme::TfIdf) idf = TfIdf::fit(train, vocab_size);
  const TfIdf* idf_ptr = scheme == BowScheme::TfIdf ? &idf : nullptr;
  const auto xtrain = featurize_all(train, vocab_size, scheme, idf_ptr);
  const auto xtest = featurize_all(test, vocab_size, scheme, idf_ptr);

  std::vector<Label> out;
  out.reserve(xtest.size());
  switch (kind) {
    case BaselineKind::MNB: {
      const auto m = MultinomialNB::fit(xtrain, ys, vocab_size, params.get("alpha"));
      for (const auto& x : xtest) out.push_back(m.predict(x));
      break;
    }
    case BaselineKind::Ridge: {
      const auto m = RidgeClassifier::fit(xtrain, ys, vocab_size, params.get("lambda"));
      for (const auto& x : xtest) out.push_back(m.predict(x));
      break;
    }
    case BaselineKind::KNN: {
      const int k = as_int(params.get("k"), "k");
      const KnnClassifier m(xtrain, ys);
      for (const auto& x : xtest) out.push_back(m.predict(x, k));
      break;
    }
    case BaselineKind::DNN: {
      DnnTrainConfig cfg;
      cfg.epochs = as_int(params.get("epochs", cfg.epochs), "epochs");
      cfg.lr = params.get("lr", cfg.lr);
      cfg.batch_size = as_int(params.get("batch_size", cfg.batch_size), "batch_size");
      cfg.seed = seed;
      DnnModel m(vocab_size);
      m.initialize(seed);
      train_dnn(xtrain, ys, m, cfg);
      for (const auto& x : xtest) out.push_back(dnn_predict(x, m));
      break;
    }
  }
  return out;
}

FoldEvaluator make_baseline_evaluator(BaselineKind kind, std::span<const EncodedExample> examples,
                                      std::size_t vocab_size, std::uint64_t seed) {
  return [=](const ParamSet& params, const Fold& fold) {
    std::vector<EncodedExample> train, test;
    train.reserve(fold.train.size());
    test.reserve(fold.test.size());
    for (auto i : fold.train) train.push_back(examples[i]);
    for (auto i : fold.test) test.push_back(examples[i]);
    const auto predicted = fit_predict_baseline(kind, params, train, test, vocab_size, seed);
    const auto actual = labels_of(test);
    return macro_f1(predicted, actual);
  };
}

}  // namespace hofnet
