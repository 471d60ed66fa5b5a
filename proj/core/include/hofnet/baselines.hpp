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
#include <span>
#include <string_view>
#include <vector>

#include "hofnet/bow.hpp"
#include "hofnet/dnn.hpp"
#include "hofnet/grid_search.hpp"
#include "hofnet/knn.hpp"
#include "hofnet/mnb.hpp"
#include "hofnet/ridge.hpp"

namespace hofnet {

enum class BaselineKind { MNB, Ridge, KNN, DNN };

BaselineKind parse_baseline(std::string_view name);  // mnb | ridge | knn | dnn
std::string_view baseline_name(BaselineKind kind);

// Feature scheme each family trains on: MNB uses counts, the rest TF-IDF.
BowScheme baseline_scheme(BaselineKind kind);

// Hyperparameter names: mnb "alpha"; ridge "lambda"; knn "k";
// dnn "epochs", "lr", "batch_size" (lr defaults to 0.04).
std::vector<ParamSet> default_grid(BaselineKind kind);

// Fits on `train` (which must be labelled) and predicts `test`. TF-IDF
// weights are fitted on `train` only.
std::vector<Label> fit_predict_baseline(BaselineKind kind, const ParamSet& params,
                                        std::span<const EncodedExample> train,
                                        std::span<const EncodedExample> test,
                                        std::size_t vocab_size, std::uint64_t seed);

// Fold evaluator scoring macro-F1 on each fold's test indices.
FoldEvaluator make_baseline_evaluator(BaselineKind kind, std::span<const EncodedExample> examples,
                                      std::size_t vocab_size, std::uint64_t seed);

}  // namespace hofnet
