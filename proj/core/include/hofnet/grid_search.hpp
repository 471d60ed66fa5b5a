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

#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hofnet/corpus.hpp"

namespace hofnet {

// One hyperparameter assignment, in the grid's key order.
struct ParamSet {
  std::vector<std::pair<std::string, double>> values;

  // Throws ConfigError if `name` is absent and no fallback is given.
  double get(const std::string& name) const;
  double get(const std::string& name, double fallback) const;
  std::string to_string() const;  // "alpha=1 k=5"
  bool operator==(const ParamSet&) const = default;
};

// Cartesian product; the last key varies fastest.
std::vector<ParamSet> expand_grid(const std::vector<std::pair<std::string, std::vector<double>>>& axes);

// A JSON grid is either an object of lists (expanded as a product, keys in
// file order) or a list of objects (taken as explicit points in order).
std::vector<ParamSet> parse_grid_json(const std::string& text);
std::vector<ParamSet> load_grid(const std::filesystem::path& path);

struct CvRow {
  ParamSet params;
  std::vector<double> fold_scores;
  double mean = 0.0;
};

struct GridResult {
  std::vector<CvRow> rows;  // grid order
  std::size_t best = 0;     // first row with the highest mean
  const ParamSet& best_params() const { return rows.at(best).params; }
};

// Score of one grid point on one fold (higher is better).
using FoldEvaluator = std::function<double(const ParamSet&, const Fold&)>;

// Exhaustive search. Throws ConfigError on an empty grid or empty folds.
GridResult grid_search(const std::vector<ParamSet>& grid, const std::vector<Fold>& folds,
                       const FoldEvaluator& evaluate);

// Columns: parameter names, fold_1..fold_k, mean, best ("*" on the chosen row).
std::string cv_table_tsv(const GridResult& result);

}  // namespace hofnet
