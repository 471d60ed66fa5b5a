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

#include "hofnet/grid_search.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hofnet/error.hpp"

namespace hofnet {
namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double number_value(const nlohmann::ordered_json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("grid value for '" + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

double ParamSet::get(const std::string& name) const {
  for (const auto& [k, v] : values) {
    if (k == name) return v;
  }
  throw ConfigError("missing hyperparameter '" + name + "'");
}

double ParamSet::get(const std::string& name, double fallback) const {
  for (const auto& [k, v] : values) {
    if (k == name) return v;
  }
  return fallback;
}

std::string ParamSet::to_string() const {
  std::string out;
  for (const auto& [k, v] : values) {
    if (!out.empty()) out += ' ';
    out += k + "=" + format_number(v);
  }
  return out;
}

std::vector<ParamSet> expand_grid(
    const std::vector<std::pair<std::string, std::vector<double>>>& axes) {
  std::vector<ParamSet> out{ParamSet{}};
  for (const auto& [name, choices] : axes) {
    if (choices.empty()) throw ConfigError("grid axis '" + name + "' has no values");
    std::vector<ParamSet> next;
    next.reserve(out.size() * choices.size());
    for (const auto& partial : out) {
      for (double c : choices) {
        ParamSet p = partial;
        p.values.emplace_back(name, c);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<ParamSet> parse_grid_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid grid JSON: ") + e.what());
  }
  std::vector<ParamSet> grid;
  if (j.is_object()) {
    std::vector<std::pair<std::string, std::vector<double>>> axes;
    for (const auto& [key, val] : j.items()) {
      std::vector<double> choices;
      if (val.is_array()) {
        for (const auto& v : val) choices.push_back(number_value(v, key));
      } else {
        choices.push_back(number_value(val, key));
      }
      axes.emplace_back(key, std::move(choices));
    }
    grid = expand_grid(axes);
  } else if (j.is_array()) {
    for (const auto& point : j) {
      if (!point.is_object()) throw ConfigError("grid points must be JSON objects");
      ParamSet p;
      for (const auto& [key, val] : point.items()) p.values.emplace_back(key, number_value(val, key));
      grid.push_back(std::move(p));
    }
  } else {
    throw ConfigError("grid JSON must be an object or an array");
  }
  if (grid.empty()) throw ConfigError("grid is empty");
  return grid;
}

std::vector<ParamSet> load_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open grid file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_grid_json(ss.str());
}

GridResult grid_search(const std::vector<ParamSet>& grid, const std::vector<Fold>& folds,
                       const FoldEvaluator& evaluate) {
  if (grid.empty()) throw ConfigError("grid is empty");
  if (folds.empty()) throw ConfigError("grid search needs at least one fold");
  GridResult result;
  for (const auto& point : grid) {
    CvRow row{point, {}, 0.0};
    double sum = 0.0;
    for (const auto& fold : folds) {
      const double s = evaluate(point, fold);
      row.fold_scores.push_back(s);
      sum += s;
    }
    row.mean = sum / static_cast<double>(folds.size());
    if (result.rows.empty() || row.mean > result.rows[result.best].mean) {
      result.best = result.rows.size();
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string cv_table_tsv(const GridResult& result) {
  std::ostringstream out;
  if (result.rows.empty()) return {};
  const auto& first = result.rows.front();
  for (const auto& [k, v] : first.params.values) out << k << '\t';
  for (std::size_t f = 0; f < first.fold_scores.size(); ++f) out << "fold_" << f + 1 << '\t';
  out << "mean\tbest\n";
  char buf[32];
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    const auto& row = result.rows[r];
    for (const auto& [k, v] : row.params.values) out << format_number(v) << '\t';
    for (double s : row.fold_scores) {
      std::snprintf(buf, sizeof buf, "%.6f", s);
      out << buf << '\t';
    }
    std::snprintf(buf, sizeof buf, "%.6f", row.mean);
    out << buf << '\t' << (r == result.best ? "*" : "") << '\n';
  }
  return out.str();
}

}  // namespace hofnet
