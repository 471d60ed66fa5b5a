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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hofnet/cnn.hpp"
#include "hofnet/embedding.hpp"

namespace hofnet::cli {

// Everything a command may need. Loaded from an optional JSON file, then
// overridden by command-line flags.
struct RunConfig {
  std::filesystem::path train;
  std::filesystem::path test;
  std::filesystem::path vectors;
  std::filesystem::path checkpoint;
  std::filesystem::path history;
  std::filesystem::path suffixes;
  std::optional<std::uint64_t> seed;
  double val_fraction = 0.2;
  int min_count = 2;
  int folds = 10;
  bool stem = true;
  CnnConfig cnn;
  TrainConfig training;
  EmbeddingConfig embedding;

  // Throws ConfigError on unknown keys or wrong types.
  static RunConfig from_json(const std::string& text);
  static RunConfig load(const std::filesystem::path& path);

  // Throws ConfigError when no seed was given.
  std::uint64_t require_seed() const;
};

// Runs the tool with argv-style arguments (args[0] is the program name).
// Returns the exit status; diagnostics go to `err` as a single line
// "error: <kind>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Path of the vocabulary file stored next to a checkpoint.
std::filesystem::path vocab_path_for(const std::filesystem::path& checkpoint);

}  // namespace hofnet::cli
