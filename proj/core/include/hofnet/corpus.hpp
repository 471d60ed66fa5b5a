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
#include <unordered_map>
#include <utility>
#include <vector>

#include "hofnet/preprocess.hpp"
#include "hofnet/types.hpp"

namespace hofnet {

struct Example {
  std::string id;
  TokenStream tokens;
  std::optional<Label> label;
};

// Ordered collection of examples with unique ids.
class Dataset {
 public:
  Dataset() = default;

  // Throws DataError on a duplicate id.
  void add(Example example);

  const std::vector<Example>& examples() const { return examples_; }
  const Example& operator[](std::size_t i) const { return examples_[i]; }
  std::size_t size() const { return examples_.size(); }
  bool empty() const { return examples_.empty(); }
  bool labelled() const;

  Dataset subset(const std::vector<std::size_t>& indices) const;

  auto begin() const { return examples_.begin(); }
  auto end() const { return examples_.end(); }

 private:
  std::vector<Example> examples_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Reads a TSV with a header naming `text_id`, `text` and optionally
// `task_1` (HOF/NOT); other columns are ignored. Text goes through the given
// preprocessor. Errors carry the offending line number.
Dataset load_tsv(const std::filesystem::path& path,
                 const Preprocessor& preprocessor = Preprocessor());
Dataset read_tsv(std::istream& in, const Preprocessor& preprocessor = Preprocessor());

// Word <-> id map. Ids are dense; id 0 is xxpad and id 1 is xxunk whatever
// their counts. Remaining words are ordered by descending count, ties broken
// by byte-wise comparison.
class Vocabulary {
 public:
  static constexpr std::int32_t kPadId = 0;
  static constexpr std::int32_t kUnknownId = 1;

  Vocabulary();

  // Builds from token counts over every stream of every dataset. Words seen
  // fewer than min_count times are dropped; there is no size cap.
  static Vocabulary build(const std::vector<const Dataset*>& datasets, int min_count);
  static Vocabulary build(const std::vector<TokenStream>& streams, int min_count);

  // Appends a word with the given count if it is not present. Returns its id.
  std::int32_t add(const std::string& word, std::uint64_t count = 0);

  std::size_t size() const { return words_.size(); }
  std::optional<std::int32_t> find(const std::string& word) const;
  std::int32_t id_or_unknown(const std::string& word) const;
  const std::string& word(std::int32_t id) const { return words_.at(id); }
  std::uint64_t count(std::int32_t id) const { return counts_.at(id); }
  const std::vector<std::string>& words() const { return words_; }
  int min_count() const { return min_count_; }

  // `word<TAB>count` lines in id order.
  void dump(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static Vocabulary load(const std::filesystem::path& path);
  static Vocabulary read(std::istream& in);

  // FNV-1a over the dumped words; identifies the id assignment.
  std::uint64_t fingerprint() const;

 private:
  std::vector<std::string> words_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::string, std::int32_t> ids_;
  int min_count_ = 1;
};

Vocabulary build_vocab(const std::vector<const Dataset*>& datasets, int min_count);

struct EncodedExample {
  std::vector<std::int32_t> ids;
  std::optional<Label> label;
};

EncodedExample encode(const TokenStream& tokens, const Vocabulary& vocab);
EncodedExample encode(const Example& example, const Vocabulary& vocab);
std::vector<EncodedExample> encode(const Dataset& dataset, const Vocabulary& vocab);
TokenStream decode(const std::vector<std::int32_t>& ids, const Vocabulary& vocab);

struct SplitOptions {
  double val_fraction = 0.2;
  bool stratified = false;
};

// Seeded shuffle, then the first round(val_fraction * N) examples become the
// validation set. Stratified mode apportions the validation quota across
// classes by largest remainder so the total is unchanged. Both parts keep
// the original relative order.
std::pair<Dataset, Dataset> split_train_val(const Dataset& dataset, std::uint64_t seed,
                                            SplitOptions options = {});

// round(val_fraction * N), kept within [1, N - 1] so neither side is empty.
std::size_t validation_size(std::size_t n, double val_fraction);

struct Fold {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// k folds over a seeded permutation; the first N mod k folds get one extra
// test example. Index lists are sorted ascending.
std::vector<Fold> kfold(std::size_t n, int k, std::uint64_t seed);
inline std::vector<Fold> kfold(const Dataset& dataset, int k, std::uint64_t seed) {
  return kfold(dataset.size(), k, seed);
}

}  // namespace hofnet
