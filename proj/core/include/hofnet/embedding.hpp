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
#include <utility>
#include <vector>

#include "hofnet/corpus.hpp"

namespace hofnet {

enum class Objective { CBOW, SkipGram };

Objective parse_objective(std::string_view name);
std::string_view objective_name(Objective objective);

struct EmbeddingConfig {
  int dim = 200;
  int window = 5;
  int min_count = 2;
  int epochs = 10;
  int negatives = 5;
  double initial_lr = 0.025;
  Objective objective = Objective::CBOW;

  void validate() const;  // throws ConfigError
};

// Input (W_in) and output (W_out) word vectors, row-major V x dim.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::size_t rows, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }

  std::span<double> input(std::size_t row) { return {input_.data() + row * dim_, dim_}; }
  std::span<const double> input(std::size_t row) const {
    return {input_.data() + row * dim_, dim_};
  }
  std::span<double> output(std::size_t row) { return {output_.data() + row * dim_, dim_}; }
  std::span<const double> output(std::size_t row) const {
    return {output_.data() + row * dim_, dim_};
  }

  std::vector<double>& input_values() { return input_; }
  const std::vector<double>& input_values() const { return input_; }
  std::vector<double>& output_values() { return output_; }
  const std::vector<double>& output_values() const { return output_; }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> input_;
  std::vector<double> output_;
};

// Context span [begin, end) around `center` for a sentence of `length`
// tokens; the center itself is excluded by the caller. The window is fixed
// (no random shrinking).
std::pair<std::size_t, std::size_t> context_span(std::size_t length, std::size_t center,
                                                 std::size_t window);
std::size_t context_size(std::size_t length, std::size_t center, std::size_t window);

// One training window. For CBOW the mean of the context input vectors
// predicts `center` against `negatives` (k ids). For skip-gram the center
// input vector predicts each context word in turn, and `negatives` holds k
// ids per context word, in context order.
struct TrainingWindow {
  std::vector<std::int32_t> context;
  std::int32_t center = 0;
  std::vector<std::int32_t> negatives;
};

// Negative-sampling loss of one window:
//   -log s(h.u_pos) - sum_neg log s(-h.u_neg)
double window_loss(const EmbeddingMatrix& m, Objective objective, const TrainingWindow& w);

// Dense gradient of window_loss with respect to W_in and W_out.
struct EmbeddingGradient {
  std::vector<double> input;
  std::vector<double> output;
};
EmbeddingGradient window_gradient(const EmbeddingMatrix& m, Objective objective,
                                  const TrainingWindow& w);

struct EmbeddingTrainingLog {
  std::vector<double> epoch_loss;  // mean window loss per epoch
  std::uint64_t windows = 0;
};

// Trains word vectors with negative sampling over a unigram^0.75 noise
// distribution. Sentences are id sequences over a vocabulary of
// `vocab_size` words; xxpad and xxunk occurrences are skipped. The learning
// rate decays linearly from initial_lr to initial_lr / 10. Single-threaded
// and bitwise deterministic for a given seed.
EmbeddingMatrix train_embeddings(std::span<const EncodedExample> corpus,
                                 std::size_t vocab_size, const EmbeddingConfig& config,
                                 std::uint64_t seed, EmbeddingTrainingLog* log = nullptr);

double cosine(std::span<const double> u, std::span<const double> v);

struct Neighbour {
  std::string word;
  double similarity;
};

// Top-k words by cosine similarity of input vectors, excluding the query and
// zero rows. Ties go to the lower id.
std::vector<Neighbour> nearest(const EmbeddingMatrix& m, const Vocabulary& vocab,
                               const std::string& word, int k);

// Classic word2vec text format: "V dim" header, then "word v1 ... v_dim".
// Only W_in is written. Values use the shortest round-trip decimal form.
void save_text(const EmbeddingMatrix& m, const Vocabulary& vocab,
               const std::filesystem::path& path);
void write_text(const EmbeddingMatrix& m, const Vocabulary& vocab, std::ostream& out);

struct WordVectors {
  Vocabulary vocab;       // reserved ids first, then file order
  EmbeddingMatrix matrix; // W_in filled, W_out zero; reserved rows zero unless in file
};
WordVectors load_text(const std::filesystem::path& path);
WordVectors read_text(std::istream& in);

}  // namespace hofnet
