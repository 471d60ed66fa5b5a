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

#include "hofnet/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hofnet/error.hpp"
#include "hofnet/rng.hpp"

namespace hofnet {

namespace {

// log(1 + e^x) without overflow.
double softplus(double x) {
  return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Row-sparse gradient: parallel lists of row ids and dim-sized blocks.
// Rows may repeat; applying each block in turn is equivalent to the dense sum.
struct SparseGradient {
  std::size_t dim = 0;
  std::vector<std::int32_t> input_rows;
  std::vector<double> input;
  std::vector<std::int32_t> output_rows;
  std::vector<double> output;

  void clear() {
    input_rows.clear();
    input.clear();
    output_rows.clear();
    output.clear();
  }
};

// Scores `h` against one positive and a run of negatives, accumulating
// dL/dh into grad_h and dL/du into g.output. Returns the loss.
double score_pairs(const EmbeddingMatrix& m, std::span<const double> h, std::int32_t positive,
                   std::span<const std::int32_t> negatives, std::span<double> grad_h,
                   SparseGradient& g) {
  double loss = 0.0;
  auto one = [&](std::int32_t row, bool is_positive) {
    const auto u = m.output(row);
    const double s = dot(h, u);
    double coef;
    if (is_positive) {
      loss += softplus(-s);
      coef = sigmoid(s) - 1.0;
    } else {
      loss += softplus(s);
      coef = sigmoid(s);
    }
    for (std::size_t d = 0; d < h.size(); ++d) grad_h[d] += coef * u[d];
    g.output_rows.push_back(row);
    for (std::size_t d = 0; d < h.size(); ++d) g.output.push_back(coef * h[d]);
  };
  one(positive, true);
  for (auto n : negatives) one(n, false);
  return loss;
}

double window_kernel(const EmbeddingMatrix& m, Objective objective, const TrainingWindow& w,
                     SparseGradient& g) {
  const std::size_t dim = m.dim();
  g.dim = dim;
  if (w.context.empty()) return 0.0;
  std::vector<double> h(dim, 0.0);
  std::vector<double> grad_h(dim, 0.0);
  double loss = 0.0;

  if (objective == Objective::CBOW) {
    const double inv = 1.0 / static_cast<double>(w.context.size());
    for (auto c : w.context) {
      const auto v = m.input(c);
      for (std::size_t d = 0; d < dim; ++d) h[d] += v[d] * inv;
    }
    loss = score_pairs(m, h, w.center, w.negatives, grad_h, g);
    for (auto c : w.context) {
      g.input_rows.push_back(c);
      for (std::size_t d = 0; d < dim; ++d) g.input.push_back(grad_h[d] * inv);
    }
    return loss;
  }

  if (w.negatives.size() % w.context.size() != 0) {
    throw std::invalid_argument("skip-gram window needs k negatives per context word");
  }
  const std::size_t k = w.negatives.size() / w.context.size();
  const auto center = m.input(w.center);
  std::copy(center.begin(), center.end(), h.begin());
  for (std::size_t j = 0; j < w.context.size(); ++j) {
    loss += score_pairs(m, h, w.context[j],
                        std::span(w.negatives).subspan(j * k, k), grad_h, g);
  }
  g.input_rows.push_back(w.center);
  g.input.insert(g.input.end(), grad_h.begin(), grad_h.end());
  return loss;
}

void check_rows(const EmbeddingMatrix& m, const TrainingWindow& w) {
  auto bad = [&](std::int32_t id) { return id < 0 || static_cast<std::size_t>(id) >= m.rows(); };
  if (bad(w.center) || std::any_of(w.context.begin(), w.context.end(), bad) ||
      std::any_of(w.negatives.begin(), w.negatives.end(), bad)) {
    throw ShapeError("window refers to a row outside the embedding matrix");
  }
}

// Samples ids proportionally to count^0.75.
class NoiseDistribution {
 public:
  explicit NoiseDistribution(const std::vector<std::uint64_t>& counts) {
    double total = 0.0;
    for (std::size_t id = 0; id < counts.size(); ++id) {
      if (counts[id] == 0) continue;
      total += std::pow(static_cast<double>(counts[id]), 0.75);
      ids_.push_back(static_cast<std::int32_t>(id));
      cumulative_.push_back(total);
    }
  }

  std::int32_t sample(Rng& rng) const {
    const double x = rng.uniform() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
    if (it == cumulative_.end()) --it;
    return ids_[static_cast<std::size_t>(it - cumulative_.begin())];
  }

 private:
  std::vector<std::int32_t> ids_;
  std::vector<double> cumulative_;
};

}  // namespace

Objective parse_objective(std::string_view name) {
  if (name == "cbow") return Objective::CBOW;
  if (name == "skipgram" || name == "skip-gram" || name == "sg") return Objective::SkipGram;
  throw ConfigError("unknown objective '" + std::string(name) + "' (cbow|skipgram)");
}

std::string_view objective_name(Objective objective) {
  return objective == Objective::CBOW ? "cbow" : "skipgram";
}

void EmbeddingConfig::validate() const {
  if (dim < 1) throw ConfigError("embedding dim must be at least 1");
  if (window < 1) throw ConfigError("window must be at least 1");
  if (min_count < 1) throw ConfigError("min_count must be at least 1");
  if (epochs < 1) throw ConfigError("epochs must be at least 1");
  if (negatives < 1) throw ConfigError("negatives must be at least 1");
  if (!(initial_lr > 0.0)) throw ConfigError("initial learning rate must be positive");
}

EmbeddingMatrix::EmbeddingMatrix(std::size_t rows, std::size_t dim)
    : rows_(rows), dim_(dim), input_(rows * dim, 0.0), output_(rows * dim, 0.0) {}

bool EmbeddingMatrix::all_finite() const {
  auto finite = [](double x) { return std::isfinite(x); };
  return std::all_of(input_.begin(), input_.end(), finite) &&
         std::all_of(output_.begin(), output_.end(), finite);
}

std::pair<std::size_t, std::size_t> context_span(std::size_t length, std::size_t center,
                                                 std::size_t window) {
  const std::size_t begin = center >= window ? center - window : 0;
  const std::size_t end = std::min(length, center + window + 1);
  return {begin, end};
}

std::size_t context_size(std::size_t length, std::size_t center, std::size_t window) {
  const auto [b, e] = context_span(length, center, window);
  return e - b - 1;
}

double window_loss(const EmbeddingMatrix& m, Objective objective, const TrainingWindow& w) {
  check_rows(m, w);
  SparseGradient g;
  return window_kernel(m, objective, w, g);
}

EmbeddingGradient window_gradient(const EmbeddingMatrix& m, Objective objective,
                                  const TrainingWindow& w) {
  check_rows(m, w);
  SparseGradient g;
  window_kernel(m, objective, w, g);
  const std::size_t dim = m.dim();
  EmbeddingGradient dense{std::vector<double>(m.rows() * dim, 0.0),
                          std::vector<double>(m.rows() * dim, 0.0)};
  for (std::size_t r = 0; r < g.input_rows.size(); ++r) {
    for (std::size_t d = 0; d < dim; ++d) {
      dense.input[g.input_rows[r] * dim + d] += g.input[r * dim + d];
    }
  }
  for (std::size_t r = 0; r < g.output_rows.size(); ++r) {
    for (std::size_t d = 0; d < dim; ++d) {
      dense.output[g.output_rows[r] * dim + d] += g.output[r * dim + d];
    }
  }
  return dense;
}

EmbeddingMatrix train_embeddings(std::span<const EncodedExample> corpus, std::size_t vocab_size,
                                 const EmbeddingConfig& config, std::uint64_t seed,
                                 EmbeddingTrainingLog* log) {
  config.validate();
  if (vocab_size == 0) throw DataError("empty vocabulary");

  std::vector<std::vector<std::int32_t>> sentences;
  std::vector<std::uint64_t> counts(vocab_size, 0);
  std::size_t tokens = 0;
  for (const auto& ex : corpus) {
    std::vector<std::int32_t> s;
    for (auto id : ex.ids) {
      if (id < 0 || static_cast<std::size_t>(id) >= vocab_size) {
        throw ShapeError("token id " + std::to_string(id) + " outside vocabulary of " +
                         std::to_string(vocab_size));
      }
      if (id == Vocabulary::kPadId || id == Vocabulary::kUnknownId) continue;
      s.push_back(id);
      ++counts[id];
    }
    tokens += s.size();
    if (!s.empty()) sentences.push_back(std::move(s));
  }
  if (tokens == 0) throw DataError("empty corpus: no trainable tokens");

  const auto dim = static_cast<std::size_t>(config.dim);
  const auto window = static_cast<std::size_t>(config.window);
  EmbeddingMatrix m(vocab_size, dim);
  {
    Rng init = Rng::derive(seed, "embedding-init");
    const double a = 0.5 / static_cast<double>(dim);
    for (auto& x : m.input_values()) x = init.uniform(-a, a);
  }

  std::uint64_t windows_per_epoch = 0;
  for (const auto& s : sentences) {
    if (s.size() >= 2) windows_per_epoch += s.size();
  }
  const double total_steps =
      std::max(1.0, static_cast<double>(windows_per_epoch) * config.epochs);

  NoiseDistribution noise(counts);
  Rng rng = Rng::derive(seed, "embedding-negatives");
  SparseGradient g;
  TrainingWindow w;
  std::uint64_t step = 0;
  EmbeddingTrainingLog local;

  // A draw that hits the target is redrawn a few times; with a tiny
  // vocabulary it may still coincide, which only weakens that step.
  auto draw_negatives = [&](std::int32_t target) {
    for (int k = 0; k < config.negatives; ++k) {
      auto n = noise.sample(rng);
      for (int retry = 0; retry < 3 && n == target; ++retry) n = noise.sample(rng);
      w.negatives.push_back(n);
    }
  };

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    double epoch_loss = 0.0;
    std::uint64_t epoch_windows = 0;
    for (const auto& s : sentences) {
      if (s.size() < 2) continue;
      for (std::size_t i = 0; i < s.size(); ++i) {
        const auto [b, e] = context_span(s.size(), i, window);
        w.context.clear();
        w.negatives.clear();
        for (std::size_t j = b; j < e; ++j) {
          if (j != i) w.context.push_back(s[j]);
        }
        w.center = s[i];
        if (config.objective == Objective::CBOW) {
          draw_negatives(w.center);
        } else {
          for (auto c : w.context) draw_negatives(c);
        }

        g.clear();
        epoch_loss += window_kernel(m, config.objective, w, g);
        ++epoch_windows;

        const double lr =
            config.initial_lr * (1.0 - 0.9 * static_cast<double>(step) / total_steps);
        ++step;
        for (std::size_t r = 0; r < g.input_rows.size(); ++r) {
          auto row = m.input(g.input_rows[r]);
          for (std::size_t d = 0; d < dim; ++d) row[d] -= lr * g.input[r * dim + d];
        }
        for (std::size_t r = 0; r < g.output_rows.size(); ++r) {
          auto row = m.output(g.output_rows[r]);
          for (std::size_t d = 0; d < dim; ++d) row[d] -= lr * g.output[r * dim + d];
        }
      }
    }
    local.epoch_loss.push_back(epoch_windows ? epoch_loss / static_cast<double>(epoch_windows)
                                             : 0.0);
    local.windows += epoch_windows;
  }
  if (log) *log = std::move(local);
  return m;
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("cosine: length mismatch");
  const double nu = std::sqrt(dot(u, u));
  const double nv = std::sqrt(dot(v, v));
  if (nu == 0.0 || nv == 0.0) throw std::invalid_argument("cosine: zero vector");
  return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

std::vector<Neighbour> nearest(const EmbeddingMatrix& m, const Vocabulary& vocab,
                               const std::string& word, int k) {
  if (k < 1) throw std::invalid_argument("nearest: k must be at least 1");
  const auto query = vocab.find(word);
  if (!query) throw DataError("word '" + word + "' is not in the vocabulary");
  const auto q = m.input(*query);
  std::vector<std::pair<double, std::int32_t>> scored;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (static_cast<std::int32_t>(r) == *query) continue;
    const auto v = m.input(r);
    if (dot(v, v) == 0.0) continue;
    scored.emplace_back(cosine(q, v), static_cast<std::int32_t>(r));
  }
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(k), scored.size());
  std::partial_sort(scored.begin(), scored.begin() + take, scored.end(),
                    [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first : a.second < b.second;
                    });
  std::vector<Neighbour> out;
  for (std::size_t i = 0; i < take; ++i) {
    out.push_back({vocab.word(scored[i].second), scored[i].first});
  }
  return out;
}

void write_text(const EmbeddingMatrix& m, const Vocabulary& vocab, std::ostream& out) {
  if (vocab.size() != m.rows()) {
    throw ShapeError("vocabulary has " + std::to_string(vocab.size()) + " words, matrix has " +
                     std::to_string(m.rows()) + " rows");
  }
  out << m.rows() << ' ' << m.dim() << '\n';
  char buf[64];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << vocab.word(static_cast<std::int32_t>(r));
    for (double x : m.input(r)) {
      auto res = std::to_chars(buf, buf + sizeof buf, x);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    }
    out << '\n';
  }
}

void save_text(const EmbeddingMatrix& m, const Vocabulary& vocab,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_text(m, vocab, out);
  if (!out) throw IoError("write failed for " + path.string());
}

WordVectors read_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("malformed header: empty file", 1);
  std::size_t rows = 0, dim = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> rows >> dim) || (hs >> extra) || dim == 0) {
      throw DataError("malformed header '" + line + "' (expected 'V dim')", 1);
    }
  }
  struct Row {
    std::string word;
    std::vector<double> values;
  };
  std::vector<Row> parsed;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Row row;
    std::size_t pos = 0;
    auto next_field = [&]() -> std::string_view {
      while (pos < line.size() && line[pos] == ' ') ++pos;
      const std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ') ++pos;
      return std::string_view(line).substr(start, pos - start);
    };
    row.word = std::string(next_field());
    for (auto f = next_field(); !f.empty(); f = next_field()) {
      double x = 0.0;
      auto res = std::from_chars(f.data(), f.data() + f.size(), x);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
        throw DataError("bad number '" + std::string(f) + "'", line_no);
      }
      row.values.push_back(x);
    }
    if (row.values.size() != dim) {
      throw DataError("expected " + std::to_string(dim) + " values, got " +
                          std::to_string(row.values.size()),
                      line_no);
    }
    parsed.push_back(std::move(row));
  }
  if (parsed.size() != rows) {
    throw DataError("header declares " + std::to_string(rows) + " rows, file has " +
                    std::to_string(parsed.size()));
  }

  WordVectors wv;
  for (const auto& r : parsed) {
    if (wv.vocab.find(r.word) && r.word != placeholder::kPad && r.word != placeholder::kUnknown) {
      throw DataError("duplicate word '" + r.word + "'");
    }
    wv.vocab.add(r.word);
  }
  wv.matrix = EmbeddingMatrix(wv.vocab.size(), dim);
  for (const auto& r : parsed) {
    const auto id = *wv.vocab.find(r.word);
    std::copy(r.values.begin(), r.values.end(), wv.matrix.input(id).begin());
  }
  return wv;
}

WordVectors load_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_text(in);
}

}  // namespace hofnet
