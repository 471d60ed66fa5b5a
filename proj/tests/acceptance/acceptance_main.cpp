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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.
// `acceptance 3 5` runs a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli/commands.hpp"
#include "hofnet/baselines.hpp"
#include "hofnet/cnn.hpp"
#include "hofnet/corpus.hpp"
#include "hofnet/embedding.hpp"
#include "hofnet/eval.hpp"
#include "hofnet/preprocess.hpp"
#include "hofnet/synthetic.hpp"
#include "support/grad_cases.hpp"
#include "support/preprocess_golden.hpp"

namespace {

using namespace hofnet;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ---- 1: metrics oracle ---------------------------------------------------

Outcome metrics_oracle() {
  const auto start = Clock::now();
  // Rows are actual HOF / NOT, columns predicted HOF / NOT.
  const ConfusionMatrix cm({{{446, 159}, {80, 633}}});
  const EvalReport r = report(cm);
  struct Expect {
    const char* what;
    double got;
    double want;
  };
  const Expect checks[] = {
      {"HOF precision", r.of(Label::HOF).precision, 0.85}, {"HOF recall", r.of(Label::HOF).recall, 0.74},
      {"HOF f1", r.of(Label::HOF).f1, 0.79},               {"NOT precision", r.of(Label::NOT).precision, 0.80},
      {"NOT recall", r.of(Label::NOT).recall, 0.89},       {"NOT f1", r.of(Label::NOT).f1, 0.84},
      {"accuracy", r.accuracy, 0.82},                      {"macro precision", r.macro.precision, 0.82},
      {"macro recall", r.macro.recall, 0.81},              {"macro f1", r.macro.f1, 0.81},
      {"weighted precision", r.weighted.precision, 0.82},  {"weighted recall", r.weighted.recall, 0.82},
      {"weighted f1", r.weighted.f1, 0.82},
  };
  std::string bad;
  for (const auto& c : checks) {
    if (std::abs(round2(c.got) - c.want) > 1e-12) bad += std::string(" ") + c.what + "=" + fmt("%.4f", c.got);
  }
  const double t = seconds_since(start);
  const bool ok = bad.empty() && t < 1.0;
  return {ok, bad.empty() ? "13/13 figures match at 2 decimals, " + fmt("%.4f s", t) : "mismatch:" + bad};
}

// ---- 2: gradient oracles -------------------------------------------------

double worst(const std::vector<hofnet::testing::GroupError>& errs, std::string& where) {
  double w = 0.0;
  for (const auto& e : errs) {
    if (e.relative_error > w) {
      w = e.relative_error;
      where = e.name;
    }
  }
  return w;
}

double cnn_gradient_error(std::uint64_t seed, std::string& where) {
  hofnet::testing::CnnGradCase c;
  c.config.dim = 8;
  c.config.max_len = 7;
  c.config.counts = {2, 2, 4};
  c.config.dense = 8;
  c.vocab = 12;
  return worst(hofnet::testing::cnn_gradient_check(c, seed), where);
}

double dnn_gradient_error(std::uint64_t seed, std::string& where) {
  return worst(hofnet::testing::dnn_gradient_check({}, seed), where);
}

Outcome gradient_oracles() {
  const auto start = Clock::now();
  double cnn_worst = 0.0, dnn_worst = 0.0;
  std::string cnn_where, dnn_where;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::string w;
    const double c = cnn_gradient_error(seed, w);
    if (c >= cnn_worst) cnn_worst = c, cnn_where = w + "@seed" + std::to_string(seed);
    const double d = dnn_gradient_error(seed, w);
    if (d >= dnn_worst) dnn_worst = d, dnn_where = w + "@seed" + std::to_string(seed);
  }
  const double t = seconds_since(start);
  const bool ok = cnn_worst < 1e-3 && dnn_worst < 1e-3 && t < 60.0;
  return {ok, "worst group rel. error CNN " + fmt("%.2e", cnn_worst) + " (" + cnn_where + "), DNN " +
                  fmt("%.2e", dnn_worst) + " (" + dnn_where + "), " + fmt("%.2f s", t)};
}

// ---- 3 and 5: planted-trigram task -----------------------------------------

struct SyntheticSplit {
  std::vector<EncodedExample> train;     // 80 % used for fitting
  std::vector<EncodedExample> val;       // 20 % of train, for early stopping
  std::vector<EncodedExample> fit_all;   // train + val
  std::vector<EncodedExample> held_out;  // 20 % of all
  std::size_t vocab = 0;
};

SyntheticSplit make_split(const TrigramTaskConfig& tc) {
  const TrigramTask task = generate_trigram_task(tc);
  auto [fit, held] = split_train_val(task.data, tc.seed, SplitOptions{0.2, true});
  auto [train, val] = split_train_val(fit, tc.seed + 1, SplitOptions{0.2, true});
  const Vocabulary vocab = Vocabulary::build(std::vector<const Dataset*>{&fit}, 1);
  return {encode(train, vocab), encode(val, vocab), encode(fit, vocab), encode(held, vocab), vocab.size()};
}

std::vector<Label> labels_of(const std::vector<EncodedExample>& xs) {
  std::vector<Label> out;
  for (const auto& x : xs) out.push_back(*x.label);
  return out;
}

struct CnnRun {
  double f1 = 0.0;
  int epochs = 0;
};

CnnRun run_cnn(const SyntheticSplit& s, std::uint64_t seed) {
  CnnConfig cfg = CnnConfig::scaled(32, 16, 32);
  cfg.max_len = 32;
  CnnModel model(cfg, s.vocab);
  model.initialize(seed);
  TrainConfig tc;
  tc.epochs = 20;
  tc.batch_size = 32;
  tc.adam.lr = 3e-3;
  tc.patience = 5;
  tc.seed = seed;
  const auto result = train_cnn(s.train, s.val, std::move(model), tc);
  return {macro_f1(predict_all(s.held_out, result.model), labels_of(s.held_out)),
          static_cast<int>(result.history.size())};
}

Outcome synthetic_cnn() {
  const auto start = Clock::now();
  TrigramTaskConfig tc;
  tc.seed = 2026;
  const SyntheticSplit s = make_split(tc);
  const CnnRun r = run_cnn(s, tc.seed);
  const double t = seconds_since(start);
  const bool ok = r.f1 >= 0.95 && r.epochs <= 20 && t < 300.0;
  return {ok, "held-out macro-F1 " + fmt("%.4f", r.f1) + " on " + std::to_string(s.held_out.size()) +
                  " tweets after " + std::to_string(r.epochs) + " epochs, " + fmt("%.1f s", t)};
}

Outcome ordering() {
  const auto start = Clock::now();
  TrigramTaskConfig tc;
  tc.seed = 2026;
  tc.label_noise = 0.1;
  tc.token_noise = 0.2;
  const SyntheticSplit s = make_split(tc);
  const double cnn = run_cnn(s, tc.seed).f1;
  const auto truth = labels_of(s.held_out);
  const auto folds = kfold(s.fit_all.size(), 10, tc.seed);
  bool ok = true;
  std::string detail = "CNN " + fmt("%.4f", cnn);
  for (BaselineKind kind : {BaselineKind::MNB, BaselineKind::Ridge, BaselineKind::KNN, BaselineKind::DNN}) {
    const auto grid = grid_search(default_grid(kind), folds,
                                  make_baseline_evaluator(kind, s.fit_all, s.vocab, tc.seed));
    const auto pred = fit_predict_baseline(kind, grid.best_params(), s.fit_all, s.held_out, s.vocab, tc.seed);
    const double f1 = macro_f1(pred, truth);
    ok = ok && cnn >= f1;
    detail += ", " + std::string(baseline_name(kind)) + " " + fmt("%.4f", f1) + " [" +
              grid.best_params().to_string() + "]";
  }
  detail += ", " + fmt("%.1f s", seconds_since(start));
  return {ok, detail};
}

// ---- 4: CBOW cliques -------------------------------------------------------

Outcome cbow_cliques() {
  const auto start = Clock::now();
  const auto sentences = generate_clique_corpus(5000, 8, 7);
  const Vocabulary vocab = Vocabulary::build(sentences, 1);
  std::vector<EncodedExample> corpus;
  for (const auto& s : sentences) corpus.push_back(encode(s, vocab));
  EmbeddingConfig cfg;
  cfg.dim = 16;
  cfg.window = 2;
  cfg.epochs = 10;
  cfg.min_count = 1;
  const EmbeddingMatrix m = train_embeddings(corpus, vocab.size(), cfg, 7);
  const std::vector<std::string> a{"a0", "a1", "a2"}, b{"b0", "b1", "b2"};
  auto vec = [&](const std::string& w) { return m.input(*vocab.find(w)); };
  double intra = 0.0, inter = 0.0;
  int ni = 0, nx = 0;
  for (const auto* group : {&a, &b}) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j, ++ni) intra += cosine(vec((*group)[i]), vec((*group)[j]));
    }
  }
  for (const auto& x : a) {
    for (const auto& y : b) {
      inter += cosine(vec(x), vec(y));
      ++nx;
    }
  }
  intra /= ni;
  inter /= nx;
  const double t = seconds_since(start);
  const bool ok = intra - inter >= 0.2 && t < 60.0;
  return {ok, "intra " + fmt("%.4f", intra) + ", inter " + fmt("%.4f", inter) + ", gap " +
                  fmt("%.4f", intra - inter) + ", " + fmt("%.2f s", t)};
}

// ---- 6: determinism and round trips ----------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("hofnet-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  TrigramTaskConfig tc;
  tc.examples = 200;
  tc.seed = 11;
  const TrigramTask task = generate_trigram_task(tc);
  {
    std::ofstream tsv(dir / "train.tsv");
    tsv << "text_id\ttext\ttask_1\n";
    for (const auto& ex : task.data) tsv << ex.id << '\t' << join_tokens(ex.tokens) << '\t' << label_name(*ex.label) << '\n';
  }
  auto train_once = [&](const std::string& tag) {
    std::ostringstream out, err;
    const int rc = cli::run({"hofnet", "train", "--train", (dir / "train.tsv").string(), "--checkpoint",
                             (dir / (tag + ".ckpt")).string(), "--history", (dir / (tag + ".tsv")).string(),
                             "--seed", "5", "--dim", "8", "--counts", "4", "4", "8", "--dense", "8", "--epochs",
                             "3", "--max-len", "24"},
                            out, err);
    return rc == 0 ? std::string() : err.str();
  };
  std::string failure = train_once("a");
  if (failure.empty()) failure = train_once("b");
  bool ok = failure.empty();
  std::string detail;
  if (!ok) detail = "train failed: " + failure;
  const bool same_history = ok && slurp(dir / "a.tsv") == slurp(dir / "b.tsv");
  const bool same_ckpt = ok && slurp(dir / "a.ckpt") == slurp(dir / "b.ckpt");

  bool ckpt_roundtrip = false;
  if (ok) {
    const auto loaded = load_checkpoint(dir / "a.ckpt");
    save_checkpoint(loaded.model, loaded.vocab_fingerprint, dir / "a2.ckpt");
    ckpt_roundtrip = slurp(dir / "a.ckpt") == slurp(dir / "a2.ckpt");
    const auto again = load_checkpoint(dir / "a2.ckpt");
    ckpt_roundtrip = ckpt_roundtrip && again.model.embedding == loaded.model.embedding &&
                     again.model.dense_weights == loaded.model.dense_weights;
  }

  // Embedding text round trip.
  const auto sentences = generate_clique_corpus(200, 6, 3);
  const Vocabulary vocab = Vocabulary::build(sentences, 1);
  std::vector<EncodedExample> corpus;
  for (const auto& s : sentences) corpus.push_back(encode(s, vocab));
  EmbeddingConfig ec;
  ec.dim = 8;
  ec.epochs = 2;
  ec.min_count = 1;
  const EmbeddingMatrix m = train_embeddings(corpus, vocab.size(), ec, 3);
  save_text(m, vocab, dir / "vectors.txt");
  const WordVectors wv = load_text(dir / "vectors.txt");
  double max_err = 0.0;
  bool same_words = wv.vocab.words() == vocab.words();
  for (std::size_t r = 0; same_words && r < vocab.size(); ++r) {
    const auto a = m.input(static_cast<std::int32_t>(r));
    const auto b = wv.matrix.input(static_cast<std::int32_t>(r));
    for (std::size_t k = 0; k < a.size(); ++k) max_err = std::max(max_err, std::abs(a[k] - b[k]));
  }
  const bool text_ok = same_words && max_err <= 1e-6;
  fs::remove_all(dir);

  ok = ok && same_history && same_ckpt && ckpt_roundtrip && text_ok;
  if (detail.empty()) {
    detail = std::string("history ") + (same_history ? "identical" : "DIFFERS") + ", checkpoint " +
             (same_ckpt ? "identical" : "DIFFERS") + ", binary round trip " + (ckpt_roundtrip ? "exact" : "INEXACT") +
             ", text round trip max error " + fmt("%.1e", max_err);
  }
  return {ok, detail};
}

// ---- 7: preprocessing golden suite --------------------------------------------

Outcome golden_preprocess() {
  int passed = 0, total = 0;
  std::string first_fail;
  for (const auto& g : hofnet::testing::kGoldenPreprocess) {
    ++total;
    const std::string got = join_tokens(preprocess(g.input));
    if (got == g.expected) {
      ++passed;
    } else if (first_fail.empty()) {
      first_fail = std::string(" first failure: '") + g.input + "' -> '" + got + "', want '" + g.expected + "'";
    }
  }
  const bool ok = passed == total && total >= 30;
  return {ok, std::to_string(passed) + "/" + std::to_string(total) + " golden pairs" + first_fail};
}

// ---- 8: split and CV arithmetic -----------------------------------------------

Outcome split_arithmetic() {
  Dataset ds;
  for (int i = 0; i < 4665; ++i) ds.add(Example{"t" + std::to_string(i), {"w"}, i % 3 ? Label::NOT : Label::HOF});
  const auto [train, val] = split_train_val(ds, 42);
  bool ok = val.size() == 933 && train.size() == 3732;
  std::string detail = "validation support " + std::to_string(val.size());

  std::set<std::string> ids;
  for (const auto& e : train) ids.insert(e.id);
  for (const auto& e : val) ids.insert(e.id);
  ok = ok && ids.size() == ds.size();

  bool folds_ok = true;
  for (std::size_t n : {10u, 11u, 100u, 3732u, 4665u}) {
    const auto folds = kfold(n, 10, 42);
    std::vector<int> seen(n, 0);
    std::size_t lo = n, hi = 0;
    for (const auto& f : folds) {
      lo = std::min(lo, f.test.size());
      hi = std::max(hi, f.test.size());
      for (auto i : f.test) ++seen[i];
      if (f.train.size() + f.test.size() != n) folds_ok = false;
      std::vector<int> mark(n, 0);
      for (auto i : f.train) mark[i] += 1;
      for (auto i : f.test) mark[i] += 1;
      if (std::any_of(mark.begin(), mark.end(), [](int m) { return m != 1; })) folds_ok = false;
    }
    if (folds.size() != 10 || hi - lo > 1) folds_ok = false;
    if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) folds_ok = false;
  }
  ok = ok && folds_ok;
  detail += folds_ok ? "; 10-fold partitions exact, sizes within 1" : "; fold partition BROKEN";
  return {ok, detail};
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "metrics oracle", metrics_oracle},
      {2, "gradient oracles", gradient_oracles},
      {3, "synthetic end-to-end CNN", synthetic_cnn},
      {4, "CBOW clique property", cbow_cliques},
      {5, "CNN vs baselines ordering", ordering},
      {6, "determinism and round trips", determinism},
      {7, "preprocessing golden suite", golden_preprocess},
      {8, "split and CV arithmetic", split_arithmetic},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.number)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
