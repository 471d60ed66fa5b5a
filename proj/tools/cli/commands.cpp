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

#include "commands.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hofnet/baselines.hpp"
#include "hofnet/corpus.hpp"
#include "hofnet/error.hpp"
#include "hofnet/eval.hpp"
#include "hofnet/preprocess.hpp"

namespace hofnet::cli {
namespace {

using Json = nlohmann::ordered_json;

// Shortest decimal that reads back to the same double.
std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void require_file(const std::filesystem::path& p, const char* what) {
  if (p.empty()) throw ConfigError(std::string("missing ") + what + " path");
  if (!std::filesystem::is_regular_file(p)) {
    throw IoError(std::string(what) + " file not found: " + p.string());
  }
}

void require_output(const std::filesystem::path& p, const char* what) {
  if (p.empty()) throw ConfigError(std::string("missing ") + what + " path");
}

std::ofstream open_output(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + p.string());
  return out;
}

// ---- JSON config ---------------------------------------------------------

template <typename T>
T json_get(const Json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

void check_keys(const Json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ConfigError("config section '" + where + "' must be an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw ConfigError("unknown config key '" + (where.empty() ? k : where + "." + k) + "'");
  }
}

void apply_dropout(const Json& j, DropoutSpec& d) {
  check_keys(j, "cnn.dropout", {"input", "banks", "dense"});
  if (j.contains("input")) d.input = json_get<double>(j["input"], "cnn.dropout.input");
  if (j.contains("banks")) d.banks = json_get<std::vector<double>>(j["banks"], "cnn.dropout.banks");
  if (j.contains("dense")) d.dense = json_get<double>(j["dense"], "cnn.dropout.dense");
}

void apply_cnn(const Json& j, CnnConfig& c) {
  check_keys(j, "cnn", {"dim", "heights", "counts", "dense", "max_len", "min_len", "dropout", "fine_tune"});
  if (j.contains("dim")) c.dim = json_get<std::size_t>(j["dim"], "cnn.dim");
  if (j.contains("heights")) c.heights = json_get<std::vector<int>>(j["heights"], "cnn.heights");
  if (j.contains("counts")) c.counts = json_get<std::vector<int>>(j["counts"], "cnn.counts");
  if (j.contains("dense")) c.dense = json_get<std::size_t>(j["dense"], "cnn.dense");
  if (j.contains("max_len")) c.max_len = json_get<std::size_t>(j["max_len"], "cnn.max_len");
  if (j.contains("min_len")) c.min_len = json_get<std::size_t>(j["min_len"], "cnn.min_len");
  if (j.contains("dropout")) apply_dropout(j["dropout"], c.dropout);
  if (j.contains("fine_tune")) c.fine_tune_embeddings = json_get<bool>(j["fine_tune"], "cnn.fine_tune");
}

void apply_training(const Json& j, TrainConfig& t) {
  check_keys(j, "training", {"epochs", "batch_size", "patience", "lr", "beta1", "beta2", "epsilon"});
  if (j.contains("epochs")) t.epochs = json_get<int>(j["epochs"], "training.epochs");
  if (j.contains("batch_size")) t.batch_size = json_get<int>(j["batch_size"], "training.batch_size");
  if (j.contains("patience")) t.patience = json_get<int>(j["patience"], "training.patience");
  if (j.contains("lr")) t.adam.lr = json_get<double>(j["lr"], "training.lr");
  if (j.contains("beta1")) t.adam.beta1 = json_get<double>(j["beta1"], "training.beta1");
  if (j.contains("beta2")) t.adam.beta2 = json_get<double>(j["beta2"], "training.beta2");
  if (j.contains("epsilon")) t.adam.epsilon = json_get<double>(j["epsilon"], "training.epsilon");
}

void apply_embedding(const Json& j, EmbeddingConfig& e) {
  check_keys(j, "embedding", {"dim", "window", "min_count", "epochs", "negatives", "lr", "objective"});
  if (j.contains("dim")) e.dim = json_get<int>(j["dim"], "embedding.dim");
  if (j.contains("window")) e.window = json_get<int>(j["window"], "embedding.window");
  if (j.contains("min_count")) e.min_count = json_get<int>(j["min_count"], "embedding.min_count");
  if (j.contains("epochs")) e.epochs = json_get<int>(j["epochs"], "embedding.epochs");
  if (j.contains("negatives")) e.negatives = json_get<int>(j["negatives"], "embedding.negatives");
  if (j.contains("lr")) e.initial_lr = json_get<double>(j["lr"], "embedding.lr");
  if (j.contains("objective")) {
    e.objective = parse_objective(json_get<std::string>(j["objective"], "embedding.objective"));
  }
}

// ---- flag overlay ---------------------------------------------------------

// Registers options whose values are applied on top of the loaded config
// only when given on the command line.
class Overlay {
 public:
  explicit Overlay(CLI::App* app) : app_(app) {}

  template <typename T, typename Set>
  void add(const std::string& flag, const std::string& help, Set set) {
    auto value = std::make_shared<T>();
    CLI::Option* opt = app_->add_option(flag, *value, help);
    steps_.push_back([opt, value, set](RunConfig& c) {
      if (opt->count() > 0) set(c, *value);
    });
  }

  void flag(const std::string& name, const std::string& help, std::function<void(RunConfig&)> set) {
    CLI::Option* opt = app_->add_flag(name, help);
    steps_.push_back([opt, set](RunConfig& c) {
      if (opt->count() > 0) set(c);
    });
  }

  void config_file() {
    app_->add_option("--config", config_path_, "JSON run configuration")->check(CLI::ExistingFile);
  }

  RunConfig resolve() const {
    RunConfig c = config_path_.empty() ? RunConfig{} : RunConfig::load(config_path_);
    for (const auto& s : steps_) s(c);
    return c;
  }

 private:
  CLI::App* app_;
  std::string config_path_;
  std::vector<std::function<void(RunConfig&)>> steps_;
};

void add_seed(Overlay& o) {
  o.add<std::uint64_t>("--seed", "seed for every random stream",
                       [](RunConfig& c, std::uint64_t v) { c.seed = v; });
}

void add_preprocess_flags(Overlay& o) {
  o.add<std::string>("--suffixes", "Hindi suffix table (default: built in)",
                     [](RunConfig& c, const std::string& v) { c.suffixes = v; });
  o.flag("--no-stem", "skip Hindi stemming", [](RunConfig& c) { c.stem = false; });
}

void add_cnn_flags(Overlay& o) {
  o.add<std::size_t>("--dim", "embedding dimension", [](RunConfig& c, std::size_t v) { c.cnn.dim = v; });
  o.add<std::vector<int>>("--heights", "filter heights", [](RunConfig& c, const std::vector<int>& v) {
    c.cnn.heights = v;
  });
  o.add<std::vector<int>>("--counts", "filters per height", [](RunConfig& c, const std::vector<int>& v) {
    c.cnn.counts = v;
  });
  o.add<std::size_t>("--dense", "dense layer width", [](RunConfig& c, std::size_t v) { c.cnn.dense = v; });
  o.add<std::size_t>("--max-len", "truncate tweets to this many tokens",
                     [](RunConfig& c, std::size_t v) { c.cnn.max_len = v; });
  o.add<double>("--dropout-input", "input row drop rate", [](RunConfig& c, double v) { c.cnn.dropout.input = v; });
  o.add<double>("--dropout-dense", "dense drop rate", [](RunConfig& c, double v) { c.cnn.dropout.dense = v; });
  o.flag("--freeze-embeddings", "do not fine-tune word vectors",
         [](RunConfig& c) { c.cnn.fine_tune_embeddings = false; });
  o.add<int>("--epochs", "maximum epochs", [](RunConfig& c, int v) { c.training.epochs = v; });
  o.add<int>("--batch-size", "minibatch size", [](RunConfig& c, int v) { c.training.batch_size = v; });
  o.add<int>("--patience", "early-stopping patience", [](RunConfig& c, int v) { c.training.patience = v; });
  o.add<double>("--lr", "Adam learning rate", [](RunConfig& c, double v) { c.training.adam.lr = v; });
  o.add<double>("--val-fraction", "validation share", [](RunConfig& c, double v) { c.val_fraction = v; });
  o.add<int>("--min-count", "minimum word count for the vocabulary",
             [](RunConfig& c, int v) { c.min_count = v; });
  o.add<std::string>("--vectors", "pretrained word vectors (text format)",
                     [](RunConfig& c, const std::string& v) { c.vectors = v; });
}

Preprocessor make_preprocessor(const RunConfig& c) {
  HindiStemmer stemmer = c.suffixes.empty() ? HindiStemmer::builtin() : HindiStemmer::from_file(c.suffixes);
  return Preprocessor(std::move(stemmer), PreprocessOptions{c.stem});
}

// ---- training helpers -------------------------------------------------------

// Pretrained vocabulary first, then training words that reach min_count.
Vocabulary training_vocabulary(const Dataset& train, const WordVectors* vectors, int min_count) {
  Vocabulary own = Vocabulary::build(std::vector<const Dataset*>{&train}, min_count);
  if (!vectors) return own;
  Vocabulary v = vectors->vocab;
  for (std::size_t i = 2; i < own.size(); ++i) {
    const auto id = static_cast<std::int32_t>(i);
    if (!v.find(own.word(id))) v.add(own.word(id), own.count(id));
  }
  return v;
}

struct TrainedModel {
  Vocabulary vocab;
  CnnTrainResult result;
};

TrainedModel fit_cnn(const Dataset& data, const RunConfig& c, const WordVectors* vectors,
                     std::uint64_t seed) {
  auto [train, val] = split_train_val(data, seed, SplitOptions{c.val_fraction, false});
  TrainedModel out;
  out.vocab = training_vocabulary(train, vectors, c.min_count);
  CnnModel model(c.cnn, out.vocab.size());
  model.initialize(seed);
  if (vectors) model.load_embeddings(out.vocab, *vectors);
  TrainConfig tc = c.training;
  tc.seed = seed;
  const auto etrain = encode(train, out.vocab);
  const auto eval_set = encode(val, out.vocab);
  out.result = train_cnn(etrain, eval_set, std::move(model), tc);
  return out;
}

std::string history_tsv(const std::vector<EpochRecord>& history) {
  std::string s = "epoch\ttrain_loss\tval_macro_f1\n";
  for (const auto& r : history) {
    s += std::to_string(r.epoch) + '\t' + shortest(r.train_loss) + '\t' + shortest(r.val_macro_f1) + '\n';
  }
  return s;
}

std::vector<Label> labels_of(const Dataset& ds, const char* what) {
  std::vector<Label> out;
  out.reserve(ds.size());
  for (const auto& ex : ds) {
    if (!ex.label) {
      throw DataError(std::string(what) + " row '" + ex.id + "' has no label (use predict for unlabelled data)");
    }
    out.push_back(*ex.label);
  }
  return out;
}

std::optional<WordVectors> maybe_vectors(const RunConfig& c) {
  if (c.vectors.empty()) return std::nullopt;
  require_file(c.vectors, "vectors");
  return load_text(c.vectors);
}

struct LoadedModel {
  Vocabulary vocab;
  CnnModel model;
};

LoadedModel load_model(const std::filesystem::path& checkpoint, const std::filesystem::path& vocab_override,
                       std::ostream& err) {
  require_file(checkpoint, "checkpoint");
  const auto vpath = vocab_override.empty() ? vocab_path_for(checkpoint) : vocab_override;
  require_file(vpath, "vocabulary");
  LoadedModel m{Vocabulary::load(vpath), {}};
  auto loaded = load_checkpoint(checkpoint, &m.vocab);
  for (const auto& w : loaded.warnings) err << "warning: " << w << '\n';
  if (loaded.model.vocab_size() != m.vocab.size()) {
    throw ShapeError("checkpoint has " + std::to_string(loaded.model.vocab_size()) +
                     " embedding rows but the vocabulary has " + std::to_string(m.vocab.size()) + " words");
  }
  m.model = std::move(loaded.model);
  return m;
}

// ---- commands -----------------------------------------------------------------

int cmd_preprocess(const RunConfig& c, const std::string& input, const std::string& output) {
  require_file(input, "input");
  require_output(output, "output");
  const Dataset ds = load_tsv(input, make_preprocessor(c));
  auto out = open_output(output);
  for (const auto& ex : ds) out << join_tokens(ex.tokens) << '\n';
  if (!out) throw IoError("write failed for " + output);
  return 0;
}

int cmd_embed_train(const RunConfig& c, const std::string& corpus_path, const std::string& output,
                    const std::string& vocab_out, std::ostream& out) {
  require_file(corpus_path, "corpus");
  require_output(output, "output");
  const std::uint64_t seed = c.require_seed();
  c.embedding.validate();

  std::ifstream in(corpus_path, std::ios::binary);
  if (!in) throw IoError("cannot open " + corpus_path);
  std::vector<TokenStream> sentences;
  std::string line;
  std::size_t tokens = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    TokenStream t;
    for (std::string w; ss >> w;) t.push_back(std::move(w));
    tokens += t.size();
    sentences.push_back(std::move(t));
  }
  if (tokens == 0) throw DataError("empty corpus: " + corpus_path);

  const Vocabulary vocab = Vocabulary::build(sentences, c.embedding.min_count);
  std::vector<EncodedExample> encoded;
  encoded.reserve(sentences.size());
  for (const auto& s : sentences) encoded.push_back(encode(s, vocab));
  EmbeddingTrainingLog log;
  const EmbeddingMatrix m = train_embeddings(encoded, vocab.size(), c.embedding, seed, &log);
  save_text(m, vocab, output);
  if (!vocab_out.empty()) vocab.save(vocab_out);
  out << "vocabulary " << vocab.size() << ", dim " << c.embedding.dim << ", windows " << log.windows
      << ", final loss " << fixed6(log.epoch_loss.empty() ? 0.0 : log.epoch_loss.back()) << '\n';
  return 0;
}

int cmd_train(const RunConfig& c, std::ostream& out) {
  require_file(c.train, "train");
  require_output(c.checkpoint, "checkpoint");
  const std::uint64_t seed = c.require_seed();
  c.cnn.validate();
  c.training.validate();
  const auto vectors = maybe_vectors(c);
  if (vectors && vectors->matrix.dim() != c.cnn.dim) {
    throw ShapeError("dimension mismatch: vectors have " + std::to_string(vectors->matrix.dim()) +
                     ", model expects " + std::to_string(c.cnn.dim));
  }
  const Dataset data = load_tsv(c.train, make_preprocessor(c));
  labels_of(data, "training");
  const TrainedModel t = fit_cnn(data, c, vectors ? &*vectors : nullptr, seed);

  save_checkpoint(t.result.model, t.vocab.fingerprint(), c.checkpoint);
  t.vocab.save(vocab_path_for(c.checkpoint));
  const auto hpath = c.history.empty() ? std::filesystem::path(c.checkpoint.string() + ".history.tsv")
                                       : c.history;
  auto h = open_output(hpath);
  h << history_tsv(t.result.history);
  if (!h) throw IoError("write failed for " + hpath.string());

  const auto& best = t.result.history.at(static_cast<std::size_t>(t.result.best_epoch - 1));
  out << "epochs " << t.result.history.size() << ", best epoch " << t.result.best_epoch
      << ", val macro-F1 " << fixed6(best.val_macro_f1) << '\n';
  return 0;
}

int cmd_eval(const RunConfig& c, const std::string& vocab_override, const std::string& json_out,
             std::ostream& out, std::ostream& err) {
  require_file(c.test, "test");
  const LoadedModel m = load_model(c.checkpoint, vocab_override, err);
  const Dataset test = load_tsv(c.test, make_preprocessor(c));
  const auto actual = labels_of(test, "test");
  const auto predicted = predict_all(encode(test, m.vocab), m.model);
  const ConfusionMatrix cm = confusion(predicted, actual);
  const EvalReport r = report(cm);
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  const std::string json = report_to_json(r);
  out << format_report(r, &cm) << '\n' << json << '\n';
  if (!json_out.empty()) {
    auto f = open_output(json_out);
    f << json << '\n';
  }
  return 0;
}

int cmd_predict(const RunConfig& c, const std::string& vocab_override, const std::string& input,
                const std::string& output, std::ostream& err) {
  require_file(input, "input");
  require_output(output, "output");
  const LoadedModel m = load_model(c.checkpoint, vocab_override, err);
  const Dataset ds = load_tsv(input, make_preprocessor(c));
  auto out = open_output(output);
  out << "id\tlabel\tprobability\n";
  for (const auto& ex : ds) {
    const auto enc = encode(ex, m.vocab);
    const double p = predict_probability(enc.ids, m.model);
    out << ex.id << '\t' << label_name(label_for_probability(p)) << '\t' << fixed6(p) << '\n';
  }
  if (!out) throw IoError("write failed for " + output);
  return 0;
}

int cmd_cv(const RunConfig& c, const std::string& output, std::ostream& out) {
  require_file(c.train, "train");
  const std::uint64_t seed = c.require_seed();
  c.cnn.validate();
  c.training.validate();
  const auto vectors = maybe_vectors(c);
  const Dataset data = load_tsv(c.train, make_preprocessor(c));
  labels_of(data, "training");
  const auto folds = kfold(data, c.folds, seed);

  std::string table = "fold\tmacro_f1\n";
  double sum = 0.0;
  for (std::size_t i = 0; i < folds.size(); ++i) {
    const std::uint64_t fold_seed = Rng::derive(seed, "cv-fold-" + std::to_string(i + 1)).next();
    const Dataset train = data.subset(folds[i].train);
    const Dataset test = data.subset(folds[i].test);
    const TrainedModel t = fit_cnn(train, c, vectors ? &*vectors : nullptr, fold_seed);
    const auto predicted = predict_all(encode(test, t.vocab), t.result.model);
    const double f1 = macro_f1(predicted, labels_of(test, "test"));
    sum += f1;
    table += std::to_string(i + 1) + '\t' + shortest(f1) + '\n';
  }
  table += "mean\t" + shortest(sum / static_cast<double>(folds.size())) + '\n';
  if (output.empty()) {
    out << table;
  } else {
    auto f = open_output(output);
    f << table;
  }
  return 0;
}

int cmd_baseline(const RunConfig& c, const std::string& model_name, const std::string& grid_path,
                 const std::string& output, std::ostream& out, std::ostream& err) {
  const BaselineKind kind = parse_baseline(model_name);
  require_file(c.train, "train");
  const std::uint64_t seed = c.require_seed();
  if (c.min_count < 1) throw ConfigError("min_count must be at least 1");
  std::vector<ParamSet> grid;
  if (grid_path.empty()) {
    grid = default_grid(kind);
  } else {
    require_file(grid_path, "grid");
    grid = load_grid(grid_path);
  }
  const auto preprocessor = make_preprocessor(c);
  const Dataset data = load_tsv(c.train, preprocessor);
  labels_of(data, "training");
  const Vocabulary vocab = Vocabulary::build(std::vector<const Dataset*>{&data}, c.min_count);
  const auto encoded = encode(data, vocab);
  const auto folds = kfold(data, c.folds, seed);
  const GridResult result =
      grid_search(grid, folds, make_baseline_evaluator(kind, encoded, vocab.size(), seed));
  const std::string table = cv_table_tsv(result);
  if (output.empty()) {
    out << table;
  } else {
    auto f = open_output(output);
    f << table;
  }
  err << "best " << baseline_name(kind) << ": " << result.best_params().to_string() << " mean macro-F1 "
      << fixed6(result.rows[result.best].mean) << '\n';

  if (!c.test.empty()) {
    require_file(c.test, "test");
    const Dataset test = load_tsv(c.test, preprocessor);
    const auto actual = labels_of(test, "test");
    const auto predicted =
        fit_predict_baseline(kind, result.best_params(), encoded, encode(test, vocab), vocab.size(), seed);
    const ConfusionMatrix cm = confusion(predicted, actual);
    const EvalReport r = report(cm);
    out << '\n' << format_report(r, &cm) << '\n' << report_to_json(r) << '\n';
  }
  return 0;
}

std::string one_line(std::string s) {
  for (auto& ch : s) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

RunConfig RunConfig::from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid config JSON: ") + e.what());
  }
  check_keys(j, "", {"seed", "train", "test", "vectors", "checkpoint", "history", "suffixes", "val_fraction",
                     "min_count", "folds", "stem", "cnn", "training", "embedding"});
  RunConfig c;
  auto path = [&](const char* key, std::filesystem::path& p) {
    if (j.contains(key)) p = json_get<std::string>(j[key], key);
  };
  path("train", c.train);
  path("test", c.test);
  path("vectors", c.vectors);
  path("checkpoint", c.checkpoint);
  path("history", c.history);
  path("suffixes", c.suffixes);
  if (j.contains("seed")) c.seed = json_get<std::uint64_t>(j["seed"], "seed");
  if (j.contains("val_fraction")) c.val_fraction = json_get<double>(j["val_fraction"], "val_fraction");
  if (j.contains("min_count")) c.min_count = json_get<int>(j["min_count"], "min_count");
  if (j.contains("folds")) c.folds = json_get<int>(j["folds"], "folds");
  if (j.contains("stem")) c.stem = json_get<bool>(j["stem"], "stem");
  if (j.contains("cnn")) apply_cnn(j["cnn"], c.cnn);
  if (j.contains("training")) apply_training(j["training"], c.training);
  if (j.contains("embedding")) apply_embedding(j["embedding"], c.embedding);
  return c;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::uint64_t RunConfig::require_seed() const {
  if (!seed) throw ConfigError("a seed is required (--seed or config key \"seed\")");
  return *seed;
}

std::filesystem::path vocab_path_for(const std::filesystem::path& checkpoint) {
  return checkpoint.string() + ".vocab";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hofnet: hate/offensive tweet classification toolkit", "hofnet"};
  app.require_subcommand(1);

  // preprocess
  auto* pre = app.add_subcommand("preprocess", "normalize a TSV into one token line per row");
  Overlay pre_o(pre);
  pre_o.config_file();
  add_preprocess_flags(pre_o);
  std::string pre_in, pre_out;
  pre->add_option("--input,-i", pre_in, "input TSV")->required();
  pre->add_option("--output,-o", pre_out, "output text file")->required();

  // embed-train
  auto* emb = app.add_subcommand("embed-train", "train word vectors on a tokenized corpus");
  Overlay emb_o(emb);
  emb_o.config_file();
  add_seed(emb_o);
  std::string emb_corpus, emb_out, emb_vocab;
  emb->add_option("--corpus", emb_corpus, "one space-separated sentence per line")->required();
  emb->add_option("--output,-o", emb_out, "vectors file (word2vec text)")->required();
  emb->add_option("--vocab-out", emb_vocab, "also write the vocabulary");
  emb_o.add<int>("--dim", "vector dimension", [](RunConfig& c, int v) { c.embedding.dim = v; });
  emb_o.add<int>("--window", "context window", [](RunConfig& c, int v) { c.embedding.window = v; });
  emb_o.add<int>("--min-count", "minimum word count", [](RunConfig& c, int v) { c.embedding.min_count = v; });
  emb_o.add<int>("--epochs", "passes over the corpus", [](RunConfig& c, int v) { c.embedding.epochs = v; });
  emb_o.add<int>("--negatives", "negative samples", [](RunConfig& c, int v) { c.embedding.negatives = v; });
  emb_o.add<double>("--lr", "initial learning rate", [](RunConfig& c, double v) { c.embedding.initial_lr = v; });
  emb_o.add<std::string>("--objective", "cbow or skipgram", [](RunConfig& c, const std::string& v) {
    c.embedding.objective = parse_objective(v);
  });

  // train
  auto* trn = app.add_subcommand("train", "train the CNN classifier");
  Overlay trn_o(trn);
  trn_o.config_file();
  add_seed(trn_o);
  add_preprocess_flags(trn_o);
  add_cnn_flags(trn_o);
  trn_o.add<std::string>("--train", "labelled training TSV", [](RunConfig& c, const std::string& v) { c.train = v; });
  trn_o.add<std::string>("--checkpoint", "output checkpoint", [](RunConfig& c, const std::string& v) {
    c.checkpoint = v;
  });
  trn_o.add<std::string>("--history", "per-epoch history TSV", [](RunConfig& c, const std::string& v) {
    c.history = v;
  });

  // eval
  auto* evl = app.add_subcommand("eval", "score a checkpoint on a labelled TSV");
  Overlay evl_o(evl);
  evl_o.config_file();
  add_preprocess_flags(evl_o);
  std::string evl_vocab, evl_json;
  evl_o.add<std::string>("--checkpoint", "checkpoint file", [](RunConfig& c, const std::string& v) {
    c.checkpoint = v;
  });
  evl_o.add<std::string>("--test", "labelled test TSV", [](RunConfig& c, const std::string& v) { c.test = v; });
  evl->add_option("--vocab", evl_vocab, "vocabulary (default: <checkpoint>.vocab)");
  evl->add_option("--json", evl_json, "also write the JSON report here");

  // predict
  auto* prd = app.add_subcommand("predict", "write id, label and probability per row");
  Overlay prd_o(prd);
  prd_o.config_file();
  add_preprocess_flags(prd_o);
  std::string prd_vocab, prd_in, prd_out;
  prd_o.add<std::string>("--checkpoint", "checkpoint file", [](RunConfig& c, const std::string& v) {
    c.checkpoint = v;
  });
  prd->add_option("--input,-i", prd_in, "input TSV")->required();
  prd->add_option("--output,-o", prd_out, "output TSV")->required();
  prd->add_option("--vocab", prd_vocab, "vocabulary (default: <checkpoint>.vocab)");

  // cv
  auto* cvc = app.add_subcommand("cv", "k-fold cross-validation of the CNN");
  Overlay cvc_o(cvc);
  cvc_o.config_file();
  add_seed(cvc_o);
  add_preprocess_flags(cvc_o);
  add_cnn_flags(cvc_o);
  std::string cvc_out;
  cvc_o.add<std::string>("--train", "labelled TSV", [](RunConfig& c, const std::string& v) { c.train = v; });
  cvc_o.add<int>("--folds,-k", "number of folds", [](RunConfig& c, int v) { c.folds = v; });
  cvc->add_option("--output,-o", cvc_out, "fold table (default: stdout)");

  // baseline
  auto* bsl = app.add_subcommand("baseline", "grid search a bag-of-words baseline");
  Overlay bsl_o(bsl);
  bsl_o.config_file();
  add_seed(bsl_o);
  add_preprocess_flags(bsl_o);
  std::string bsl_model, bsl_grid, bsl_out;
  bsl->add_option("--model", bsl_model, "mnb, ridge, knn or dnn")->required();
  bsl->add_option("--grid", bsl_grid, "JSON grid (default: built-in grid)");
  bsl->add_option("--output,-o", bsl_out, "CV table (default: stdout)");
  bsl_o.add<std::string>("--train", "labelled TSV", [](RunConfig& c, const std::string& v) { c.train = v; });
  bsl_o.add<std::string>("--test", "optional labelled test TSV", [](RunConfig& c, const std::string& v) {
    c.test = v;
  });
  bsl_o.add<int>("--folds,-k", "number of folds", [](RunConfig& c, int v) { c.folds = v; });
  bsl_o.add<int>("--min-count", "minimum word count", [](RunConfig& c, int v) { c.min_count = v; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: usage: " << one_line(e.what()) << '\n';
    return 2;
  }

  try {
    if (*pre) return cmd_preprocess(pre_o.resolve(), pre_in, pre_out);
    if (*emb) return cmd_embed_train(emb_o.resolve(), emb_corpus, emb_out, emb_vocab, out);
    if (*trn) return cmd_train(trn_o.resolve(), out);
    if (*evl) return cmd_eval(evl_o.resolve(), evl_vocab, evl_json, out, err);
    if (*prd) return cmd_predict(prd_o.resolve(), prd_vocab, prd_in, prd_out, err);
    if (*cvc) return cmd_cv(cvc_o.resolve(), cvc_out, out);
    if (*bsl) return cmd_baseline(bsl_o.resolve(), bsl_model, bsl_grid, bsl_out, out, err);
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << one_line(e.what()) << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << '\n';
    return 1;
  }
  return 0;
}

}  // namespace hofnet::cli
