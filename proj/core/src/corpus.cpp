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

#include "hofnet/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hofnet/error.hpp"
#include "hofnet/rng.hpp"

namespace hofnet {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

void Dataset::add(Example example) {
  if (example.id.empty()) throw DataError("empty example id");
  auto [it, inserted] = index_.emplace(example.id, examples_.size());
  if (!inserted) throw DataError("duplicate id '" + example.id + "'");
  examples_.push_back(std::move(example));
}

bool Dataset::labelled() const {
  return std::all_of(examples_.begin(), examples_.end(),
                     [](const Example& e) { return e.label.has_value(); });
}

Dataset Dataset::subset(const std::vector<std::size_t>& indices) const {
  Dataset out;
  for (std::size_t i : indices) out.add(examples_.at(i));
  return out;
}

Dataset read_tsv(std::istream& in, const Preprocessor& preprocessor) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("missing header", 1);
  chomp(line);
  const auto header = split_tabs(line);
  auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto id_col = column("text_id");
  const auto text_col = column("text");
  const auto label_col = column("task_1");
  if (!id_col || !text_col) throw DataError("header must name text_id and text columns", 1);

  Dataset ds;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != header.size()) {
      throw DataError("malformed row: expected " + std::to_string(header.size()) +
                          " fields, got " + std::to_string(fields.size()),
                      line_no);
    }
    Example ex;
    ex.id = fields[*id_col];
    ex.tokens = preprocessor(fields[*text_col]);
    if (label_col) {
      ex.label = parse_label(fields[*label_col]);
      if (!ex.label) throw DataError("unknown label '" + fields[*label_col] + "'", line_no);
    }
    if (ex.id.empty()) throw DataError("empty text_id", line_no);
    try {
      ds.add(std::move(ex));
    } catch (const DataError& e) {
      throw DataError(e.what(), line_no);
    }
  }
  return ds;
}

Dataset load_tsv(const std::filesystem::path& path, const Preprocessor& preprocessor) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_tsv(in, preprocessor);
}

Vocabulary::Vocabulary() {
  add(std::string(placeholder::kPad));
  add(std::string(placeholder::kUnknown));
}

std::int32_t Vocabulary::add(const std::string& word, std::uint64_t count) {
  if (auto id = find(word)) return *id;
  const auto id = static_cast<std::int32_t>(words_.size());
  words_.push_back(word);
  counts_.push_back(count);
  ids_.emplace(word, id);
  return id;
}

Vocabulary Vocabulary::build(const std::vector<TokenStream>& streams, int min_count) {
  if (min_count < 1) throw ConfigError("min_count must be at least 1");
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& s : streams) {
    for (const auto& t : s) ++counts[t];
  }
  Vocabulary v;
  v.min_count_ = min_count;
  for (std::int32_t reserved : {kPadId, kUnknownId}) {
    if (auto it = counts.find(v.words_[reserved]); it != counts.end()) {
      v.counts_[reserved] = it->second;
      counts.erase(it);
    }
  }
  std::vector<std::pair<std::string, std::uint64_t>> kept;
  for (auto& [w, c] : counts) {
    if (c >= static_cast<std::uint64_t>(min_count)) kept.emplace_back(w, c);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  for (auto& [w, c] : kept) v.add(w, c);
  return v;
}

Vocabulary Vocabulary::build(const std::vector<const Dataset*>& datasets, int min_count) {
  std::vector<TokenStream> streams;
  for (const Dataset* ds : datasets) {
    for (const auto& ex : *ds) streams.push_back(ex.tokens);
  }
  return build(streams, min_count);
}

Vocabulary build_vocab(const std::vector<const Dataset*>& datasets, int min_count) {
  return Vocabulary::build(datasets, min_count);
}

std::optional<std::int32_t> Vocabulary::find(const std::string& word) const {
  auto it = ids_.find(word);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::int32_t Vocabulary::id_or_unknown(const std::string& word) const {
  return find(word).value_or(kUnknownId);
}

void Vocabulary::dump(std::ostream& out) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out << words_[i] << '\t' << counts_[i] << '\n';
  }
}

void Vocabulary::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  dump(out);
  if (!out) throw IoError("write failed for " + path.string());
}

Vocabulary Vocabulary::read(std::istream& in) {
  Vocabulary v;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw DataError("vocabulary line must be word<TAB>count", line_no);
    }
    std::uint64_t count = 0;
    try {
      std::size_t used = 0;
      count = std::stoull(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw DataError("bad count '" + fields[1] + "'", line_no);
    }
    if (line_no <= 2) {
      const auto reserved = static_cast<std::int32_t>(line_no - 1);
      if (fields[0] != v.words_[reserved]) {
        throw DataError("expected reserved word " + v.words_[reserved], line_no);
      }
      v.counts_[reserved] = count;
      continue;
    }
    if (v.find(fields[0])) throw DataError("duplicate word '" + fields[0] + "'", line_no);
    v.add(fields[0], count);
  }
  return v;
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read(in);
}

std::uint64_t Vocabulary::fingerprint() const {
  std::uint64_t h = fnv1a64("");
  for (const auto& w : words_) {
    h = fnv1a64(w, h);
    h = fnv1a64("\n", h);
  }
  return h;
}

EncodedExample encode(const TokenStream& tokens, const Vocabulary& vocab) {
  EncodedExample out;
  out.ids.reserve(tokens.size());
  for (const auto& t : tokens) out.ids.push_back(vocab.id_or_unknown(t));
  return out;
}

EncodedExample encode(const Example& example, const Vocabulary& vocab) {
  EncodedExample out = encode(example.tokens, vocab);
  out.label = example.label;
  return out;
}

std::vector<EncodedExample> encode(const Dataset& dataset, const Vocabulary& vocab) {
  std::vector<EncodedExample> out;
  out.reserve(dataset.size());
  for (const auto& ex : dataset) out.push_back(encode(ex, vocab));
  return out;
}

TokenStream decode(const std::vector<std::int32_t>& ids, const Vocabulary& vocab) {
  TokenStream out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(vocab.word(id));
  return out;
}

std::size_t validation_size(std::size_t n, double val_fraction) {
  const auto k = static_cast<std::size_t>(std::llround(val_fraction * static_cast<double>(n)));
  return n < 2 ? k : std::clamp<std::size_t>(k, 1, n - 1);
}

std::pair<Dataset, Dataset> split_train_val(const Dataset& dataset, std::uint64_t seed,
                                            SplitOptions options) {
  const std::size_t n = dataset.size();
  if (n < 2) throw DataError("need at least 2 examples to split, got " + std::to_string(n));
  if (!(options.val_fraction > 0.0 && options.val_fraction < 1.0)) {
    throw ConfigError("validation fraction must be in (0, 1)");
  }
  const std::size_t n_val = validation_size(n, options.val_fraction);

  Rng rng = Rng::derive(seed, "split");
  std::vector<bool> in_val(n, false);
  if (!options.stratified) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(std::span(order));
    for (std::size_t i = 0; i < n_val; ++i) in_val[order[i]] = true;
  } else {
    // Groups: HOF, NOT, unlabelled.
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& l = dataset[i].label;
      groups[l ? label_value(*l) : -1].push_back(i);
    }
    struct Quota {
      int key;
      std::size_t whole;
      double frac;
    };
    std::vector<Quota> quotas;
    std::size_t assigned = 0;
    for (auto& [key, members] : groups) {
      const double exact = static_cast<double>(n_val) * static_cast<double>(members.size()) /
                           static_cast<double>(n);
      const auto whole = static_cast<std::size_t>(std::floor(exact));
      quotas.push_back({key, whole, exact - static_cast<double>(whole)});
      assigned += whole;
    }
    std::vector<std::size_t> by_frac(quotas.size());
    for (std::size_t i = 0; i < by_frac.size(); ++i) by_frac[i] = i;
    std::stable_sort(by_frac.begin(), by_frac.end(), [&](std::size_t a, std::size_t b) {
      return quotas[a].frac > quotas[b].frac;
    });
    for (std::size_t i = 0; assigned < n_val; ++i, ++assigned) {
      ++quotas[by_frac[i % by_frac.size()]].whole;
    }
    for (const auto& q : quotas) {
      auto members = groups[q.key];
      rng.shuffle(std::span(members));
      for (std::size_t i = 0; i < q.whole && i < members.size(); ++i) in_val[members[i]] = true;
    }
  }

  Dataset train, val;
  for (std::size_t i = 0; i < n; ++i) (in_val[i] ? val : train).add(dataset[i]);
  return {std::move(train), std::move(val)};
}

std::vector<Fold> kfold(std::size_t n, int k, std::uint64_t seed) {
  if (k < 2) throw ConfigError("k must be at least 2");
  const auto folds_n = static_cast<std::size_t>(k);
  if (n < folds_n) {
    throw DataError("need at least k=" + std::to_string(k) + " examples, got " +
                    std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng = Rng::derive(seed, "kfold");
  rng.shuffle(std::span(order));

  std::vector<Fold> folds(folds_n);
  std::vector<int> fold_of(n);
  std::size_t pos = 0;
  for (std::size_t f = 0; f < folds_n; ++f) {
    const std::size_t size = n / folds_n + (f < n % folds_n ? 1 : 0);
    for (std::size_t j = 0; j < size; ++j) fold_of[order[pos++]] = static_cast<int>(f);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < folds_n; ++f) {
      (static_cast<std::size_t>(fold_of[i]) == f ? folds[f].test : folds[f].train).push_back(i);
    }
  }
  return folds;
}

}  // namespace hofnet
