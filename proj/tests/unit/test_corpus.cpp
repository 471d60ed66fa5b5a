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
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "hofnet/error.hpp"

namespace hofnet {
namespace {

Dataset read(const std::string& text) {
  std::istringstream in(text);
  return read_tsv(in);
}

std::string data_error(const std::string& text) {
  try {
    read(text);
  } catch (const DataError& e) {
    return e.what();
  }
  return "no error";
}

Dataset numbered(std::size_t n) {
  Dataset ds;
  for (std::size_t i = 0; i < n; ++i) {
    ds.add(Example{"t" + std::to_string(i), {"w"}, i % 4 == 0 ? Label::HOF : Label::NOT});
  }
  return ds;
}

// ---- TSV ----------------------------------------------------------------

TEST(LoadTsv, MapsRowsThroughPreprocessing) {
  const Dataset ds = read("text_id\ttext\ttask_1\nt1\t@someone bura\tHOF\n");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].id, "t1");
  EXPECT_EQ(ds[0].tokens, (TokenStream{"xxatp", "bura"}));
  EXPECT_EQ(ds[0].label, Label::HOF);
}

TEST(LoadTsv, HeaderOnlyIsEmpty) {
  EXPECT_TRUE(read("text_id\ttext\ttask_1\n").empty());
}

TEST(LoadTsv, UnknownLabelNamesTheLine) {
  EXPECT_EQ(data_error("text_id\ttext\ttask_1\nt1\tok\tNOT\nt2\tx\tMAYBE\n"), "unknown label 'MAYBE', line 3");
}

TEST(LoadTsv, MalformedRowNamesTheLine) {
  EXPECT_EQ(data_error("text_id\ttext\ttask_1\nt1\tonly two\n"),
            "malformed row: expected 3 fields, got 2, line 2");
}

TEST(LoadTsv, DuplicateIdNamesTheLine) {
  const std::string msg = data_error("text_id\ttext\nt1\ta\nt1\tb\n");
  EXPECT_NE(msg.find("duplicate id 't1'"), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(LoadTsv, HeaderRules) {
  EXPECT_EQ(data_error(""), "missing header, line 1");
  EXPECT_EQ(data_error("id\ttext\n"), "header must name text_id and text columns, line 1");
}

TEST(LoadTsv, ColumnOrderExtraColumnsCrlfAndBlankLines) {
  const Dataset ds = read("task_2\ttask_1\ttext\ttext_id\r\nX\tNOT\tHello\tb\r\n\r\nY\tHOF\t\ta\r\n");
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[0].id, "b");
  EXPECT_EQ(ds[0].tokens, (TokenStream{"hello"}));
  EXPECT_EQ(ds[1].tokens, TokenStream{});
  EXPECT_EQ(ds[1].label, Label::HOF);
}

TEST(LoadTsv, UnlabelledFile) {
  const Dataset ds = read("text_id\ttext\nt1\thi\n");
  EXPECT_FALSE(ds[0].label.has_value());
  EXPECT_FALSE(ds.labelled());
}

TEST(LoadTsv, MissingFileIsIoError) {
  EXPECT_THROW(load_tsv("/nonexistent/hofnet.tsv"), IoError);
}

// ---- vocabulary ------------------------------------------------------------

TEST(Vocabulary, MinCountExcludes) {
  const Vocabulary v = Vocabulary::build(std::vector<TokenStream>{{"a", "a", "b"}}, 2);
  EXPECT_EQ(v.words(), (std::vector<std::string>{"xxpad", "xxunk", "a"}));
  EXPECT_EQ(v.count(2), 2u);
}

TEST(Vocabulary, EmptyCorpusKeepsReservedWords) {
  const Vocabulary v = Vocabulary::build(std::vector<TokenStream>{}, 2);
  EXPECT_EQ(v.words(), (std::vector<std::string>{"xxpad", "xxunk"}));
}

TEST(Vocabulary, TieBreakIsLexicographic) {
  const Vocabulary v = Vocabulary::build(std::vector<TokenStream>{{"b", "a", "a", "b", "c", "c", "c"}}, 1);
  EXPECT_EQ(v.words(), (std::vector<std::string>{"xxpad", "xxunk", "c", "a", "b"}));
}

TEST(Vocabulary, ReservedWordsStayPut) {
  const Vocabulary v = Vocabulary::build(std::vector<TokenStream>{{"xxunk", "xxunk", "xxunk", "z"}}, 1);
  EXPECT_EQ(v.words(), (std::vector<std::string>{"xxpad", "xxunk", "z"}));
  EXPECT_EQ(v.count(Vocabulary::kUnknownId), 3u);
}

TEST(Vocabulary, IdsAreABijection) {
  const Vocabulary v = Vocabulary::build(std::vector<TokenStream>{{"x", "y", "z", "x"}}, 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_EQ(v.find(v.word(static_cast<std::int32_t>(i))), static_cast<std::int32_t>(i));
  }
}

TEST(Vocabulary, RejectsBadMinCount) {
  EXPECT_THROW(Vocabulary::build(std::vector<TokenStream>{}, 0), ConfigError);
}

TEST(Vocabulary, DumpAndReadRoundTrip) {
  const Vocabulary v = Vocabulary::build(std::vector<TokenStream>{{"वाह", "a", "a"}}, 1);
  std::ostringstream out;
  v.dump(out);
  EXPECT_EQ(out.str(), "xxpad\t0\nxxunk\t0\na\t2\nवाह\t1\n");
  std::istringstream in(out.str());
  const Vocabulary w = Vocabulary::read(in);
  EXPECT_EQ(w.words(), v.words());
  EXPECT_EQ(w.fingerprint(), v.fingerprint());
}

TEST(Vocabulary, ReadRejectsBadFiles) {
  std::istringstream no_reserved("a\t1\n");
  EXPECT_THROW(Vocabulary::read(no_reserved), DataError);
  std::istringstream bad_count("xxpad\t0\nxxunk\t0\na\tmany\n");
  EXPECT_THROW(Vocabulary::read(bad_count), DataError);
  std::istringstream dup("xxpad\t0\nxxunk\t0\na\t1\na\t1\n");
  EXPECT_THROW(Vocabulary::read(dup), DataError);
}

TEST(Vocabulary, FingerprintTracksIdAssignment) {
  Vocabulary a, b;
  a.add("x");
  a.add("y");
  b.add("y");
  b.add("x");
  EXPECT_NE(a.fingerprint(), b.fingerprint());
}

// ---- encode ----------------------------------------------------------------

TEST(Encode, OovMapsToUnknown) {
  Vocabulary v;
  const auto a = v.add("a");
  EXPECT_EQ(encode(TokenStream{"a", "zzz"}, v).ids, (std::vector<std::int32_t>{a, 1}));
  EXPECT_TRUE(encode(TokenStream{}, v).ids.empty());
  const auto x = v.add("xxatp");
  EXPECT_EQ(encode(TokenStream{"xxatp"}, v).ids, (std::vector<std::int32_t>{x}));
}

TEST(Encode, DecodeInvertsInVocabularyTokens) {
  const Vocabulary v = Vocabulary::build(std::vector<TokenStream>{{"p", "q", "r"}}, 1);
  const TokenStream t{"r", "p", "q", "p"};
  EXPECT_EQ(decode(encode(t, v).ids, v), t);
}

TEST(Encode, CarriesLabels) {
  Dataset ds;
  ds.add(Example{"a", {"x"}, Label::HOF});
  const auto e = encode(ds, Vocabulary());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].label, Label::HOF);
  EXPECT_EQ(e[0].ids, (std::vector<std::int32_t>{1}));
}

// ---- split -----------------------------------------------------------------

TEST(Split, ValidationSizes) {
  EXPECT_EQ(validation_size(4665, 0.2), 933u);
  EXPECT_EQ(validation_size(10, 0.2), 2u);
  EXPECT_EQ(validation_size(2, 0.01), 1u);
  EXPECT_EQ(validation_size(2, 0.99), 1u);
  const auto [train, val] = split_train_val(numbered(4665), 1);
  EXPECT_EQ(val.size(), 933u);
  EXPECT_EQ(train.size(), 3732u);
}

TEST(Split, ExactPartitionPreservingOrder) {
  const Dataset ds = numbered(57);
  const auto [train, val] = split_train_val(ds, 9);
  std::multiset<std::string> ids;
  for (const auto& e : train) ids.insert(e.id);
  for (const auto& e : val) ids.insert(e.id);
  EXPECT_EQ(ids.size(), ds.size());
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ds.size());
  auto index = [](const std::string& id) { return std::stoi(id.substr(1)); };
  for (const Dataset* part : {&train, &val}) {
    for (std::size_t i = 1; i < part->size(); ++i) {
      EXPECT_LT(index((*part)[i - 1].id), index((*part)[i].id));
    }
  }
}

TEST(Split, Deterministic) {
  const Dataset ds = numbered(100);
  const auto a = split_train_val(ds, 3);
  const auto b = split_train_val(ds, 3);
  const auto c = split_train_val(ds, 4);
  auto ids = [](const Dataset& d) {
    std::vector<std::string> out;
    for (const auto& e : d) out.push_back(e.id);
    return out;
  };
  EXPECT_EQ(ids(a.second), ids(b.second));
  EXPECT_NE(ids(a.second), ids(c.second));
}

TEST(Split, StratifiedKeepsClassShares) {
  const Dataset ds = numbered(100);  // 25 HOF, 75 NOT
  const auto [train, val] = split_train_val(ds, 5, SplitOptions{0.2, true});
  ASSERT_EQ(val.size(), 20u);
  const auto hof = std::count_if(val.begin(), val.end(), [](const Example& e) { return e.label == Label::HOF; });
  EXPECT_EQ(hof, 5);
}

TEST(Split, Errors) {
  EXPECT_THROW(split_train_val(numbered(1), 1), DataError);
  EXPECT_THROW(split_train_val(numbered(10), 1, SplitOptions{0.0}), ConfigError);
  EXPECT_THROW(split_train_val(numbered(10), 1, SplitOptions{1.0}), ConfigError);
}

// ---- kfold -----------------------------------------------------------------

TEST(KFold, TenSingletons) {
  const auto folds = kfold(10, 10, 1);
  ASSERT_EQ(folds.size(), 10u);
  for (const auto& f : folds) {
    EXPECT_EQ(f.test.size(), 1u);
    EXPECT_EQ(f.train.size(), 9u);
  }
}

TEST(KFold, ElevenOverTen) {
  const auto folds = kfold(11, 10, 1);
  std::vector<std::size_t> sizes;
  for (const auto& f : folds) sizes.push_back(f.test.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(KFold, PartitionProperty) {
  for (std::size_t n : {10u, 23u, 100u, 1001u}) {
    for (int k : {2, 3, 10}) {
      const auto folds = kfold(n, k, 77);
      std::vector<int> seen(n, 0);
      std::size_t total = 0, lo = n, hi = 0;
      for (const auto& f : folds) {
        total += f.test.size();
        lo = std::min(lo, f.test.size());
        hi = std::max(hi, f.test.size());
        EXPECT_TRUE(std::is_sorted(f.test.begin(), f.test.end()));
        EXPECT_TRUE(std::is_sorted(f.train.begin(), f.train.end()));
        std::vector<std::size_t> all(f.train);
        all.insert(all.end(), f.test.begin(), f.test.end());
        std::sort(all.begin(), all.end());
        std::vector<std::size_t> expect(n);
        std::iota(expect.begin(), expect.end(), 0u);
        EXPECT_EQ(all, expect);
        for (auto i : f.test) ++seen[i];
      }
      EXPECT_EQ(total, n);
      EXPECT_LE(hi - lo, 1u);
      EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    }
  }
}

TEST(KFold, DeterministicAndSeedSensitive) {
  const auto a = kfold(50, 5, 1);
  const auto b = kfold(50, 5, 1);
  const auto c = kfold(50, 5, 2);
  EXPECT_EQ(a[0].test, b[0].test);
  EXPECT_NE(a[0].test, c[0].test);
}

TEST(KFold, Errors) {
  EXPECT_THROW(kfold(9, 10, 1), DataError);
  EXPECT_THROW(kfold(10, 1, 1), ConfigError);
}

}  // namespace
}  // namespace hofnet
