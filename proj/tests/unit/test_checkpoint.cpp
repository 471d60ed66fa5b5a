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

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "hofnet/cnn.hpp"
#include "hofnet/error.hpp"

namespace hofnet {
namespace {

namespace fs = std::filesystem;

class Checkpoint : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hofnet_ckpt_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  static CnnConfig config() {
    CnnConfig c;
    c.dim = 3;
    c.heights = {1, 2};
    c.counts = {2, 3};
    c.dense = 4;
    c.min_len = 2;
    c.max_len = 9;
    c.dropout.banks = {0.25, 0.125};
    c.fine_tune_embeddings = false;
    return c;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  static void spit(const fs::path& p, const std::string& s) {
    std::ofstream out(p, std::ios::binary);
    out << s;
  }

  fs::path dir_;
};

TEST_F(Checkpoint, RoundTripIsBitExact) {
  CnnModel m(config(), 7);
  m.initialize(11, 0.5);
  m.output_bias[0] = -0.0f;
  m.dense_biases[1] = 1e-40f;  // subnormal
  const fs::path p = dir_ / "m.ckpt";
  save_checkpoint(m, 0xdeadbeefcafef00dULL, p);
  const auto loaded = load_checkpoint(p);
  EXPECT_EQ(loaded.vocab_fingerprint, 0xdeadbeefcafef00dULL);
  EXPECT_TRUE(loaded.warnings.empty());
  const auto& c = loaded.model.config();
  EXPECT_EQ(c.heights, config().heights);
  EXPECT_EQ(c.counts, config().counts);
  EXPECT_EQ(c.max_len, 9u);
  EXPECT_EQ(c.min_len, 2u);
  EXPECT_EQ(c.dropout.banks, config().dropout.banks);
  EXPECT_FALSE(c.fine_tune_embeddings);
  EXPECT_EQ(loaded.model.vocab_size(), 7u);

  std::vector<std::vector<float>> a, b;
  m.visit([&](const std::string&, std::span<const float> s) { a.emplace_back(s.begin(), s.end()); });
  loaded.model.visit([&](const std::string&, std::span<const float> s) { b.emplace_back(s.begin(), s.end()); });
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t g = 0; g < a.size(); ++g) {
    ASSERT_EQ(a[g].size(), b[g].size());
    EXPECT_EQ(std::memcmp(a[g].data(), b[g].data(), a[g].size() * sizeof(float)), 0) << "group " << g;
  }

  // Saving the loaded model reproduces the file byte for byte.
  const fs::path q = dir_ / "again.ckpt";
  save_checkpoint(loaded.model, loaded.vocab_fingerprint, q);
  EXPECT_EQ(slurp(p), slurp(q));
}

TEST_F(Checkpoint, ManifestIsReadableText) {
  CnnModel m(config(), 7);
  const fs::path p = dir_ / "m.ckpt";
  save_checkpoint(m, 1, p);
  const std::string s = slurp(p);
  EXPECT_EQ(s.rfind("hofnet-cnn-checkpoint 1\n", 0), 0u);
  EXPECT_NE(s.find("\nheights 1 2\n"), std::string::npos);
  EXPECT_NE(s.find("\nvocab_hash 0000000000000001\n"), std::string::npos);
  EXPECT_NE(s.find("\narrays embedding:21 bank1.weights:6 bank1.biases:2 bank2.weights:18"), std::string::npos);
}

TEST_F(Checkpoint, FingerprintMismatchOnlyWarns) {
  const Vocabulary vocab = Vocabulary::build(std::vector<TokenStream>{{"a", "b", "c", "d", "e"}}, 1);
  CnnModel m(config(), vocab.size());
  const fs::path p = dir_ / "m.ckpt";
  save_checkpoint(m, vocab.fingerprint(), p);
  EXPECT_TRUE(load_checkpoint(p, &vocab).warnings.empty());
  const Vocabulary other = Vocabulary::build(std::vector<TokenStream>{{"a", "b", "c", "d", "f"}}, 1);
  const auto l = load_checkpoint(p, &other);
  ASSERT_EQ(l.warnings.size(), 1u);
  EXPECT_NE(l.warnings[0].find("fingerprint"), std::string::npos);
}

TEST_F(Checkpoint, CorruptFilesAreRejected) {
  CnnModel m(config(), 7);
  const fs::path p = dir_ / "m.ckpt";
  save_checkpoint(m, 1, p);
  const std::string good = slurp(p);
  const fs::path bad = dir_ / "bad.ckpt";

  spit(bad, good.substr(0, good.size() - 4));
  EXPECT_THROW(load_checkpoint(bad), DataError);

  spit(bad, good + "xxxx");
  EXPECT_THROW(load_checkpoint(bad), DataError);

  spit(bad, "something else\n");
  EXPECT_THROW(load_checkpoint(bad), DataError);

  std::string wrong_dense = good;
  const auto at = wrong_dense.find("dense_in 5");
  ASSERT_NE(at, std::string::npos);
  wrong_dense.replace(at, 10, "dense_in 6");
  spit(bad, wrong_dense);
  try {
    load_checkpoint(bad);
    FAIL();
  } catch (const ShapeError& e) {
    EXPECT_NE(std::string(e.what()).find("does not match total filters"), std::string::npos);
  }

  std::string no_end = good.substr(0, good.find("end\n"));
  spit(bad, no_end);
  EXPECT_THROW(load_checkpoint(bad), DataError);

  EXPECT_THROW(load_checkpoint(dir_ / "missing.ckpt"), IoError);
}

}  // namespace
}  // namespace hofnet
