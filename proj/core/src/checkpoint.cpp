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

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include "hofnet/cnn.hpp"
#include "hofnet/error.hpp"

namespace hofnet {

namespace {

constexpr std::string_view kMagic = "hofnet-cnn-checkpoint 1";

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

void put_le32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint32_t get_le32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

class Manifest {
 public:
  explicit Manifest(std::map<std::string, std::string> entries) : entries_(std::move(entries)) {}

  const std::string& raw(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw DataError("checkpoint manifest is missing '" + key + "'");
    return it->second;
  }

  std::uint64_t uint(const std::string& key) const {
    const auto& s = raw(key);
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw DataError("checkpoint manifest: bad integer for '" + key + "'");
    }
    return v;
  }

  double real(const std::string& key) const {
    const auto& s = raw(key);
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw DataError("checkpoint manifest: bad number for '" + key + "'");
    }
    return v;
  }

  std::vector<int> ints(const std::string& key) const {
    std::istringstream in(raw(key));
    std::vector<int> out;
    int x;
    while (in >> x) out.push_back(x);
    if (!in.eof()) throw DataError("checkpoint manifest: bad list for '" + key + "'");
    return out;
  }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace

void save_checkpoint(const CnnModel& model, std::uint64_t vocab_fingerprint,
                     const std::filesystem::path& path) {
  const auto& c = model.config();
  std::ostringstream m;
  m << kMagic << '\n';
  m << "dim " << c.dim << '\n';
  m << "vocab_size " << model.vocab_size() << '\n';
  m << "heights " << join_ints(c.heights) << '\n';
  m << "counts " << join_ints(c.counts) << '\n';
  m << "dense_in " << c.pooled_width() << '\n';
  m << "dense " << c.dense << '\n';
  m << "max_len " << c.max_len << '\n';
  m << "min_len " << c.min_len << '\n';
  m << "dropout.input " << format_double(c.dropout.input) << '\n';
  for (std::size_t b = 0; b < c.heights.size(); ++b) {
    m << "dropout.bank" << c.heights[b] << ' ' << format_double(c.dropout.banks[b]) << '\n';
  }
  m << "dropout.dense " << format_double(c.dropout.dense) << '\n';
  m << "fine_tune " << (c.fine_tune_embeddings ? 1 : 0) << '\n';
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(vocab_fingerprint));
  m << "vocab_hash " << hex << '\n';
  std::size_t floats = 0;
  m << "arrays";
  model.visit([&](const std::string& name, std::span<const float> s) {
    m << ' ' << name << ':' << s.size();
    floats += s.size();
  });
  m << '\n';
  m << "data_bytes " << floats * 4 << '\n';
  m << "end\n";

  std::string blob = m.str();
  blob.reserve(blob.size() + floats * 4);
  model.visit([&](const std::string&, std::span<const float> s) {
    for (float x : s) put_le32(blob, std::bit_cast<std::uint32_t>(x));
  });

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

LoadedCheckpoint load_checkpoint(const std::filesystem::path& path, const Vocabulary* expected_vocab) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint " + path.string());
  const std::string blob((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  std::size_t pos = 0;
  auto next_line = [&]() -> std::optional<std::string> {
    const std::size_t nl = blob.find('\n', pos);
    if (nl == std::string::npos) return std::nullopt;
    std::string line = blob.substr(pos, nl - pos);
    pos = nl + 1;
    return line;
  };
  auto first = next_line();
  if (!first || *first != kMagic) throw DataError("not a hofnet checkpoint: " + path.string());
  std::map<std::string, std::string> entries;
  for (;;) {
    auto line = next_line();
    if (!line) throw DataError("checkpoint manifest is truncated (no 'end' line)");
    if (*line == "end") break;
    const auto space = line->find(' ');
    if (space == std::string::npos) throw DataError("checkpoint manifest: malformed line '" + *line + "'");
    entries[line->substr(0, space)] = line->substr(space + 1);
  }
  const Manifest mf(std::move(entries));

  CnnConfig c;
  c.dim = mf.uint("dim");
  c.heights = mf.ints("heights");
  c.counts = mf.ints("counts");
  c.dense = mf.uint("dense");
  c.max_len = mf.uint("max_len");
  c.min_len = mf.uint("min_len");
  c.dropout.input = mf.real("dropout.input");
  c.dropout.banks.clear();
  for (int h : c.heights) c.dropout.banks.push_back(mf.real("dropout.bank" + std::to_string(h)));
  c.dropout.dense = mf.real("dropout.dense");
  c.fine_tune_embeddings = mf.uint("fine_tune") != 0;
  if (c.heights.size() != c.counts.size()) throw ShapeError("checkpoint: heights and counts differ in length");
  const std::size_t dense_in = mf.uint("dense_in");
  if (dense_in != c.pooled_width()) {
    throw ShapeError("checkpoint dense input width " + std::to_string(dense_in) +
                     " does not match total filters: " + std::to_string(c.pooled_width()) + " expected");
  }

  LoadedCheckpoint out;
  out.model = CnnModel(c, mf.uint("vocab_size"));
  {
    const auto& h = mf.raw("vocab_hash");
    auto res = std::from_chars(h.data(), h.data() + h.size(), out.vocab_fingerprint, 16);
    if (res.ec != std::errc() || res.ptr != h.data() + h.size()) {
      throw DataError("checkpoint manifest: bad vocab_hash");
    }
  }

  std::ostringstream expected_arrays;
  std::size_t floats = 0;
  bool first_array = true;
  out.model.visit([&](const std::string& name, std::span<float> s) {
    if (!first_array) expected_arrays << ' ';
    first_array = false;
    expected_arrays << name << ':' << s.size();
    floats += s.size();
  });
  if (mf.raw("arrays") != expected_arrays.str()) {
    throw ShapeError("checkpoint array lengths do not match the manifest shape: expected '" +
                     expected_arrays.str() + "', found '" + mf.raw("arrays") + "'");
  }
  const std::size_t want = floats * 4;
  if (mf.uint("data_bytes") != want) throw ShapeError("checkpoint data_bytes disagrees with the array lengths");
  const std::size_t have = blob.size() - pos;
  if (have != want) {
    throw DataError("checkpoint length mismatch: expected " + std::to_string(want) + " data bytes, found " +
                    std::to_string(have));
  }
  const auto* p = reinterpret_cast<const unsigned char*>(blob.data() + pos);
  out.model.visit([&](const std::string&, std::span<float> s) {
    for (auto& x : s) {
      x = std::bit_cast<float>(get_le32(p));
      p += 4;
    }
  });

  if (expected_vocab && expected_vocab->fingerprint() != out.vocab_fingerprint) {
    out.warnings.push_back("vocabulary fingerprint differs from the one the checkpoint was trained with");
  }
  return out;
}

}  // namespace hofnet
