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

#include "hofnet/preprocess.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "hofnet/error.hpp"
#include "hofnet/utf8.hpp"

namespace hofnet {

namespace {

using utf8::is_punct;
using utf8::is_space;
using utf8::is_word_char;

constexpr int kMaxNormalizePasses = 8;

char32_t ascii_lower(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c + 32 : c;
}

// Case-insensitive (ASCII) match of `lit` at position `i`.
bool matches_at(const std::u32string& s, std::size_t i, std::u32string_view lit) {
  if (i + lit.size() > s.size()) return false;
  for (std::size_t k = 0; k < lit.size(); ++k) {
    if (ascii_lower(s[i + k]) != lit[k]) return false;
  }
  return true;
}

std::size_t skip_handle(const std::u32string& s, std::size_t i) {
  while (i < s.size() && is_word_char(s[i])) ++i;
  return i;
}

std::size_t skip_nonspace(const std::u32string& s, std::size_t i) {
  while (i < s.size() && !is_space(s[i])) ++i;
  return i;
}

// Length of a URL starting at i, or 0.
std::size_t url_at(const std::u32string& s, std::size_t i) {
  for (std::u32string_view prefix : {U"https://", U"http://", U"t.co/"}) {
    if (matches_at(s, i, prefix)) return skip_nonspace(s, i + prefix.size()) - i;
  }
  return 0;
}

// Length of "RT @handle:" / "MT @handle:" starting at i, or 0.
std::size_t retweet_at(const std::u32string& s, std::size_t i) {
  if (i > 0 && is_word_char(s[i - 1])) return 0;
  std::size_t j = i + 2;
  if (j >= s.size() || !is_space(s[j])) return 0;
  while (j < s.size() && is_space(s[j])) ++j;
  if (j + 1 >= s.size() || s[j] != U'@' || !is_word_char(s[j + 1])) return 0;
  j = skip_handle(s, j + 1);
  if (j < s.size() && s[j] == U':') ++j;
  return j - i;
}

std::optional<char32_t> named_entity(std::u32string_view name) {
  static constexpr std::array<std::pair<std::u32string_view, char32_t>, 6> kNamed{{
      {U"amp", U'&'}, {U"lt", U'<'}, {U"gt", U'>'},
      {U"quot", U'"'}, {U"apos", U'\''}, {U"nbsp", 0xA0},
  }};
  for (const auto& [n, cp] : kNamed) {
    if (n == name) return cp;
  }
  return std::nullopt;
}

int digit_value(char32_t c, int base) {
  if (c >= U'0' && c <= U'9') return static_cast<int>(c - U'0');
  if (base == 16) {
    const char32_t l = ascii_lower(c);
    if (l >= U'a' && l <= U'f') return static_cast<int>(l - U'a') + 10;
  }
  return -1;
}

// Decodes the entity starting at s[i] == '&'. Returns consumed length and the
// decoded character, or length 0 if the text is not a recognised entity.
std::pair<std::size_t, char32_t> entity_at(const std::u32string& s, std::size_t i) {
  std::size_t j = i + 1;
  if (j < s.size() && s[j] == U'#') {
    ++j;
    int base = 10;
    if (j < s.size() && (s[j] == U'x' || s[j] == U'X')) {
      base = 16;
      ++j;
    }
    const std::size_t max_digits = base == 16 ? 6 : 7;
    std::uint32_t value = 0;
    std::size_t digits = 0;
    while (j < s.size() && digits <= max_digits) {
      const int d = digit_value(s[j], base);
      if (d < 0) break;
      value = value * base + d;
      ++digits;
      ++j;
    }
    if (digits == 0 || digits > max_digits || j >= s.size() || s[j] != U';') {
      return {0, 0};
    }
    if (value == 0 || value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
      return {0, 0};
    }
    return {j + 1 - i, static_cast<char32_t>(value)};
  }
  const std::size_t start = j;
  while (j < s.size() && j - start < 8 && ((s[j] >= U'a' && s[j] <= U'z'))) ++j;
  if (j == start || j >= s.size() || s[j] != U';') return {0, 0};
  if (auto cp = named_entity(std::u32string_view(s).substr(start, j - start))) {
    return {j + 1 - i, *cp};
  }
  return {0, 0};
}

std::u32string unescape_once(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == U'&') {
      if (auto [len, cp] = entity_at(s, i); len > 0) {
        out.push_back(cp);
        i += len;
        continue;
      }
    }
    out.push_back(s[i++]);
  }
  return out;
}

std::u32string strip_blocklist_once(const std::u32string& s) {
  static constexpr std::array<std::u32string_view, 4> kBlocklist{
      U"<br/>", U"<br>", U"<unk>", U"@-@"};
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (utf8::is_zero_width(s[i])) {
      ++i;
      continue;
    }
    bool hit = false;
    for (auto item : kBlocklist) {
      if (s.compare(i, item.size(), item) == 0) {
        out.push_back(U' ');
        i += item.size();
        hit = true;
        break;
      }
    }
    if (!hit) out.push_back(s[i++]);
  }
  return out;
}

bool is_devanagari_token(const std::u32string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), utf8::is_devanagari);
}

TokenStream normalize(std::string_view text) {
  return tokenize(fix_repeats(remove_invalid(deidentify(html_unescape(text)))));
}

}  // namespace

std::string deidentify(std::string_view text) {
  const std::u32string s = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  // Placeholders are kept apart from neighbouring text so they stay whole
  // tokens ("a@b" -> "a xxatp").
  auto put = [&](std::string_view placeholder, std::size_t start, std::size_t next) {
    if (start > 0 && !is_space(s[start - 1]) && out.back() != ' ') out += ' ';
    out += placeholder;
    if (next < s.size() && !is_space(s[next])) out += ' ';
  };
  for (std::size_t i = 0; i < s.size();) {
    if (std::size_t n = url_at(s, i)) {
      put(placeholder::kUrl, i, i + n);
      i += n;
      continue;
    }
    if (matches_at(s, i, U"rt") || matches_at(s, i, U"mt")) {
      if (std::size_t n = retweet_at(s, i)) {
        put(ascii_lower(s[i]) == U'r' ? placeholder::kRetweet : placeholder::kModifiedRetweet, i, i + n);
        i += n;
        continue;
      }
    }
    if (s[i] == U'@' && i + 1 < s.size() && is_word_char(s[i + 1])) {
      const std::size_t end = skip_handle(s, i + 1);
      put(placeholder::kMention, i, end);
      i = end;
      continue;
    }
    utf8::append(out, s[i++]);
  }
  return out;
}

std::string fix_repeats(std::string_view text) {
  const std::u32string s = utf8::decode(text);
  std::u32string out;
  out.reserve(s.size());
  std::size_t run = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    run = (i > 0 && s[i] == s[i - 1]) ? run + 1 : 1;
    if (run <= 2) out.push_back(s[i]);
  }
  return utf8::encode(out);
}

std::string remove_invalid(std::string_view text) {
  std::u32string s = utf8::decode(text);
  // Removing one item can splice another together ("<b<br/>r/>").
  for (;;) {
    std::u32string next = strip_blocklist_once(s);
    if (next == s) break;
    s = std::move(next);
  }
  std::u32string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (is_space(cp)) {
      if (out.empty() || out.back() != U' ') out.push_back(U' ');
    } else {
      out.push_back(cp);
    }
  }
  return utf8::encode(out);
}

std::string html_unescape(std::string_view text) {
  std::u32string s = utf8::decode(text);
  for (;;) {
    std::u32string next = unescape_once(s);
    if (next == s) break;
    s = std::move(next);
  }
  return utf8::encode(s);
}

TokenStream tokenize(std::string_view text) {
  const std::u32string s = utf8::decode(text);
  TokenStream tokens;
  auto emit = [&](std::size_t b, std::size_t e) {
    if (b >= e) return;
    std::string tok;
    for (std::size_t k = b; k < e; ++k) utf8::append(tok, utf8::to_lower_latin(s[k]));
    tokens.push_back(std::move(tok));
  };
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t begin = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    const std::size_t end = i;
    if (begin == end) continue;
    std::size_t lead = begin;
    while (lead < end && is_punct(s[lead])) ++lead;
    if (lead == end) {
      emit(begin, end);
      continue;
    }
    std::size_t trail = end;
    while (trail > lead && is_punct(s[trail - 1])) --trail;
    emit(begin, lead);
    emit(lead, trail);
    emit(trail, end);
  }
  return tokens;
}

const HindiStemmer& HindiStemmer::builtin() {
  static const HindiStemmer stemmer = from_text(
#include "builtin_suffixes.inc"
  );
  return stemmer;
}

HindiStemmer HindiStemmer::from_text(std::string_view table) {
  HindiStemmer stemmer;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= table.size()) {
    std::size_t nl = table.find('\n', pos);
    if (nl == std::string_view::npos) nl = table.size();
    std::string_view line = table.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    std::u32string entry = utf8::decode(line);
    while (!entry.empty() && is_space(entry.back())) entry.pop_back();
    std::size_t lead = 0;
    while (lead < entry.size() && is_space(entry[lead])) ++lead;
    entry.erase(0, lead);
    if (entry.empty() || entry.front() == U'#') continue;
    if (!is_devanagari_token(entry)) {
      throw DataError("suffix table entry is not Devanagari", line_no);
    }
    if (std::find(stemmer.suffixes_.begin(), stemmer.suffixes_.end(), entry) ==
        stemmer.suffixes_.end()) {
      stemmer.suffixes_.push_back(std::move(entry));
    }
  }
  std::stable_sort(stemmer.suffixes_.begin(), stemmer.suffixes_.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return stemmer;
}

HindiStemmer HindiStemmer::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open suffix table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

std::string HindiStemmer::stem(std::string_view token) const {
  const std::u32string t = utf8::decode(token);
  if (!is_devanagari_token(t)) return std::string(token);
  for (const auto& suffix : suffixes_) {
    if (suffix.size() < t.size() &&
        t.compare(t.size() - suffix.size(), suffix.size(), suffix) == 0) {
      return utf8::encode(std::u32string_view(t).substr(0, t.size() - suffix.size()));
    }
  }
  return std::string(token);
}

std::string stem_hindi(std::string_view token) {
  return HindiStemmer::builtin().stem(token);
}

TokenStream Preprocessor::operator()(std::string_view text) const {
  TokenStream tokens = normalize(text);
  for (int pass = 1; pass < kMaxNormalizePasses; ++pass) {
    TokenStream again = normalize(join_tokens(tokens));
    if (again == tokens) break;
    tokens = std::move(again);
  }
  if (options_.stem) {
    for (auto& t : tokens) t = stemmer_.stem(t);
  }
  return tokens;
}

TokenStream preprocess(std::string_view text) {
  static const Preprocessor pipeline;
  return pipeline(text);
}

std::string join_tokens(const TokenStream& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace hofnet
