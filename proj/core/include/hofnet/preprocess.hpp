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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hofnet/types.hpp"

namespace hofnet {

// Tweet normalization. Every function here is pure and thread-safe.

// Replaces retweet sources, mentions and URLs with placeholder tokens:
//   RT @handle[:]  -> xxrtu      MT @handle[:]  -> xxrtm
//   @handle        -> xxatp      http(s)://...  or  t.co/...  -> xxurl
// A handle is one or more of [A-Za-z0-9_]; a URL runs to the next space.
// Scheme, t.co and RT/MT matching is case-insensitive.
std::string deidentify(std::string_view text);

// Collapses every run of three or more identical code points to two.
std::string fix_repeats(std::string_view text);

// Replaces markup debris (<br/>, <br>, <unk>, @-@) with a space, drops
// zero-width characters (U+200B..U+200D, U+FEFF), then collapses whitespace
// runs to a single space.
std::string remove_invalid(std::string_view text);

// Decodes &#NNN;, &#xHH; and the named entities amp, lt, gt, quot, apos and
// nbsp. Decoding repeats until the text is stable so double-escaped input
// (&amp;#64;) resolves fully. Unknown or malformed entities are kept verbatim.
std::string html_unescape(std::string_view text);

// Splits on whitespace and detaches leading and trailing punctuation runs as
// separate tokens. Latin letters are lowercased; other scripts are untouched.
TokenStream tokenize(std::string_view text);

// Longest-suffix stripper for Devanagari tokens driven by a suffix table.
class HindiStemmer {
 public:
  // The table shipped in core/data/hindi_suffixes.txt, compiled in.
  static const HindiStemmer& builtin();

  // Table text: one suffix per line, '#' comments and blank lines ignored.
  // Throws DataError for entries that are not Devanagari.
  static HindiStemmer from_text(std::string_view table);
  static HindiStemmer from_file(const std::filesystem::path& path);

  // Tokens made entirely of Devanagari code points lose their longest
  // matching suffix as long as at least one code point remains. Anything
  // else is returned unchanged.
  std::string stem(std::string_view token) const;

  // Suffixes, longest first.
  const std::vector<std::u32string>& suffixes() const { return suffixes_; }

 private:
  std::vector<std::u32string> suffixes_;
};

std::string stem_hindi(std::string_view token);

struct PreprocessOptions {
  bool stem = true;
};

// The full pipeline:
//   html_unescape -> deidentify -> remove_invalid -> fix_repeats -> tokenize
// repeated on the space-joined tokens until they stop changing (later stages
// can expose patterns for earlier ones, e.g. "htttp://x" -> "http://x"),
// followed by one stemming pass per token.
class Preprocessor {
 public:
  Preprocessor() : Preprocessor(HindiStemmer::builtin()) {}
  explicit Preprocessor(HindiStemmer stemmer, PreprocessOptions options = {})
      : stemmer_(std::move(stemmer)), options_(options) {}

  TokenStream operator()(std::string_view text) const;

  const HindiStemmer& stemmer() const { return stemmer_; }

 private:
  HindiStemmer stemmer_;
  PreprocessOptions options_;
};

TokenStream preprocess(std::string_view text);

std::string join_tokens(const TokenStream& tokens);

}  // namespace hofnet
