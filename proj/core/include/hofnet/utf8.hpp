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

#include <string>
#include <string_view>

namespace hofnet::utf8 {

// Decodes UTF-8 into Unicode scalar values. Ill-formed sequences decode to
// U+FFFD one byte at a time, so decoding never fails.
std::u32string decode(std::string_view text);

// Encodes scalar values as UTF-8. Surrogates and values above U+10FFFF are
// written as U+FFFD.
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

bool is_space(char32_t cp);
bool is_punct(char32_t cp);
bool is_word_char(char32_t cp);  // [A-Za-z0-9_]
bool is_devanagari(char32_t cp);
bool is_zero_width(char32_t cp);

// Lowercases Latin letters (ASCII and Latin-1); everything else is unchanged.
char32_t to_lower_latin(char32_t cp);

}  // namespace hofnet::utf8
