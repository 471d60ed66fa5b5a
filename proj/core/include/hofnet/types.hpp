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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hofnet {

// Binary target. The numeric values are the training targets: the sigmoid
// output of the classifier is the probability of HOF.
enum class Label : int { NOT = 0, HOF = 1 };

inline constexpr std::string_view label_name(Label l) {
  return l == Label::HOF ? "HOF" : "NOT";
}

inline std::optional<Label> parse_label(std::string_view s) {
  if (s == "HOF") return Label::HOF;
  if (s == "NOT") return Label::NOT;
  return std::nullopt;
}

inline constexpr int label_value(Label l) { return static_cast<int>(l); }

// Normalized token sequence. Tokens are nonempty and contain no whitespace.
using TokenStream = std::vector<std::string>;

namespace placeholder {
inline constexpr std::string_view kMention = "xxatp";
inline constexpr std::string_view kUrl = "xxurl";
inline constexpr std::string_view kModifiedRetweet = "xxrtm";
inline constexpr std::string_view kRetweet = "xxrtu";
inline constexpr std::string_view kUnknown = "xxunk";
inline constexpr std::string_view kPad = "xxpad";
}  // namespace placeholder

}  // namespace hofnet
