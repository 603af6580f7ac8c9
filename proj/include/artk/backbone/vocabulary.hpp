// Copyright 2026 The artk Authors
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

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "artk/core/types.hpp"

namespace artk {

/// Dense token ids 0..V-1. Id 0 is "<unk>" and id 1 is the end marker "</s>";
/// corpus tokens follow in order of first appearance.
class Vocabulary {
 public:
  static constexpr TokenId kUnk = 0;
  static constexpr TokenId kEos = 1;
  static constexpr std::string_view kUnkToken = "<unk>";
  static constexpr std::string_view kEosToken = "</s>";

  Vocabulary();

  static Vocabulary build(std::span<const std::vector<std::string>> corpus);

  /// Adds the token if absent and returns its id.
  TokenId add(const std::string& token);

  TokenId id(const std::string& token) const;
  bool contains(const std::string& token) const;
  const std::string& token(TokenId id) const;
  std::size_t size() const noexcept { return tokens_.size(); }
  TokenId unk_id() const noexcept { return kUnk; }
  std::span<const std::string> tokens() const noexcept { return tokens_; }

  std::vector<TokenId> encode(std::span<const std::string> tokens) const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> ids_;
};

}  // namespace artk
