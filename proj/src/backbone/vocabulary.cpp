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

#include "artk/backbone/vocabulary.hpp"

#include "artk/core/error.hpp"

namespace artk {

Vocabulary::Vocabulary() {
  add(std::string(kUnkToken));
  add(std::string(kEosToken));
}

Vocabulary Vocabulary::build(std::span<const std::vector<std::string>> corpus) {
  Vocabulary vocab;
  for (const auto& sentence : corpus) {
    for (const auto& token : sentence) vocab.add(token);
  }
  return vocab;
}

TokenId Vocabulary::add(const std::string& token) {
  const auto [it, inserted] = ids_.try_emplace(token, static_cast<TokenId>(tokens_.size()));
  if (inserted) tokens_.push_back(token);
  return it->second;
}

TokenId Vocabulary::id(const std::string& token) const {
  const auto it = ids_.find(token);
  return it == ids_.end() ? kUnk : it->second;
}

bool Vocabulary::contains(const std::string& token) const { return ids_.contains(token); }

const std::string& Vocabulary::token(TokenId id) const {
  require(id < tokens_.size(), ErrorCode::kNotFound, "token id out of range");
  return tokens_[id];
}

std::vector<TokenId> Vocabulary::encode(std::span<const std::string> tokens) const {
  std::vector<TokenId> ids;
  ids.reserve(tokens.size());
  for (const auto& token : tokens) ids.push_back(id(token));
  return ids;
}

}  // namespace artk
