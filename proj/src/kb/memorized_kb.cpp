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

#include "artk/kb/memorized_kb.hpp"

#include <algorithm>

#include "artk/core/error.hpp"

namespace artk {

MemorizedKB MemorizedKB::build(std::span<const std::vector<TokenId>> corpus,
                               const PrefixEmbedder& embedder, Metric metric) {
  DenseIndex index(embedder.dim(), metric);
  std::vector<TokenId> targets;
  for (const auto& sentence : corpus) {
    for (std::size_t i = 1; i < sentence.size(); ++i) {
      const auto key = embedder.embed(std::span<const TokenId>(sentence).first(i));
      index.add(key, std::to_string(sentence[i]));
      targets.push_back(sentence[i]);
    }
  }
  require(!targets.empty(), ErrorCode::kEmptyInput,
          "memorized KB needs at least one sentence of two or more tokens");
  return MemorizedKB(std::move(index), std::move(targets));
}

TokenId MemorizedKB::target(std::size_t row) const {
  require(row < targets_.size(), ErrorCode::kNotFound, "row " + std::to_string(row) + " out of range");
  return targets_[row];
}

SearchResult MemorizedKB::search(std::span<const float> key, std::size_t count) const {
  return index_.knn(key, count);
}

std::size_t MemorizedRetriever::effective_count() const noexcept {
  return std::min(count_, kb_->size());
}

std::vector<Candidate> MemorizedRetriever::retrieve(const Key& key) const {
  const auto result = kb_->search(key.dense(), effective_count());
  std::vector<Candidate> out;
  out.reserve(result.hits.size());
  for (const auto& hit : result.hits) out.push_back({std::nullopt, kb_->target(hit.row), hit.score});
  return out;
}

}  // namespace artk
