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

#include <memory>
#include <span>
#include <vector>

#include "artk/backbone/embedder.hpp"
#include "artk/core/pipeline.hpp"
#include "artk/dense_index/dense_index.hpp"

namespace artk {

/// Training prefixes mapped to their gold continuation.
///
/// One entry per (sequence, position i >= 1): key = embed(X[0..i)), value =
/// X[i]. Duplicate sentences yield duplicate entries. Payload strings hold
/// the decimal token id.
class MemorizedKB {
 public:
  /// Throws Error(kEmptyInput) when the corpus yields no entries.
  static MemorizedKB build(std::span<const std::vector<TokenId>> corpus,
                           const PrefixEmbedder& embedder, Metric metric = Metric::kL2);

  std::size_t size() const noexcept { return targets_.size(); }
  Metric metric() const noexcept { return index_.metric(); }
  std::size_t dim() const noexcept { return index_.dim(); }
  const DenseIndex& index() const noexcept { return index_; }
  TokenId target(std::size_t row) const;

  SearchResult search(std::span<const float> key, std::size_t count) const;

 private:
  MemorizedKB(DenseIndex index, std::vector<TokenId> targets)
      : index_(std::move(index)), targets_(std::move(targets)) {}

  DenseIndex index_;
  std::vector<TokenId> targets_;
};

/// Nearest stored prefixes; candidates carry the target token and the
/// index score (negative distance for L2).
class MemorizedRetriever final : public Retriever {
 public:
  MemorizedRetriever(std::shared_ptr<const MemorizedKB> kb, std::size_t count)
      : kb_(std::move(kb)), count_(count) {}
  std::string name() const override { return "memorized-knn"; }
  KeyKind key_kind() const override { return KeyKind::kDense; }
  std::vector<Candidate> retrieve(const Key& key) const override;

  const MemorizedKB& kb() const noexcept { return *kb_; }
  /// Requested count clamped to the KB size.
  std::size_t effective_count() const noexcept;

 private:
  std::shared_ptr<const MemorizedKB> kb_;
  std::size_t count_;
};

}  // namespace artk
