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

#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "artk/core/types.hpp"

namespace artk {

struct NGramOptions {
  int order = 3;
  double add_k = 0.1;
  /// When set, each order's add-k estimate uses the next lower order as its
  /// prior (bottoming out at uniform), so unseen contexts back off to shorter
  /// ones. When cleared, only the full-order context is used.
  bool backoff = true;
};

/// Add-k smoothed n-gram model over a fixed vocabulary size.
///
/// Sentences are padded with order-1 begin markers on the left and the
/// vocabulary end token on the right. With backoff, the estimate at context
/// length j is
///
///   p_j(w | h) = (c(h_j, w) + k V p_{j-1}(w | h)) / (c(h_j) + k V),  p_{-1} = 1/V
///
/// which is plain add-k at every seen context and collapses to the lower
/// order when h_j was never observed.
class NGramLM {
 public:
  static constexpr TokenId kBos = std::numeric_limits<TokenId>::max();

  int order() const noexcept { return options_.order; }
  double add_k() const noexcept { return options_.add_k; }
  bool backoff() const noexcept { return options_.backoff; }
  std::size_t vocab_size() const noexcept { return vocab_size_; }

  /// Occurrences of `token` right after `context` (context may contain kBos).
  std::uint64_t count(std::span<const TokenId> context, TokenId token) const;
  std::uint64_t context_count(std::span<const TokenId> context) const;

  /// Full next-token distribution; never fails, every entry > 0.
  Distribution next_distribution(std::span<const TokenId> prefix) const;

  friend NGramLM train_ngram(std::span<const std::vector<TokenId>> corpus,
                             std::size_t vocab_size, const NGramOptions& options);

 private:
  struct ContextHash {
    std::size_t operator()(const std::vector<TokenId>& context) const noexcept;
  };
  struct ContextStats {
    std::uint64_t total = 0;
    std::unordered_map<TokenId, std::uint64_t> next;
  };

  NGramLM(std::size_t vocab_size, const NGramOptions& options)
      : vocab_size_(vocab_size), options_(options) {}

  const ContextStats* find(std::span<const TokenId> context) const;

  std::size_t vocab_size_;
  NGramOptions options_;
  std::unordered_map<std::vector<TokenId>, ContextStats, ContextHash> contexts_;
};

/// Counts every n-gram order 1..n. Throws on an empty corpus, n < 1 or k <= 0.
NGramLM train_ngram(std::span<const std::vector<TokenId>> corpus, std::size_t vocab_size,
                    const NGramOptions& options);

}  // namespace artk
