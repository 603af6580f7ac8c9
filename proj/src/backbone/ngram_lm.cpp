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

#include "artk/backbone/ngram_lm.hpp"

#include <algorithm>
#include <cmath>

#include "artk/backbone/vocabulary.hpp"
#include "artk/core/error.hpp"

namespace artk {

std::size_t NGramLM::ContextHash::operator()(const std::vector<TokenId>& context) const noexcept {
  std::size_t seed = context.size();
  for (const TokenId id : context) {
    seed ^= static_cast<std::size_t>(id) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

const NGramLM::ContextStats* NGramLM::find(std::span<const TokenId> context) const {
  const std::vector<TokenId> key(context.begin(), context.end());
  const auto it = contexts_.find(key);
  return it == contexts_.end() ? nullptr : &it->second;
}

std::uint64_t NGramLM::count(std::span<const TokenId> context, TokenId token) const {
  const auto* stats = find(context);
  if (stats == nullptr) return 0;
  const auto it = stats->next.find(token);
  return it == stats->next.end() ? 0 : it->second;
}

std::uint64_t NGramLM::context_count(std::span<const TokenId> context) const {
  const auto* stats = find(context);
  return stats == nullptr ? 0 : stats->total;
}

Distribution NGramLM::next_distribution(std::span<const TokenId> prefix) const {
  const auto history_len = static_cast<std::size_t>(options_.order - 1);
  std::vector<TokenId> history(history_len, kBos);
  const std::size_t take = std::min(history_len, prefix.size());
  std::copy(prefix.end() - static_cast<std::ptrdiff_t>(take), prefix.end(),
            history.end() - static_cast<std::ptrdiff_t>(take));

  const auto V = static_cast<double>(vocab_size_);
  const double kV = options_.add_k * V;
  std::vector<double> probs(vocab_size_, 1.0 / V);

  auto apply = [&](const ContextStats* stats, auto prior) {
    const double total = stats == nullptr ? 0.0 : static_cast<double>(stats->total);
    for (std::size_t w = 0; w < vocab_size_; ++w) {
      double c = 0.0;
      if (stats != nullptr) {
        const auto it = stats->next.find(static_cast<TokenId>(w));
        if (it != stats->next.end()) c = static_cast<double>(it->second);
      }
      probs[w] = (c + prior(w)) / (total + kV);
    }
  };

  if (options_.backoff) {
    for (std::size_t j = 0; j <= history_len; ++j) {
      const auto* stats = find(std::span<const TokenId>(history).last(j));
      if (stats == nullptr) break;  // longer contexts are unseen too
      apply(stats, [&](std::size_t w) { return kV * probs[w]; });
    }
  } else {
    apply(find(history), [&](std::size_t) { return options_.add_k; });
  }
  return Distribution(std::move(probs));
}

NGramLM train_ngram(std::span<const std::vector<TokenId>> corpus, std::size_t vocab_size,
                    const NGramOptions& options) {
  require(!corpus.empty(), ErrorCode::kEmptyInput, "cannot train an n-gram model on an empty corpus");
  require(options.order >= 1, ErrorCode::kInvalidArgument, "n-gram order must be >= 1");
  require(options.add_k > 0.0 && std::isfinite(options.add_k), ErrorCode::kInvalidArgument,
          "add-k constant must be positive");
  require(vocab_size > Vocabulary::kEos, ErrorCode::kInvalidArgument,
          "vocabulary must contain the special tokens");

  NGramLM lm(vocab_size, options);
  const auto history_len = static_cast<std::size_t>(options.order - 1);
  for (const auto& sentence : corpus) {
    std::vector<TokenId> padded(history_len, NGramLM::kBos);
    padded.insert(padded.end(), sentence.begin(), sentence.end());
    padded.push_back(Vocabulary::kEos);
    for (std::size_t pos = history_len; pos < padded.size(); ++pos) {
      const TokenId target = padded[pos];
      require(target < vocab_size, ErrorCode::kInvalidArgument, "token id outside vocabulary");
      for (std::size_t j = 0; j <= history_len; ++j) {
        std::vector<TokenId> context(padded.begin() + static_cast<std::ptrdiff_t>(pos - j),
                                     padded.begin() + static_cast<std::ptrdiff_t>(pos));
        auto& stats = lm.contexts_[std::move(context)];
        ++stats.total;
        ++stats.next[target];
      }
    }
  }
  return lm;
}

}  // namespace artk
