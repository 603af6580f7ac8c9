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

#include "artk/eval/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "artk/core/error.hpp"

namespace artk {
namespace {

void check_ranked(std::span<const std::vector<std::string>> ranked,
                  std::span<const std::string> gold) {
  require(!gold.empty(), ErrorCode::kEmptyInput, "empty evaluation set");
  require(ranked.size() == gold.size(), ErrorCode::kInvalidArgument,
          "rankings and gold labels differ in count");
}

}  // namespace

double perplexity_of(std::span<const double> probs) {
  require(!probs.empty(), ErrorCode::kEmptyInput, "no scored tokens");
  double nll = 0.0;
  for (const double p : probs) {
    require(p > 0.0, ErrorCode::kZeroProbability, "token with zero probability");
    nll -= std::log(p);
  }
  return std::exp(nll / static_cast<double>(probs.size()));
}

PerplexityResult perplexity(LmScorer& scorer, std::span<const std::vector<TokenId>> corpus) {
  PerplexityResult result;
  for (const auto& sequence : corpus) {
    scorer.begin_document();
    double nll = 0.0;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      const auto prefix = std::span<const TokenId>(sequence).first(i);
      const auto dist = scorer.predict(prefix);
      const double p = dist[sequence[i]];
      require(p > 0.0, ErrorCode::kZeroProbability,
              "token " + std::to_string(sequence[i]) + " has zero probability");
      nll -= std::log(p);
      scorer.observe(prefix, sequence[i]);
    }
    result.sequence_nll.push_back(nll);
    result.total_nll += nll;
    result.tokens += sequence.size();
  }
  require(result.tokens > 0, ErrorCode::kEmptyInput, "no scored tokens");
  result.perplexity = std::exp(result.total_nll / static_cast<double>(result.tokens));
  return result;
}

std::string normalize_answer(const std::string& text) {
  std::string out;
  bool space = false;
  for (const unsigned char c : text) {
    if (std::ispunct(c)) continue;
    if (std::isspace(c)) {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

double exact_match(std::span<const std::string> predictions, std::span<const std::string> golds) {
  require(!golds.empty(), ErrorCode::kEmptyInput, "empty evaluation set");
  require(predictions.size() == golds.size(), ErrorCode::kInvalidArgument,
          "predictions and gold answers differ in count");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    hits += normalize_answer(predictions[i]) == normalize_answer(golds[i]);
  }
  return static_cast<double>(hits) / static_cast<double>(golds.size());
}

double recall_at_k(std::span<const std::vector<std::string>> ranked,
                   std::span<const std::string> gold, std::size_t k) {
  check_ranked(ranked, gold);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto end = ranked[i].begin() + static_cast<std::ptrdiff_t>(std::min(k, ranked[i].size()));
    hits += std::find(ranked[i].begin(), end, gold[i]) != end;
  }
  return static_cast<double>(hits) / static_cast<double>(gold.size());
}

double mrr(std::span<const std::vector<std::string>> ranked, std::span<const std::string> gold) {
  check_ranked(ranked, gold);
  double total = 0.0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto it = std::find(ranked[i].begin(), ranked[i].end(), gold[i]);
    if (it != ranked[i].end()) total += 1.0 / static_cast<double>(it - ranked[i].begin() + 1);
  }
  return total / static_cast<double>(gold.size());
}

}  // namespace artk
