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
#include <vector>

#include "artk/pipelines/lm.hpp"

namespace artk {

struct PerplexityResult {
  double perplexity = 0.0;
  double total_nll = 0.0;
  std::size_t tokens = 0;
  std::vector<double> sequence_nll;  // per sequence, summed
};

/// exp(-mean ln p). Throws Error(kEmptyInput) on no probabilities and
/// Error(kZeroProbability) on a non-positive one.
double perplexity_of(std::span<const double> probs);

/// Scores every token of every sequence with its prefix inside the sequence
/// (the first token sees the empty prefix). begin_document() is called per
/// sequence and observe() after each token.
PerplexityResult perplexity(LmScorer& scorer, std::span<const std::vector<TokenId>> corpus);

/// Lowercase, punctuation stripped, whitespace collapsed.
std::string normalize_answer(const std::string& text);

/// Fraction of normalized exact matches. Throws on empty or misaligned input.
double exact_match(std::span<const std::string> predictions, std::span<const std::string> golds);

/// Fraction of queries whose gold item is within the first k of its ranking.
double recall_at_k(std::span<const std::vector<std::string>> ranked,
                   std::span<const std::string> gold, std::size_t k);

/// Mean reciprocal rank of the gold item, 0 when absent.
double mrr(std::span<const std::vector<std::string>> ranked, std::span<const std::string> gold);

}  // namespace artk
