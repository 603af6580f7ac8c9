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

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "artk/core/pipeline.hpp"
#include "artk/sparse_index/inverted_index.hpp"
#include "artk/sparse_index/retrieval.hpp"

namespace artk {

inline constexpr std::string_view kNotVerifiable = "not verifiable";

struct Claim {
  std::vector<std::string> tokens;
  std::vector<std::string> tags;
  std::vector<std::string> entities;
};

/// Reads JSONL {"claim","tags","entities"}; "claim" is whitespace-tokenized.
std::vector<Claim> read_claims(std::istream& in);

struct EvidenceDoc {
  std::uint32_t doc = 0;
  std::string id;
  double retrieval = 0.0;  // BM25 of the relaxed query
  std::size_t overlap = 0;  // shared content words between claim and title
  std::string stance;       // agree | disagree | discuss
};

/// Keeps a retrieved document. Receives the claim, the document, its BM25
/// score and the top BM25 score among the retrieved documents.
using RelevanceHook =
    std::function<bool(const Claim&, const Document&, double score, double top_score)>;
/// Returns agree, disagree or discuss.
using StanceHook = std::function<std::string(const Claim&, const Document&)>;

/// Keeps documents scoring at least half of the top BM25 score.
RelevanceHook default_relevance();
/// Labels everything "discuss".
StanceHook default_stance();

struct FaktaOptions {
  std::size_t top = 10;
};

struct FaktaResult {
  std::vector<std::string> query;
  std::size_t used_prefix_len = 0;
  std::vector<EvidenceDoc> evidence;  // filtered, in rerank order
  double mean_stance = 0.0;
  /// agree, disagree, discuss, or "not verifiable" without evidence.
  std::string label{kNotVerifiable};
  Trace trace;
};

/// Condensed query, relaxed retrieval, rerank by claim/title content-word
/// overlap (then BM25, then document), relevance filter, stance labels, and
/// the mean stance (agree +1, disagree -1, discuss 0) thresholded at +-1/3.
FaktaResult fakta_check(const Claim& claim, const InvertedIndex& docs,
                        const RelevanceHook& relevance = default_relevance(),
                        const StanceHook& stance = default_stance(),
                        const FaktaOptions& options = {});

}  // namespace artk
