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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artk/backbone/corpus.hpp"
#include "artk/backbone/embedder.hpp"
#include "artk/core/pipeline.hpp"
#include "artk/dense_index/dense_index.hpp"
#include "artk/sparse_index/inverted_index.hpp"

namespace artk {

inline constexpr std::string_view kNoAnswer = "<no-answer>";

struct QaScores {
  double retrieval = 0.0;
  double rerank = 0.0;
  double selection = 0.0;
};

struct QaResult {
  std::string answer{kNoAnswer};
  std::optional<std::string> passage_id;
  QaScores scores;
  Trace trace;
};

struct QaPair {
  std::string question;
  std::string answer;
};

/// Reads JSONL {"question","answer"}.
std::vector<QaPair> read_qa_pairs(std::istream& in);
std::vector<QaPair> read_qa_pairs(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Dense passage retrieval with BM25 re-ranking

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
  double score = 0.0;
};

/// Picks the answer span inside a selected passage.
class SpanScorer {
 public:
  virtual ~SpanScorer() = default;
  /// nullopt when the passage has no admissible span.
  virtual std::optional<Span> best_span(std::span<const std::string> question,
                                        std::span<const std::string> passage) const = 0;
};

/// Lexical stand-in for start/end heads.
///
/// Only tokens whose normalized form is not a question term may be part of an
/// answer. A token gets start logit 1 when it opens the passage or follows a
/// question term, and end logit 1 when it closes the passage or precedes a
/// question term (0 otherwise). P_start and P_end are softmaxes of those
/// logits over the admissible tokens; a span scores P_start(i) * P_end(j)
/// and is at most max_length tokens long. Ties go to the earliest, then
/// shortest span.
class LexicalSpanScorer final : public SpanScorer {
 public:
  explicit LexicalSpanScorer(std::size_t max_length = 10) : max_length_(max_length) {}
  std::optional<Span> best_span(std::span<const std::string> question,
                                std::span<const std::string> passage) const override;

 private:
  std::size_t max_length_;
};

struct DprOptions {
  std::size_t n = 20;
  double lambda_rr = 1.0;
};

/// Reranked passage with its selection probability.
struct RankedPassage {
  std::uint32_t doc = 0;
  double retrieval = 0.0;
  double rerank = 0.0;
  double selection = 0.0;
};

/// Dense index (inner product) whose payloads are the document ids of
/// `inverted`, built with `encoder` over title and text.
DenseIndex build_passage_index(const InvertedIndex& inverted, const BagOfWordsEmbedder& encoder);

/// Top-n by inner product, rerank = BM25 + lambda_rr * sim, selection =
/// softmax of the rerank scores, answer span from the top passage.
class DprQa {
 public:
  DprQa(std::shared_ptr<const DenseIndex> passages, std::shared_ptr<const InvertedIndex> inverted,
        std::shared_ptr<const BagOfWordsEmbedder> encoder, const DprOptions& options = {},
        std::shared_ptr<const SpanScorer> span_scorer = nullptr);

  QaResult answer(std::span<const std::string> question) const;
  /// Reranked candidates in selection order for the last stage's input.
  std::vector<RankedPassage> rank(std::span<const std::string> question) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

QaResult dpr_qa(std::span<const std::string> question, std::shared_ptr<const DenseIndex> passages,
                std::shared_ptr<const InvertedIndex> inverted,
                std::shared_ptr<const BagOfWordsEmbedder> encoder, std::size_t n, double lambda_rr);

// ---------------------------------------------------------------------------
// Nearest-neighbour QA

/// Inner-product index of encoded training questions with answer payloads.
DenseIndex build_qa_kb(std::span<const QaPair> train, const BagOfWordsEmbedder& encoder);

/// Returns the stored answer of the closest training question; no model.
class NnQa {
 public:
  NnQa(std::shared_ptr<const DenseIndex> kb, std::shared_ptr<const BagOfWordsEmbedder> encoder);
  QaResult answer(std::span<const std::string> question) const;

 private:
  Pipeline<std::string> pipeline_;
};

QaResult nn_qa(std::span<const std::string> question, std::shared_ptr<const DenseIndex> kb,
               std::shared_ptr<const BagOfWordsEmbedder> encoder);

}  // namespace artk
