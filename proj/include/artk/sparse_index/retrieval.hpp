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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "artk/backbone/vocabulary.hpp"
#include "artk/core/pipeline.hpp"
#include "artk/core/types.hpp"
#include "artk/sparse_index/inverted_index.hpp"

namespace artk {

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

/// weight(t) = tf(t) * ln((N + 1) / (df(t) + 1)) over analyzed terms.
TermVector tfidf(std::span<const std::string> tokens, const InvertedIndex& index);

/// Okapi BM25 summed over distinct analyzed query terms, with
/// idf = ln(1 + (N - df + 0.5) / (df + 0.5)). Throws on an unknown document.
double bm25(std::span<const std::string> query, std::uint32_t doc, const InvertedIndex& index,
            const Bm25Params& params = {});

struct ScoredDoc {
  std::uint32_t doc = 0;
  double score = 0.0;

  friend bool operator==(const ScoredDoc&, const ScoredDoc&) = default;
};

/// Union of the query terms' postings ranked by BM25 (ties by document),
/// truncated to `top`.
std::vector<ScoredDoc> lookup(const InvertedIndex& index, std::span<const std::string> query,
                              std::size_t top, const Bm25Params& params = {});

struct RelaxedResult {
  std::vector<ScoredDoc> docs;
  std::size_t used_prefix_len = 0;
};

/// True when some document contains every analyzed term of the query.
bool has_conjunctive_match(const InvertedIndex& index, std::span<const std::string> query);

/// Drops trailing query tokens until some document contains every remaining
/// term, then ranks with lookup() on that prefix. No match at any length
/// gives an empty result with used_prefix_len 0.
RelaxedResult relaxed_lookup(const InvertedIndex& index, std::span<const std::string> query,
                             std::size_t top, const Bm25Params& params = {});

struct IncidenceVector {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  std::size_t count() const noexcept;
  friend bool operator==(const IncidenceVector&, const IncidenceVector&) = default;
};

IncidenceVector operator|(const IncidenceVector& a, const IncidenceVector& b);

/// bit i is set iff vocabulary token i (normalized) occurs in one of the
/// documents. The unknown and end tokens never match.
IncidenceVector incidence(std::span<const std::uint32_t> docs, const InvertedIndex& index,
                          const Vocabulary& vocab);

/// True for noun, verb and adjective tags in the coarse (N, V, ADJ),
/// universal (NOUN, PROPN, VERB, ADJ) and Penn (NN*, VB*, JJ*) tag sets.
bool is_content_tag(const std::string& tag);

/// Content-tagged claim tokens in order, then every entity token.
std::vector<std::string> fakta_query(std::span<const std::string> claim,
                                     std::span<const std::string> pos_tags,
                                     std::span<const std::string> entities);

// ---------------------------------------------------------------------------
// Pipeline stages

/// Encodes the query text as a TF-IDF term vector against an index.
class TfidfEncoder final : public Encoder {
 public:
  explicit TfidfEncoder(std::shared_ptr<const InvertedIndex> index) : index_(std::move(index)) {}
  std::string name() const override { return "tfidf"; }
  KeyKind key_kind() const override { return KeyKind::kTermVector; }
  Key encode(const Query& query) const override;

 private:
  std::shared_ptr<const InvertedIndex> index_;
};

/// BM25-ranked inverted index lookup on the key's terms.
class InvertedIndexRetriever final : public Retriever {
 public:
  InvertedIndexRetriever(std::shared_ptr<const InvertedIndex> index, std::size_t top)
      : index_(std::move(index)), top_(top) {}
  std::string name() const override { return "inverted-index-lookup"; }
  KeyKind key_kind() const override { return KeyKind::kTermVector; }
  std::vector<Candidate> retrieve(const Key& key) const override;

  const InvertedIndex& index() const noexcept { return *index_; }

 private:
  std::shared_ptr<const InvertedIndex> index_;
  std::size_t top_;
};

}  // namespace artk
