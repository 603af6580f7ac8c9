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

#include "artk/sparse_index/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "artk/core/error.hpp"
#include "artk/core/text.hpp"

namespace artk {
namespace {

std::set<std::string> distinct_terms(std::span<const std::string> tokens) {
  const auto terms = analyze(tokens);
  return {terms.begin(), terms.end()};
}

double idf_bm25(double n, double df) { return std::log(1.0 + (n - df + 0.5) / (df + 0.5)); }

}  // namespace

TermVector tfidf(std::span<const std::string> tokens, const InvertedIndex& index) {
  std::map<std::string, int> tf;
  for (const auto& t : analyze(tokens)) ++tf[t];
  const double n = static_cast<double>(index.doc_count());
  TermVector out;
  for (const auto& [term, count] : tf) {
    const double df = static_cast<double>(index.df(term));
    out.set(term, count * std::log((n + 1.0) / (df + 1.0)));
  }
  return out;
}

double bm25(std::span<const std::string> query, std::uint32_t doc, const InvertedIndex& index,
            const Bm25Params& params) {
  const double dl = index.doc_length(doc);
  const double n = static_cast<double>(index.doc_count());
  const double norm =
      index.avgdl() > 0.0 ? 1.0 - params.b + params.b * dl / index.avgdl() : 1.0;
  double score = 0.0;
  for (const auto& term : distinct_terms(query)) {
    const double tf = index.tf(term, doc);
    if (tf == 0.0) continue;
    const double df = static_cast<double>(index.df(term));
    score += idf_bm25(n, df) * tf * (params.k1 + 1.0) / (tf + params.k1 * norm);
  }
  return score;
}

std::vector<ScoredDoc> lookup(const InvertedIndex& index, std::span<const std::string> query,
                              std::size_t top, const Bm25Params& params) {
  require(top >= 1, ErrorCode::kInvalidArgument, "lookup needs top >= 1");
  std::set<std::uint32_t> pool;
  for (const auto& term : distinct_terms(query)) {
    for (const auto& p : index.postings(term)) pool.insert(p.doc);
  }
  std::vector<ScoredDoc> ranked;
  ranked.reserve(pool.size());
  for (const auto doc : pool) ranked.push_back({doc, bm25(query, doc, index, params)});
  std::stable_sort(ranked.begin(), ranked.end(), [](const ScoredDoc& a, const ScoredDoc& b) {
    return a.score > b.score || (a.score == b.score && a.doc < b.doc);
  });
  if (ranked.size() > top) ranked.resize(top);
  return ranked;
}

bool has_conjunctive_match(const InvertedIndex& index, std::span<const std::string> query) {
  const auto terms = distinct_terms(query);
  if (terms.empty()) return false;
  std::vector<std::uint32_t> survivors;
  bool first = true;
  for (const auto& term : terms) {
    std::vector<std::uint32_t> docs;
    for (const auto& p : index.postings(term)) docs.push_back(p.doc);
    if (first) {
      survivors = std::move(docs);
      first = false;
    } else {
      std::vector<std::uint32_t> both;
      std::set_intersection(survivors.begin(), survivors.end(), docs.begin(), docs.end(),
                            std::back_inserter(both));
      survivors = std::move(both);
    }
    if (survivors.empty()) return false;
  }
  return true;
}

RelaxedResult relaxed_lookup(const InvertedIndex& index, std::span<const std::string> query,
                             std::size_t top, const Bm25Params& params) {
  require(!query.empty(), ErrorCode::kEmptyInput, "relaxed lookup of an empty query");
  for (std::size_t len = query.size(); len > 0; --len) {
    const auto prefix = query.first(len);
    if (has_conjunctive_match(index, prefix)) return {lookup(index, prefix, top, params), len};
  }
  return {};
}

std::size_t IncidenceVector::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

IncidenceVector operator|(const IncidenceVector& a, const IncidenceVector& b) {
  require(a.size() == b.size(), ErrorCode::kDimensionMismatch, "incidence length mismatch");
  IncidenceVector out{a.bits};
  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] |= b.bits[i];
  return out;
}

IncidenceVector incidence(std::span<const std::uint32_t> docs, const InvertedIndex& index,
                          const Vocabulary& vocab) {
  std::set<std::string> present;
  for (const auto doc : docs) {
    const auto terms = index.doc_terms(doc);
    present.insert(terms.begin(), terms.end());
  }
  IncidenceVector out{std::vector<std::uint8_t>(vocab.size(), 0)};
  for (TokenId id = 0; id < vocab.size(); ++id) {
    if (id == Vocabulary::kUnk || id == Vocabulary::kEos) continue;
    const auto term = normalize_term(vocab.token(id));
    if (!term.empty() && present.count(term) > 0) out.bits[id] = 1;
  }
  return out;
}

bool is_content_tag(const std::string& tag) {
  static const std::set<std::string> kExact = {"N", "V", "ADJ", "NOUN", "PROPN", "VERB"};
  if (kExact.count(tag) > 0) return true;
  return tag.rfind("NN", 0) == 0 || tag.rfind("VB", 0) == 0 || tag.rfind("JJ", 0) == 0;
}

std::vector<std::string> fakta_query(std::span<const std::string> claim,
                                     std::span<const std::string> pos_tags,
                                     std::span<const std::string> entities) {
  require(claim.size() == pos_tags.size(), ErrorCode::kInvalidArgument,
          "claim has " + std::to_string(claim.size()) + " tokens but " +
              std::to_string(pos_tags.size()) + " tags");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < claim.size(); ++i) {
    if (is_content_tag(pos_tags[i])) out.push_back(claim[i]);
  }
  out.insert(out.end(), entities.begin(), entities.end());
  return out;
}

Key TfidfEncoder::encode(const Query& query) const {
  return Key::terms(tfidf(query.text, *index_));
}

std::vector<Candidate> InvertedIndexRetriever::retrieve(const Key& key) const {
  std::vector<std::string> terms;
  for (const auto& [term, weight] : key.terms().weights()) terms.push_back(term);
  std::vector<Candidate> out;
  for (const auto& hit : lookup(*index_, terms, top_)) {
    out.push_back({std::nullopt, DocRef{hit.doc, index_->document(hit.doc).id}, hit.score});
  }
  return out;
}

}  // namespace artk
