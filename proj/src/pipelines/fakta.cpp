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

#include "artk/pipelines/fakta.hpp"

#include <algorithm>
#include <istream>
#include <set>

#include <json.hpp>

#include "artk/core/error.hpp"
#include "artk/core/text.hpp"

namespace artk {

std::vector<Claim> read_claims(std::istream& in) {
  std::vector<Claim> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      Claim c;
      c.tokens = split_whitespace(j.at("claim").get<std::string>());
      c.tags = j.at("tags").get<std::vector<std::string>>();
      c.entities = j.value("entities", std::vector<std::string>{});
      out.push_back(std::move(c));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::kFormat, "claim line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

RelevanceHook default_relevance() {
  return [](const Claim&, const Document&, double score, double top_score) {
    return score >= 0.5 * top_score;
  };
}

StanceHook default_stance() {
  return [](const Claim&, const Document&) { return std::string("discuss"); };
}

FaktaResult fakta_check(const Claim& claim, const InvertedIndex& docs,
                        const RelevanceHook& relevance, const StanceHook& stance,
                        const FaktaOptions& options) {
  FaktaResult result;
  result.query = fakta_query(claim.tokens, claim.tags, claim.entities);
  result.trace.key = Key::terms(tfidf(result.query, docs));
  if (result.query.empty()) {
    result.trace.events.push_back({"fakta", "condensed query is empty"});
    return result;
  }

  const auto relaxed = relaxed_lookup(docs, result.query, options.top);
  result.used_prefix_len = relaxed.used_prefix_len;
  result.trace.events.push_back({"fakta", "query prefix " + std::to_string(relaxed.used_prefix_len) +
                                              " of " + std::to_string(result.query.size())});
  for (const auto& hit : relaxed.docs) {
    result.trace.candidates.push_back(
        {std::nullopt, DocRef{hit.doc, docs.document(hit.doc).id}, hit.score});
  }
  if (relaxed.docs.empty()) return result;

  std::set<std::string> important;
  for (std::size_t i = 0; i < claim.tokens.size(); ++i) {
    if (!is_content_tag(claim.tags[i])) continue;
    const auto term = normalize_term(claim.tokens[i]);
    if (!term.empty()) important.insert(term);
  }

  std::vector<EvidenceDoc> ranked;
  for (const auto& hit : relaxed.docs) {
    const auto& d = docs.document(hit.doc);
    std::set<std::string> title;
    for (const auto& t : analyze(d.title)) title.insert(t);
    std::size_t shared = 0;
    for (const auto& t : important) shared += title.count(t);
    ranked.push_back({hit.doc, d.id, hit.score, shared, {}});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const EvidenceDoc& a, const EvidenceDoc& b) {
    if (a.overlap != b.overlap) return a.overlap > b.overlap;
    if (a.retrieval != b.retrieval) return a.retrieval > b.retrieval;
    return a.doc < b.doc;
  });

  const double top_score = relaxed.docs.front().score;
  std::vector<TextBlock> blocks;
  double total = 0.0;
  for (auto& e : ranked) {
    const auto& d = docs.document(e.doc);
    if (!relevance(claim, d, e.retrieval, top_score)) continue;
    e.stance = stance(claim, d);
    require(e.stance == "agree" || e.stance == "disagree" || e.stance == "discuss",
            ErrorCode::kInvalidArgument, "stance hook returned '" + e.stance + "'");
    total += e.stance == "agree" ? 1.0 : e.stance == "disagree" ? -1.0 : 0.0;
    blocks.push_back({d.id, split_whitespace(d.text), e.retrieval});
    result.evidence.push_back(e);
  }
  if (result.evidence.empty()) {
    result.trace.events.push_back({"fakta", "no document passed the relevance filter"});
    return result;
  }
  result.trace.artefact = Artefact::text_blocks(std::move(blocks));
  result.mean_stance = total / static_cast<double>(result.evidence.size());
  if (result.mean_stance > 1.0 / 3.0) {
    result.label = "agree";
  } else if (result.mean_stance < -1.0 / 3.0) {
    result.label = "disagree";
  } else {
    result.label = "discuss";
  }
  return result;
}

}  // namespace artk
