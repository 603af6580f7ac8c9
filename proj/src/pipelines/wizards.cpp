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

#include "artk/pipelines/wizards.hpp"

#include <cmath>
#include <istream>

#include <json.hpp>

#include "artk/core/error.hpp"
#include "artk/core/text.hpp"
#include "artk/fusion/fusion.hpp"
#include "artk/pipelines/descriptors.hpp"

namespace artk {
namespace {

class DialogueKeyEncoder final : public Encoder {
 public:
  explicit DialogueKeyEncoder(std::shared_ptr<const InvertedIndex> index) : index_(std::move(index)) {}
  std::string name() const override { return "dialogue-topic-union"; }
  KeyKind key_kind() const override { return KeyKind::kTermVector; }
  Key encode(const Query& query) const override {
    return Key::terms(wizards_key(query.history, query.topic, *index_));
  }

 private:
  std::shared_ptr<const InvertedIndex> index_;
};

class TopicAttentionAggregator final : public Aggregator {
 public:
  explicit TopicAttentionAggregator(std::shared_ptr<const PassageSpace> space)
      : space_(std::move(space)) {}
  std::string name() const override { return "topic-attention"; }
  Artefact aggregate(std::span<const Candidate> candidates, const Key&, const Query& query,
                     Notes& notes) const override {
    if (candidates.empty()) {
      notes.push_back("no passage retrieved, zero artefact");
      return Artefact::weighted_vector(std::vector<double>(space_->dim(), 0.0));
    }
    std::vector<std::vector<double>> docs;
    for (const auto& c : candidates) docs.push_back(space_->passage(std::get<DocRef>(c.value).index));
    return Artefact::weighted_vector(attention_sum(docs, space_->encode(query.topic)));
  }

 private:
  std::shared_ptr<const PassageSpace> space_;
};

class ArtefactModel final : public Model<std::vector<double>> {
 public:
  std::string name() const override { return "knowledge-artefact"; }
  std::vector<double> predict(const Query&, const Artefact& artefact, Notes&) const override {
    return artefact.as_weighted_vector();
  }
};

}  // namespace

std::vector<DialogueExample> read_dialogues(std::istream& in) {
  std::vector<DialogueExample> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      DialogueExample ex;
      for (const auto& u : j.at("history")) ex.history.push_back(split_whitespace(u.get<std::string>()));
      ex.topic = split_whitespace(j.value("topic", std::string{}));
      out.push_back(std::move(ex));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::kFormat, "dialogue line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

PassageSpace::PassageSpace(std::shared_ptr<const InvertedIndex> index) : index_(std::move(index)) {
  std::size_t next = 0;
  for (const auto& [term, postings] : index_->terms()) terms_.emplace(term, next++);
  for (std::uint32_t doc = 0; doc < index_->doc_count(); ++doc) {
    const auto& d = index_->document(doc);
    passages_.push_back(encode(split_whitespace(d.title + " " + first_paragraph(d.text))));
  }
}

std::vector<double> PassageSpace::encode(std::span<const std::string> tokens) const {
  std::vector<double> v(terms_.size(), 0.0);
  double norm2 = 0.0;
  const TermVector weights = tfidf(tokens, *index_);
  for (const auto& [term, weight] : weights.weights()) {
    const auto it = terms_.find(term);
    if (it == terms_.end()) continue;
    v[it->second] = weight;
    norm2 += weight * weight;
  }
  if (norm2 > 0.0) {
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
  }
  return v;
}

const std::vector<double>& PassageSpace::passage(std::uint32_t doc) const {
  require(doc < passages_.size(), ErrorCode::kNotFound, "unknown passage " + std::to_string(doc));
  return passages_[doc];
}

TermVector wizards_key(std::span<const std::vector<std::string>> history,
                       std::span<const std::string> topic, const InvertedIndex& index) {
  require(!history.empty(), ErrorCode::kEmptyInput, "dialogue history is empty");
  std::vector<TermVector> parts;
  const std::size_t first = history.size() >= 2 ? history.size() - 2 : 0;
  for (std::size_t i = first; i < history.size(); ++i) parts.push_back(tfidf(history[i], index));
  parts.push_back(tfidf(topic, index));
  return term_union(parts);
}

WizardsResult wizards_select(std::span<const std::vector<std::string>> history,
                             std::span<const std::string> topic,
                             std::shared_ptr<const PassageSpace> space, std::size_t pool) {
  require(!history.empty(), ErrorCode::kEmptyInput, "dialogue history is empty");
  // Non-owning view of the space's index; the space outlives this call.
  const std::shared_ptr<const InvertedIndex> index(space, &space->index());
  const Pipeline<std::vector<double>> pipeline(
      descriptor_for("wizards"), std::make_shared<DialogueKeyEncoder>(index),
      std::make_shared<InvertedIndexRetriever>(index, pool),
      std::make_shared<TopicAttentionAggregator>(space), std::make_shared<ArtefactModel>());
  Query q;
  q.task = TaskKind::kDialogue;
  q.history.assign(history.begin(), history.end());
  q.topic.assign(topic.begin(), topic.end());
  q.text = history.back();
  auto run = pipeline.run(q);

  WizardsResult result;
  result.artefact = std::move(run.output);
  for (const auto& c : run.trace.candidates) {
    result.chosen.push_back({std::get<DocRef>(c.value).index, c.score});
  }
  result.trace = std::move(run.trace);
  return result;
}

}  // namespace artk
