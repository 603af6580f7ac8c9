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

#include "artk/pipelines/kglm.hpp"

#include <algorithm>

#include "artk/core/error.hpp"
#include "artk/core/pipeline.hpp"
#include "artk/core/text.hpp"
#include "artk/pipelines/descriptors.hpp"

namespace artk {
namespace {

/// (subject, relation) -> (subject, relation, ?).
class RelationPatternEncoder final : public Encoder {
 public:
  std::string name() const override { return "entity-relation"; }
  KeyKind key_kind() const override { return KeyKind::kTriplePattern; }
  Key encode(const Query& query) const override {
    require(query.structured.has_value(), ErrorCode::kInvalidArgument,
            "related-entity query needs (parent, relation)");
    return Key::pattern({query.structured->subject, query.structured->relation, std::nullopt});
  }
};

/// Seeded uniform pick among the matched entities.
class EntityPickModel final : public Model<std::string> {
 public:
  EntityPickModel(std::mt19937_64* rng, EntityOrder order) : rng_(rng), order_(order) {}
  std::string name() const override { return "seeded-entity-pick"; }
  std::string predict(const Query&, const Artefact& artefact, Notes& notes) const override {
    if (artefact.empty()) fail(ErrorCode::kNoMatch, "no entity matches the pattern");
    std::vector<std::string> entities;
    for (const auto& t : artefact.as_triple_set()) entities.push_back(t.entity);
    std::sort(entities.begin(), entities.end());
    entities.erase(std::unique(entities.begin(), entities.end()), entities.end());
    if (order_ == EntityOrder::kDescending) std::reverse(entities.begin(), entities.end());
    std::uniform_int_distribution<std::size_t> pick(0, entities.size() - 1);
    const auto& chosen = entities[pick(*rng_)];
    notes.push_back("picked '" + chosen + "' among " + std::to_string(entities.size()));
    return chosen;
  }

 private:
  std::mt19937_64* rng_;
  EntityOrder order_;
};

}  // namespace

KglmDecision ScriptedDecisions::next(const KglmState&) {
  if (position_ >= script_.size()) return {};
  return script_[position_++];
}

KglmStepResult kglm_step(KglmState& state, const KglmDecision& decision, const TripleStore& store) {
  KglmStepResult result;
  switch (decision.type) {
    case TokenType::kNonEntity:
      break;
    case TokenType::kNewEntity:
      state.local = kg_expand_local(state.local, store, decision.entity);
      result.source = TokenSource::kEntity;
      result.entity = decision.entity;
      break;
    case TokenType::kRelatedEntity: {
      // The local graph is a snapshot: the pipeline only reads it.
      auto graph = std::make_shared<const TripleStore>(state.local.graph());
      const Pipeline<std::string> pipeline(
          descriptor_for("kg-lm"), std::make_shared<RelationPatternEncoder>(),
          std::make_shared<TripleRetriever>(graph), std::make_shared<PassThroughAggregator>(),
          std::make_shared<EntityPickModel>(&state.rng, state.order));
      Query q;
      q.task = TaskKind::kLm;
      q.structured = StructuredQuery{decision.parent, decision.relation};
      std::vector<std::string> matches;
      for (const auto& t : graph->match({decision.parent, decision.relation, std::nullopt})) {
        matches.push_back(t.entity);
      }
      if (matches.empty()) {
        fail(ErrorCode::kNoMatch, "no entity matches (" + decision.parent + ", " +
                                      decision.relation + ", ?) in the local graph");
      }
      auto run = pipeline.run(q);
      state.local = kg_expand_local(state.local, store, run.output);
      result.source = TokenSource::kEntity;
      result.entity = std::move(run.output);
      result.matches = std::move(matches);
      break;
    }
  }
  result.local = state.local;
  return result;
}

std::vector<KglmStepResult> kglm_run(KglmState& state, DecisionProvider& provider,
                                     const TripleStore& store, std::size_t steps) {
  std::vector<KglmStepResult> out;
  out.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const auto decision = provider.next(state);
    try {
      out.push_back(kglm_step(state, decision, store));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoMatch) throw;
      KglmStepResult fallback;
      fallback.local = state.local;
      out.push_back(std::move(fallback));
    }
  }
  return out;
}

MaskResult constrain_to_entities(const Distribution& p_lm, const std::vector<std::string>& entities,
                                 const Vocabulary& vocab) {
  require(p_lm.size() == vocab.size(), ErrorCode::kDimensionMismatch,
          "distribution does not cover the vocabulary");
  IncidenceVector mask{std::vector<std::uint8_t>(vocab.size(), 0)};
  for (const auto& e : entities) {
    if (vocab.contains(e)) mask.bits[vocab.id(e)] = 1;
  }
  return mask_filter(p_lm, mask);
}

}  // namespace artk
