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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "artk/backbone/vocabulary.hpp"
#include "artk/core/types.hpp"
#include "artk/fusion/fusion.hpp"
#include "artk/kb/triple_store.hpp"

namespace artk {

enum class TokenType { kNonEntity, kNewEntity, kRelatedEntity };

/// What the (external) decision head chose for the next token.
struct KglmDecision {
  TokenType type = TokenType::kNonEntity;
  std::string entity;    // new entity
  std::string parent;    // related entity
  std::string relation;  // related entity
};

/// Order in which matching entities are listed before the seeded pick.
enum class EntityOrder { kAscending, kDescending };

struct KglmState {
  explicit KglmState(std::uint64_t seed, EntityOrder order = EntityOrder::kAscending)
      : rng(seed), order(order) {}

  LocalGraph local;
  std::mt19937_64 rng;
  EntityOrder order;
};

enum class TokenSource { kLanguageModel, kEntity };

struct KglmStepResult {
  TokenSource source = TokenSource::kLanguageModel;
  std::optional<std::string> entity;
  /// Sorted matching entities considered for a related-entity pick.
  std::vector<std::string> matches;
  LocalGraph local;
};

/// Produces decisions one token at a time; tests script them.
class DecisionProvider {
 public:
  virtual ~DecisionProvider() = default;
  virtual KglmDecision next(const KglmState& state) = 0;
};

/// Replays a fixed list; past the end every decision is non-entity.
class ScriptedDecisions final : public DecisionProvider {
 public:
  explicit ScriptedDecisions(std::vector<KglmDecision> script) : script_(std::move(script)) {}
  KglmDecision next(const KglmState& state) override;

 private:
  std::vector<KglmDecision> script_;
  std::size_t position_ = 0;
};

/// non-entity: defer to the LM. new entity: expand the local graph with it.
/// related entity: match (parent, relation, ?) in the local graph, pick one
/// match uniformly with the state's generator, expand with the pick.
/// Throws Error(kNoMatch) when a related-entity decision matches nothing.
/// Updates state.local and returns a copy of it.
KglmStepResult kglm_step(KglmState& state, const KglmDecision& decision, const TripleStore& store);

/// Runs a provider for `steps` tokens; a no-match step falls back to the LM.
std::vector<KglmStepResult> kglm_run(KglmState& state, DecisionProvider& provider,
                                     const TripleStore& store, std::size_t steps);

/// LM distribution restricted to the vocabulary tokens naming an entity in
/// `entities` (mask_filter with fallback).
MaskResult constrain_to_entities(const Distribution& p_lm, const std::vector<std::string>& entities,
                                 const Vocabulary& vocab);

}  // namespace artk
