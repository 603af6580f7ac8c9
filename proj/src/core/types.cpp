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

#include "artk/core/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "artk/core/error.hpp"

namespace artk {

bool is_valid_distribution(std::span<const double> probs, double tolerance) {
  if (probs.empty()) return false;
  double total = 0.0;
  for (const double p : probs) {
    if (!std::isfinite(p) || p < 0.0) return false;
    total += p;
  }
  return std::abs(total - 1.0) <= tolerance;
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  require(!probs_.empty(), ErrorCode::kEmptyInput, "distribution over an empty vocabulary");
  require(is_valid_distribution(probs_), ErrorCode::kInvalidArgument,
          "distribution must be non-negative and sum to 1");
}

Distribution Distribution::uniform(std::size_t size) {
  require(size > 0, ErrorCode::kEmptyInput, "uniform distribution over an empty vocabulary");
  return Distribution(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

Distribution Distribution::one_hot(std::size_t size, std::size_t index) {
  require(index < size, ErrorCode::kInvalidArgument, "one-hot index out of range");
  std::vector<double> probs(size, 0.0);
  probs[index] = 1.0;
  return Distribution(std::move(probs));
}

Distribution Distribution::normalized(std::vector<double> masses) {
  double total = 0.0;
  for (const double m : masses) {
    require(std::isfinite(m) && m >= 0.0, ErrorCode::kInvalidArgument,
            "masses must be finite and non-negative");
    total += m;
  }
  require(total > 0.0, ErrorCode::kInvalidArgument, "cannot normalize zero total mass");
  for (double& m : masses) m /= total;
  return Distribution(std::move(masses));
}

std::size_t Distribution::argmax() const {
  return static_cast<std::size_t>(std::max_element(probs_.begin(), probs_.end()) - probs_.begin());
}

// ---------------------------------------------------------------------------

void TermVector::set(const std::string& term, double weight) {
  require(std::isfinite(weight) && weight >= 0.0, ErrorCode::kInvalidArgument,
          "term weight must be finite and non-negative: " + term);
  if (weight == 0.0) {
    weights_.erase(term);
  } else {
    weights_[term] = weight;
  }
}

double TermVector::get(const std::string& term) const {
  const auto it = weights_.find(term);
  return it == weights_.end() ? 0.0 : it->second;
}

double TermVector::dot(const TermVector& other) const {
  double total = 0.0;
  for (const auto& [term, weight] : weights_) total += weight * other.get(term);
  return total;
}

double TermVector::norm() const { return std::sqrt(dot(*this)); }

TermVector term_union(std::span<const TermVector> vectors) {
  TermVector out;
  for (const auto& vector : vectors) {
    for (const auto& [term, weight] : vector.weights()) {
      if (weight > out.get(term)) out.set(term, weight);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

int TriplePattern::bound_slots() const noexcept {
  return static_cast<int>(parent.has_value()) + static_cast<int>(relation.has_value()) +
         static_cast<int>(entity.has_value());
}

bool TriplePattern::matches(const Triple& triple) const noexcept {
  return (!parent || *parent == triple.parent) && (!relation || *relation == triple.relation) &&
         (!entity || *entity == triple.entity);
}

// ---------------------------------------------------------------------------

std::string_view to_string(KeyKind kind) {
  switch (kind) {
    case KeyKind::kDense: return "dense";
    case KeyKind::kTermVector: return "term-vector";
    case KeyKind::kTriplePattern: return "triple-pattern";
  }
  return "unknown";
}

Key Key::dense(DenseVector vector) {
  Key key;
  key.value_ = std::move(vector);
  return key;
}

Key Key::terms(TermVector terms) {
  Key key;
  key.value_ = std::move(terms);
  return key;
}

Key Key::pattern(TriplePattern pattern) {
  require(pattern.bound_slots() >= 1, ErrorCode::kInvalidArgument,
          "triple pattern needs at least one bound slot");
  Key key;
  key.value_ = std::move(pattern);
  return key;
}

KeyKind Key::kind() const noexcept { return static_cast<KeyKind>(value_.index()); }

const DenseVector& Key::dense() const {
  require(kind() == KeyKind::kDense, ErrorCode::kStageMismatch,
          "expected a dense key, got " + std::string(to_string(kind())));
  return std::get<DenseVector>(value_);
}

const TermVector& Key::terms() const {
  require(kind() == KeyKind::kTermVector, ErrorCode::kStageMismatch,
          "expected a term-vector key, got " + std::string(to_string(kind())));
  return std::get<TermVector>(value_);
}

const TriplePattern& Key::pattern() const {
  require(kind() == KeyKind::kTriplePattern, ErrorCode::kStageMismatch,
          "expected a triple-pattern key, got " + std::string(to_string(kind())));
  return std::get<TriplePattern>(value_);
}

// ---------------------------------------------------------------------------

std::string_view to_string(ArtefactKind kind) {
  switch (kind) {
    case ArtefactKind::kEmpty: return "empty";
    case ArtefactKind::kDistribution: return "distribution";
    case ArtefactKind::kTextBlocks: return "text-block";
    case ArtefactKind::kWeightedVector: return "weighted-vector";
    case ArtefactKind::kTripleSet: return "triple-set";
  }
  return "unknown";
}

Artefact Artefact::distribution(Distribution dist) {
  Artefact a;
  a.value_ = std::move(dist);
  return a;
}

Artefact Artefact::text_blocks(std::vector<TextBlock> blocks) {
  Artefact a;
  a.value_ = std::move(blocks);
  return a;
}

Artefact Artefact::weighted_vector(std::vector<double> vector) {
  Artefact a;
  a.value_ = std::move(vector);
  return a;
}

Artefact Artefact::triple_set(std::vector<Triple> triples) {
  Artefact a;
  a.value_ = std::move(triples);
  return a;
}

ArtefactKind Artefact::kind() const noexcept { return static_cast<ArtefactKind>(value_.index()); }

namespace {

template <typename T>
const T& artefact_get(const auto& value, ArtefactKind want, ArtefactKind have) {
  require(want == have, ErrorCode::kStageMismatch,
          "expected a " + std::string(to_string(want)) + " artefact, got " +
              std::string(to_string(have)));
  return std::get<T>(value);
}

}  // namespace

const Distribution& Artefact::as_distribution() const {
  return artefact_get<Distribution>(value_, ArtefactKind::kDistribution, kind());
}

const std::vector<TextBlock>& Artefact::as_text_blocks() const {
  return artefact_get<std::vector<TextBlock>>(value_, ArtefactKind::kTextBlocks, kind());
}

const std::vector<double>& Artefact::as_weighted_vector() const {
  return artefact_get<std::vector<double>>(value_, ArtefactKind::kWeightedVector, kind());
}

const std::vector<Triple>& Artefact::as_triple_set() const {
  return artefact_get<std::vector<Triple>>(value_, ArtefactKind::kTripleSet, kind());
}

// ---------------------------------------------------------------------------

std::string_view to_string(TaskKind task) {
  switch (task) {
    case TaskKind::kLm: return "lm";
    case TaskKind::kQa: return "qa";
    case TaskKind::kSlotFill: return "slotfill";
    case TaskKind::kFactCheck: return "factcheck";
    case TaskKind::kDialogue: return "dialogue";
  }
  return "unknown";
}

void validate(const Query& query) {
  switch (query.task) {
    case TaskKind::kLm:
    case TaskKind::kQa:
      require(!query.text.empty(), ErrorCode::kInvalidArgument,
              std::string(to_string(query.task)) + " query needs a non-empty token sequence");
      break;
    case TaskKind::kSlotFill:
      require(query.structured.has_value(), ErrorCode::kInvalidArgument,
              "slot-filling query needs a (subject, relation) pair");
      break;
    case TaskKind::kFactCheck:
      require(!query.text.empty(), ErrorCode::kInvalidArgument, "fact-check query needs a claim");
      require(query.pos_tags.empty() || query.pos_tags.size() == query.text.size(),
              ErrorCode::kInvalidArgument, "claim tags must align with claim tokens");
      break;
    case TaskKind::kDialogue:
      require(!query.text.empty() || !query.history.empty(), ErrorCode::kInvalidArgument,
              "dialogue query needs at least one utterance");
      break;
  }
}

}  // namespace artk
