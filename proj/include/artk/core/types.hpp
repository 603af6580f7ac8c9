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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace artk {

using TokenId = std::uint32_t;
using DenseVector = std::vector<float>;

inline constexpr double kProbabilityTolerance = 1e-9;

// ---------------------------------------------------------------------------
// Distribution

/// Normalized probability vector over a vocabulary. Construction validates
/// non-negativity and that the mass sums to 1 within kProbabilityTolerance.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);

  static Distribution uniform(std::size_t size);
  static Distribution one_hot(std::size_t size, std::size_t index);
  /// Divides non-negative masses by their total. Throws on zero total mass.
  static Distribution normalized(std::vector<double> masses);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t argmax() const;

 private:
  std::vector<double> probs_;
};

bool is_valid_distribution(std::span<const double> probs, double tolerance = kProbabilityTolerance);

// ---------------------------------------------------------------------------
// Sparse term weights

/// term -> non-negative weight. Zero weights are never stored.
class TermVector {
 public:
  TermVector() = default;

  void set(const std::string& term, double weight);
  double get(const std::string& term) const;
  bool empty() const noexcept { return weights_.empty(); }
  std::size_t size() const noexcept { return weights_.size(); }
  const std::map<std::string, double>& weights() const noexcept { return weights_; }

  double dot(const TermVector& other) const;
  double norm() const;

  friend bool operator==(const TermVector&, const TermVector&) = default;

 private:
  std::map<std::string, double> weights_;
};

/// Term-wise maximum of the inputs.
TermVector term_union(std::span<const TermVector> vectors);

// ---------------------------------------------------------------------------
// Knowledge-graph triples

struct Triple {
  std::string parent;
  std::string relation;
  std::string entity;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct TriplePattern {
  std::optional<std::string> parent;
  std::optional<std::string> relation;
  std::optional<std::string> entity;

  int bound_slots() const noexcept;
  bool matches(const Triple& triple) const noexcept;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

// ---------------------------------------------------------------------------
// Key

enum class KeyKind { kDense, kTermVector, kTriplePattern };

std::string_view to_string(KeyKind kind);

/// Encoder output addressing a knowledge base.
class Key {
 public:
  Key() = default;
  static Key dense(DenseVector vector);
  static Key terms(TermVector terms);
  static Key pattern(TriplePattern pattern);

  KeyKind kind() const noexcept;
  const DenseVector& dense() const;
  const TermVector& terms() const;
  const TriplePattern& pattern() const;

  friend bool operator==(const Key&, const Key&) = default;

 private:
  std::variant<DenseVector, TermVector, TriplePattern> value_;
};

// ---------------------------------------------------------------------------
// Candidates and artefacts

struct DocRef {
  std::uint32_t index = 0;
  std::string id;

  friend bool operator==(const DocRef&, const DocRef&) = default;
};

/// Retrieved value: token id, document reference, answer string, or triple.
using Payload = std::variant<TokenId, DocRef, std::string, Triple>;

struct Candidate {
  std::optional<Key> key;
  Payload value;
  double score = 0.0;
};

struct TextBlock {
  std::string source_id;
  std::vector<std::string> tokens;
  double score = 0.0;

  friend bool operator==(const TextBlock&, const TextBlock&) = default;
};

enum class ArtefactKind { kEmpty, kDistribution, kTextBlocks, kWeightedVector, kTripleSet };

std::string_view to_string(ArtefactKind kind);

class Artefact {
 public:
  Artefact() = default;
  static Artefact distribution(Distribution dist);
  static Artefact text_blocks(std::vector<TextBlock> blocks);
  static Artefact weighted_vector(std::vector<double> vector);
  static Artefact triple_set(std::vector<Triple> triples);

  ArtefactKind kind() const noexcept;
  bool empty() const noexcept { return kind() == ArtefactKind::kEmpty; }
  const Distribution& as_distribution() const;
  const std::vector<TextBlock>& as_text_blocks() const;
  const std::vector<double>& as_weighted_vector() const;
  const std::vector<Triple>& as_triple_set() const;

 private:
  std::variant<std::monostate, Distribution, std::vector<TextBlock>, std::vector<double>,
               std::vector<Triple>>
      value_;
};

// ---------------------------------------------------------------------------
// Query

enum class TaskKind { kLm, kQa, kSlotFill, kFactCheck, kDialogue };

std::string_view to_string(TaskKind task);

struct StructuredQuery {
  std::string subject;
  std::string relation;
};

struct Query {
  TaskKind task = TaskKind::kLm;
  std::vector<std::string> text;
  std::optional<StructuredQuery> structured;
  std::vector<std::string> topic;
  // Annotations supplied by upstream tools (tagger, entity linker, dialogue state).
  std::vector<std::string> pos_tags;
  std::vector<std::string> entities;
  std::vector<std::vector<std::string>> history;
};

/// Checks the per-task primary field: structured for slot filling, text otherwise
/// (non-empty for lm and qa).
void validate(const Query& query);

}  // namespace artk
