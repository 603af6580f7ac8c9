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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artk/core/types.hpp"
#include "artk/kb/dynamic_cache.hpp"
#include "artk/sparse_index/retrieval.hpp"

namespace artk {

// ---------------------------------------------------------------------------
// Early fusion: priming

struct PrimingOptions {
  std::string doc_separator = "[DOC]";
  std::string kv_separator = "[KV]";
};

/// Retrieved blocks joined by the document separator, then the separator
/// and the query. In key-aware mode each block is preceded by its key and
/// the key/value separator. No blocks gives the query unchanged.
std::vector<std::string> prime(std::span<const std::string> query,
                               std::span<const std::vector<std::string>> artefacts,
                               bool key_aware = false,
                               std::span<const std::vector<std::string>> keys = {},
                               const PrimingOptions& options = {});

// ---------------------------------------------------------------------------
// Output gating

/// lambda * p_xi + (1 - lambda) * p_lm.
Distribution convex(const Distribution& p_xi, const Distribution& p_lm, double lambda);

struct NeighborHit {
  TokenId token = 0;
  /// Similarity; exp(score) is the neighbour weight (score = -distance for L2).
  double score = 0.0;
};

/// Softmax over neighbour scores pooled per target token. Throws on no hits.
Distribution neighbor_softmax(std::span<const NeighborHit> hits, std::size_t vocab_size);

/// Same, reading TokenId payloads off retrieved candidates.
Distribution neighbor_softmax(std::span<const Candidate> candidates, std::size_t vocab_size);

/// mass(w) = sum over entries with token w of exp(theta * key . r).
/// Throws Error(kEmptyInput) on an empty cache.
Distribution cache_weights(std::span<const CacheEntry> entries, std::span<const float> key,
                           double theta, std::size_t vocab_size);

enum class GateMode { kScalar, kPerCoordinate };

struct GateParams {
  std::vector<double> weights;  // key dimension
  GateMode mode = GateMode::kScalar;
  double bias = 0.0;
};

double sigmoid(double x);

/// Gate values: one entry in scalar mode (sigmoid(w . k + bias)), otherwise
/// sigmoid(w_j * k_j + bias) for each key coordinate j.
std::vector<double> gate_values(std::span<const float> key, const GateParams& params);

/// renormalize((1 - g) * p_xi + g * p_lm). In per-coordinate mode the
/// vocabulary is cut into d contiguous blocks and token v uses the gate of
/// block floor(v * d / V).
Distribution dynamic_gate(const Distribution& p_xi, const Distribution& p_lm,
                          std::span<const float> key, const GateParams& params);

// ---------------------------------------------------------------------------
// Filtration

struct MaskResult {
  Distribution distribution;
  /// Set when the mask removed all mass and `c` was returned unmasked.
  bool fell_back = false;
};

MaskResult mask_filter(const Distribution& c, const IncidenceVector& mask);

// ---------------------------------------------------------------------------
// Intermediate fusion

/// sum_d d * w_d with w_d = d . topic, or softmax of those dot products.
std::vector<double> attention_sum(std::span<const std::vector<double>> docs,
                                  std::span<const double> topic, bool softmax_weights = false);

}  // namespace artk
