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

#include "artk/fusion/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "artk/core/error.hpp"

namespace artk {
namespace {

void check_same_size(const Distribution& a, const Distribution& b) {
  require(a.size() == b.size(), ErrorCode::kDimensionMismatch,
          "distribution sizes differ: " + std::to_string(a.size()) + " vs " +
              std::to_string(b.size()));
}

// exp(score - max) pooled per token, then normalized.
Distribution pooled_softmax(std::span<const NeighborHit> hits, std::size_t vocab_size) {
  require(!hits.empty(), ErrorCode::kEmptyInput, "softmax over no neighbours");
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& h : hits) {
    require(std::isfinite(h.score), ErrorCode::kInvalidArgument, "non-finite neighbour score");
    require(h.token < vocab_size, ErrorCode::kNotFound,
            "neighbour token " + std::to_string(h.token) + " outside vocabulary");
    top = std::max(top, h.score);
  }
  std::vector<double> mass(vocab_size, 0.0);
  for (const auto& h : hits) mass[h.token] += std::exp(h.score - top);
  return Distribution::normalized(std::move(mass));
}

}  // namespace

std::vector<std::string> prime(std::span<const std::string> query,
                               std::span<const std::vector<std::string>> artefacts,
                               bool key_aware, std::span<const std::vector<std::string>> keys,
                               const PrimingOptions& options) {
  if (key_aware) {
    require(keys.size() == artefacts.size(), ErrorCode::kInvalidArgument,
            "key-aware priming needs one key per artefact");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < artefacts.size(); ++i) {
    if (key_aware) {
      out.insert(out.end(), keys[i].begin(), keys[i].end());
      out.push_back(options.kv_separator);
    }
    out.insert(out.end(), artefacts[i].begin(), artefacts[i].end());
    out.push_back(options.doc_separator);
  }
  out.insert(out.end(), query.begin(), query.end());
  return out;
}

Distribution convex(const Distribution& p_xi, const Distribution& p_lm, double lambda) {
  check_same_size(p_xi, p_lm);
  require(lambda >= 0.0 && lambda <= 1.0, ErrorCode::kInvalidArgument,
          "lambda must lie in [0, 1]");
  if (lambda == 0.0) return p_lm;
  if (lambda == 1.0) return p_xi;
  std::vector<double> out(p_lm.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lambda * p_xi[i] + (1.0 - lambda) * p_lm[i];
  return Distribution(std::move(out));
}

Distribution neighbor_softmax(std::span<const NeighborHit> hits, std::size_t vocab_size) {
  return pooled_softmax(hits, vocab_size);
}

Distribution neighbor_softmax(std::span<const Candidate> candidates, std::size_t vocab_size) {
  std::vector<NeighborHit> hits;
  hits.reserve(candidates.size());
  for (const auto& c : candidates) {
    const auto* token = std::get_if<TokenId>(&c.value);
    require(token != nullptr, ErrorCode::kInvalidArgument, "candidate payload is not a token");
    hits.push_back({*token, c.score});
  }
  return pooled_softmax(hits, vocab_size);
}

Distribution cache_weights(std::span<const CacheEntry> entries, std::span<const float> key,
                           double theta, std::size_t vocab_size) {
  require(!entries.empty(), ErrorCode::kEmptyInput, "cache is empty");
  std::vector<NeighborHit> hits;
  hits.reserve(entries.size());
  for (const auto& e : entries) {
    require(e.key.size() == key.size(), ErrorCode::kDimensionMismatch, "cache key dimension mismatch");
    double dot = 0.0;
    for (std::size_t i = 0; i < key.size(); ++i) dot += static_cast<double>(key[i]) * e.key[i];
    hits.push_back({e.token, theta * dot});
  }
  return pooled_softmax(hits, vocab_size);
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

std::vector<double> gate_values(std::span<const float> key, const GateParams& params) {
  require(params.weights.size() == key.size(), ErrorCode::kDimensionMismatch,
          "gate weights have dimension " + std::to_string(params.weights.size()) +
              ", key has " + std::to_string(key.size()));
  if (params.mode == GateMode::kScalar) {
    double z = params.bias;
    for (std::size_t i = 0; i < key.size(); ++i) z += params.weights[i] * key[i];
    return {sigmoid(z)};
  }
  std::vector<double> gates(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) gates[i] = sigmoid(params.weights[i] * key[i] + params.bias);
  return gates;
}

Distribution dynamic_gate(const Distribution& p_xi, const Distribution& p_lm,
                          std::span<const float> key, const GateParams& params) {
  check_same_size(p_xi, p_lm);
  const auto gates = gate_values(key, params);
  const std::size_t v = p_lm.size();
  std::vector<double> mix(v);
  for (std::size_t i = 0; i < v; ++i) {
    const double g = gates.size() == 1 ? gates[0] : gates[i * gates.size() / v];
    mix[i] = (1.0 - g) * p_xi[i] + g * p_lm[i];
  }
  return Distribution::normalized(std::move(mix));
}

MaskResult mask_filter(const Distribution& c, const IncidenceVector& mask) {
  require(c.size() == mask.size(), ErrorCode::kDimensionMismatch,
          "mask length " + std::to_string(mask.size()) + " differs from distribution size " +
              std::to_string(c.size()));
  std::vector<double> kept(c.size());
  double total = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    kept[i] = mask.bits[i] ? c[i] : 0.0;
    total += kept[i];
  }
  if (total <= 0.0) return {c, true};
  return {Distribution::normalized(std::move(kept)), false};
}

std::vector<double> attention_sum(std::span<const std::vector<double>> docs,
                                  std::span<const double> topic, bool softmax_weights) {
  require(!docs.empty(), ErrorCode::kEmptyInput, "attention over no documents");
  const std::size_t dim = topic.size();
  std::vector<double> weights;
  weights.reserve(docs.size());
  for (const auto& d : docs) {
    require(d.size() == dim, ErrorCode::kDimensionMismatch, "document and topic dimensions differ");
    double w = 0.0;
    for (std::size_t i = 0; i < dim; ++i) w += d[i] * topic[i];
    weights.push_back(w);
  }
  if (softmax_weights) {
    const double top = *std::max_element(weights.begin(), weights.end());
    double total = 0.0;
    for (auto& w : weights) total += (w = std::exp(w - top));
    for (auto& w : weights) w /= total;
  }
  std::vector<double> out(dim, 0.0);
  for (std::size_t j = 0; j < docs.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) out[i] += weights[j] * docs[j][i];
  }
  return out;
}

}  // namespace artk
