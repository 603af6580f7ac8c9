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

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "artk/backbone/embedder.hpp"
#include "artk/backbone/ngram_lm.hpp"
#include "artk/backbone/vocabulary.hpp"
#include "artk/core/pipeline.hpp"
#include "artk/fusion/fusion.hpp"
#include "artk/kb/dynamic_cache.hpp"
#include "artk/kb/memorized_kb.hpp"

namespace artk {

inline constexpr std::size_t kDefaultKnnNeighbors = 1024;
inline constexpr std::size_t kDefaultGateNeighbors = 4;
inline constexpr std::size_t kDefaultCacheCapacity = 500;
inline constexpr double kDefaultLambda = 0.25;
inline constexpr double kDefaultTheta = 0.3;
/// Neighbour weights are exp(-distance / temperature). Unit-norm prefix keys
/// sit at most 2 apart, so temperature 1 leaves the neighbour softmax nearly
/// flat; the kNN-LM default sharpens it to the scale of squared distances
/// between unnormalized high-dimensional states.
inline constexpr double kDefaultKnnTemperature = 0.02;

/// Shared backbone of the language-model pipelines.
struct LmResources {
  std::shared_ptr<const Vocabulary> vocab;
  std::shared_ptr<const NGramLM> lm;
  std::shared_ptr<const PrefixEmbedder> embedder;
};

/// Model-stage output of the LM pipelines.
struct LmOutput {
  std::optional<Distribution> p_m;
  std::optional<Distribution> p_lm;
  std::optional<double> gate;
};

struct LmStepResult {
  Distribution p_m;
  Distribution p_lm;
  std::optional<Distribution> p_xi;
  std::optional<double> gate;
  Trace trace;
};

/// LM query for a token-id prefix.
Query lm_query(const Vocabulary& vocab, std::span<const TokenId> prefix);

// ---------------------------------------------------------------------------
// Stages

/// Query text -> decayed prefix embedding.
class PrefixEncoder final : public Encoder {
 public:
  PrefixEncoder(std::shared_ptr<const Vocabulary> vocab,
                std::shared_ptr<const PrefixEmbedder> embedder)
      : vocab_(std::move(vocab)), embedder_(std::move(embedder)) {}
  std::string name() const override { return "prefix-embedding"; }
  KeyKind key_kind() const override { return KeyKind::kDense; }
  Key encode(const Query& query) const override;

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  std::shared_ptr<const PrefixEmbedder> embedder_;
};

/// Neighbour scores divided by the temperature -> softmax pooled per target
/// token. No candidates gives an empty artefact.
class NeighborSoftmaxAggregator final : public Aggregator {
 public:
  explicit NeighborSoftmaxAggregator(std::size_t vocab_size, double temperature = 1.0);
  std::string name() const override { return "neighbour-softmax"; }
  Artefact aggregate(std::span<const Candidate> candidates, const Key& key, const Query& query,
                     Notes& notes) const override;

 private:
  std::size_t vocab_size_;
  double temperature_;
};

/// Every cache entry, newest first; candidate score is key . r.
class CacheRetriever final : public Retriever {
 public:
  explicit CacheRetriever(std::shared_ptr<const DynamicCache> cache) : cache_(std::move(cache)) {}
  std::string name() const override { return "dynamic-cache"; }
  KeyKind key_kind() const override { return KeyKind::kDense; }
  std::vector<Candidate> retrieve(const Key& key) const override;

 private:
  std::shared_ptr<const DynamicCache> cache_;
};

class CacheAggregator final : public Aggregator {
 public:
  CacheAggregator(double theta, std::size_t vocab_size) : theta_(theta), vocab_size_(vocab_size) {}
  std::string name() const override { return "cache-softmax"; }
  Artefact aggregate(std::span<const Candidate> candidates, const Key& key, const Query& query,
                     Notes& notes) const override;

 private:
  double theta_;
  std::size_t vocab_size_;
};

/// lambda * artefact + (1 - lambda) * LM; the LM alone when the artefact is empty.
class ConvexModel final : public Model<LmOutput> {
 public:
  ConvexModel(std::shared_ptr<const Vocabulary> vocab, std::shared_ptr<const NGramLM> lm,
              double lambda);
  std::string name() const override { return "convex"; }
  LmOutput predict(const Query& query, const Artefact& artefact, Notes& notes) const override;

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  std::shared_ptr<const NGramLM> lm_;
  double lambda_;
};

/// Gate computed from the query key (re-encoded with `encoder`).
class GatedModel final : public Model<LmOutput> {
 public:
  GatedModel(std::shared_ptr<const Vocabulary> vocab, std::shared_ptr<const NGramLM> lm,
             std::shared_ptr<const Encoder> encoder, GateParams params);
  std::string name() const override { return "dynamic-gate"; }
  LmOutput predict(const Query& query, const Artefact& artefact, Notes& notes) const override;

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  std::shared_ptr<const NGramLM> lm_;
  std::shared_ptr<const Encoder> encoder_;
  GateParams params_;
};

// ---------------------------------------------------------------------------
// Assembled pipelines

/// Memorized-KB neighbours under L2, static convex mixture with the n-gram LM.
class KnnLm {
 public:
  KnnLm(LmResources resources, std::shared_ptr<const MemorizedKB> kb, double lambda,
        std::size_t neighbors = kDefaultKnnNeighbors,
        double temperature = kDefaultKnnTemperature);

  /// An empty prefix skips retrieval and returns the LM distribution.
  LmStepResult step(std::span<const TokenId> prefix) const;
  const Pipeline<LmOutput>& pipeline() const noexcept { return pipeline_; }

 private:
  LmResources resources_;
  Pipeline<LmOutput> pipeline_;
};

struct CacheLmOptions {
  double lambda = kDefaultLambda;
  double theta = kDefaultTheta;
  std::size_t capacity = kDefaultCacheCapacity;
  /// Cache the argmax of p_m instead of the observed token.
  bool cache_predicted = false;
};

/// Continuous cache over one evaluation stream. Not thread-safe.
class CacheLm {
 public:
  CacheLm(LmResources resources, const CacheLmOptions& options);
  /// Runs against an externally owned cache.
  CacheLm(LmResources resources, const CacheLmOptions& options,
          std::shared_ptr<DynamicCache> cache);

  /// Scores the next token, then pushes (key, token) where token is the
  /// observed one (or the argmax of p_m when configured). An empty cache
  /// gives the LM distribution; an empty prefix is never pushed.
  LmStepResult step(std::span<const TokenId> prefix, std::optional<TokenId> observed);
  /// Scoring half of step(); leaves the cache untouched.
  LmStepResult score(std::span<const TokenId> prefix) const;
  /// Update half of step().
  void push(std::span<const TokenId> prefix, TokenId token);

  void reset() { cache_->clear(); }
  const DynamicCache& cache() const noexcept { return *cache_; }
  const CacheLmOptions& options() const noexcept { return options_; }
  const Pipeline<LmOutput>& pipeline() const noexcept { return pipeline_; }

 private:
  LmResources resources_;
  CacheLmOptions options_;
  std::shared_ptr<DynamicCache> cache_;
  Pipeline<LmOutput> pipeline_;
};

/// Top-k inner-product neighbours mixed with the LM through a learned gate.
class GatedLm {
 public:
  GatedLm(LmResources resources, std::shared_ptr<const MemorizedKB> kb, GateParams params,
          std::size_t neighbors = kDefaultGateNeighbors);

  LmStepResult step(std::span<const TokenId> prefix) const;
  const Pipeline<LmOutput>& pipeline() const noexcept { return pipeline_; }
  const GateParams& params() const noexcept { return params_; }

 private:
  LmResources resources_;
  GateParams params_;
  Pipeline<LmOutput> pipeline_;
};

LmStepResult base_lm_step(std::span<const TokenId> prefix, const LmResources& resources);

LmStepResult knn_lm_step(std::span<const TokenId> prefix, const LmResources& resources,
                         std::shared_ptr<const MemorizedKB> kb, double lambda,
                         std::size_t neighbors = kDefaultKnnNeighbors,
                         double temperature = kDefaultKnnTemperature);

/// One step of an externally owned cache: scores, then pushes.
LmStepResult cache_lm_step(std::span<const TokenId> prefix, const LmResources& resources,
                           DynamicCache& cache, double lambda, double theta,
                           std::optional<TokenId> observed, bool cache_predicted = false);

LmStepResult gated_lm_step(std::span<const TokenId> prefix, const LmResources& resources,
                           std::shared_ptr<const MemorizedKB> kb, const GateParams& params,
                           std::size_t neighbors = kDefaultGateNeighbors);

struct GateFitOptions {
  int iterations = 200;
  double step = 1.0;
};

/// Scalar gate (weights and bias) minimizing dev-set NLL, by gradient descent
/// from zero with backtracking; never ends above the w = 0 objective.
GateParams fit_gate(const LmResources& resources, std::shared_ptr<const MemorizedKB> kb,
                    std::span<const std::vector<TokenId>> dev,
                    std::size_t neighbors = kDefaultGateNeighbors,
                    const GateFitOptions& options = {});

// ---------------------------------------------------------------------------
// Sequential scoring interface used by evaluation

class LmScorer {
 public:
  virtual ~LmScorer() = default;
  virtual void begin_document() {}
  virtual Distribution predict(std::span<const TokenId> prefix) = 0;
  virtual void observe(std::span<const TokenId> /*prefix*/, TokenId /*token*/) {}
};

class BaseLmScorer final : public LmScorer {
 public:
  explicit BaseLmScorer(LmResources resources) : resources_(std::move(resources)) {}
  Distribution predict(std::span<const TokenId> prefix) override;

 private:
  LmResources resources_;
};

class KnnLmScorer final : public LmScorer {
 public:
  explicit KnnLmScorer(KnnLm model) : model_(std::move(model)) {}
  Distribution predict(std::span<const TokenId> prefix) override;

 private:
  KnnLm model_;
};

class GatedLmScorer final : public LmScorer {
 public:
  explicit GatedLmScorer(GatedLm model) : model_(std::move(model)) {}
  Distribution predict(std::span<const TokenId> prefix) override;

 private:
  GatedLm model_;
};

/// Cache cleared at every document start; pushes happen in observe().
class CacheLmScorer final : public LmScorer {
 public:
  explicit CacheLmScorer(CacheLm model) : model_(std::move(model)) {}
  void begin_document() override { model_.reset(); }
  Distribution predict(std::span<const TokenId> prefix) override;
  void observe(std::span<const TokenId> prefix, TokenId token) override;

 private:
  CacheLm model_;
  std::optional<TokenId> last_argmax_;
};

}  // namespace artk
