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

#include "artk/pipelines/lm.hpp"

#include <cmath>

#include "artk/core/error.hpp"
#include "artk/pipelines/descriptors.hpp"

namespace artk {
namespace {

LmStepResult lm_only(Distribution p_lm, const std::string& stage, const std::string& message) {
  Trace trace;
  trace.events.push_back({stage, message});
  return {p_lm, p_lm, std::nullopt, std::nullopt, std::move(trace)};
}

LmStepResult from_run(PipelineRun<LmOutput> run) {
  std::optional<Distribution> p_xi;
  if (run.trace.artefact.kind() == ArtefactKind::kDistribution) {
    p_xi = run.trace.artefact.as_distribution();
  }
  return {std::move(*run.output.p_m), std::move(*run.output.p_lm), std::move(p_xi),
          run.output.gate, std::move(run.trace)};
}

double dot(std::span<const float> a, std::span<const float> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<double>(a[i]) * b[i];
  return s;
}

}  // namespace

Query lm_query(const Vocabulary& vocab, std::span<const TokenId> prefix) {
  Query q;
  q.task = TaskKind::kLm;
  q.text.reserve(prefix.size());
  for (const TokenId id : prefix) q.text.push_back(vocab.token(id));
  return q;
}

Key PrefixEncoder::encode(const Query& query) const {
  return Key::dense(embedder_->embed(vocab_->encode(query.text)));
}

NeighborSoftmaxAggregator::NeighborSoftmaxAggregator(std::size_t vocab_size, double temperature)
    : vocab_size_(vocab_size), temperature_(temperature) {
  require(temperature > 0.0 && std::isfinite(temperature), ErrorCode::kInvalidArgument,
          "neighbour temperature must be positive");
}

Artefact NeighborSoftmaxAggregator::aggregate(std::span<const Candidate> candidates, const Key&,
                                              const Query&, Notes& notes) const {
  if (candidates.empty()) {
    notes.push_back("no neighbours retrieved");
    return Artefact{};
  }
  std::vector<NeighborHit> hits;
  hits.reserve(candidates.size());
  for (const auto& c : candidates) {
    const auto* token = std::get_if<TokenId>(&c.value);
    require(token != nullptr, ErrorCode::kInvalidArgument, "candidate payload is not a token");
    hits.push_back({*token, c.score / temperature_});
  }
  return Artefact::distribution(neighbor_softmax(hits, vocab_size_));
}

std::vector<Candidate> CacheRetriever::retrieve(const Key& key) const {
  std::vector<Candidate> out;
  out.reserve(cache_->size());
  for (const auto& entry : cache_->entries()) {
    require(entry.key.size() == key.dense().size(), ErrorCode::kDimensionMismatch,
            "cache key dimension mismatch");
    out.push_back({std::nullopt, entry.token, dot(key.dense(), entry.key)});
  }
  return out;
}

Artefact CacheAggregator::aggregate(std::span<const Candidate> candidates, const Key&,
                                    const Query&, Notes& notes) const {
  if (candidates.empty()) {
    notes.push_back("cache empty");
    return Artefact{};
  }
  // Same mass as cache_weights(): exp(theta * k . r) pooled per token.
  std::vector<NeighborHit> hits;
  hits.reserve(candidates.size());
  for (const auto& c : candidates) hits.push_back({std::get<TokenId>(c.value), theta_ * c.score});
  return Artefact::distribution(neighbor_softmax(hits, vocab_size_));
}

ConvexModel::ConvexModel(std::shared_ptr<const Vocabulary> vocab,
                         std::shared_ptr<const NGramLM> lm, double lambda)
    : vocab_(std::move(vocab)), lm_(std::move(lm)), lambda_(lambda) {
  require(lambda >= 0.0 && lambda <= 1.0, ErrorCode::kInvalidArgument, "lambda must lie in [0, 1]");
}

LmOutput ConvexModel::predict(const Query& query, const Artefact& artefact, Notes& notes) const {
  auto p_lm = lm_->next_distribution(vocab_->encode(query.text));
  if (artefact.empty()) {
    notes.push_back("no artefact, LM distribution used alone");
    return {p_lm, p_lm, std::nullopt};
  }
  auto p_m = convex(artefact.as_distribution(), p_lm, lambda_);
  return {std::move(p_m), std::move(p_lm), std::nullopt};
}

GatedModel::GatedModel(std::shared_ptr<const Vocabulary> vocab, std::shared_ptr<const NGramLM> lm,
                       std::shared_ptr<const Encoder> encoder, GateParams params)
    : vocab_(std::move(vocab)),
      lm_(std::move(lm)),
      encoder_(std::move(encoder)),
      params_(std::move(params)) {}

LmOutput GatedModel::predict(const Query& query, const Artefact& artefact, Notes& notes) const {
  auto p_lm = lm_->next_distribution(vocab_->encode(query.text));
  if (artefact.empty()) {
    notes.push_back("no artefact, LM distribution used alone");
    return {p_lm, p_lm, std::nullopt};
  }
  const Key key = encoder_->encode(query);
  const auto gates = gate_values(key.dense(), params_);
  double gate = 0.0;
  for (const double g : gates) gate += g;
  gate /= static_cast<double>(gates.size());
  auto p_m = dynamic_gate(artefact.as_distribution(), p_lm, key.dense(), params_);
  return {std::move(p_m), std::move(p_lm), gate};
}

// ---------------------------------------------------------------------------

KnnLm::KnnLm(LmResources resources, std::shared_ptr<const MemorizedKB> kb, double lambda,
             std::size_t neighbors, double temperature)
    : resources_(resources),
      pipeline_(descriptor_for("knn-lm"),
                std::make_shared<PrefixEncoder>(resources.vocab, resources.embedder),
                std::make_shared<MemorizedRetriever>(std::move(kb), neighbors),
                std::make_shared<NeighborSoftmaxAggregator>(resources.vocab->size(), temperature),
                std::make_shared<ConvexModel>(resources.vocab, resources.lm, lambda)) {
  require(neighbors >= 1, ErrorCode::kInvalidArgument, "neighbour count must be >= 1");
}

LmStepResult KnnLm::step(std::span<const TokenId> prefix) const {
  if (prefix.empty()) {
    return lm_only(resources_.lm->next_distribution(prefix), "knn-lm",
                   "empty prefix, retrieval skipped");
  }
  return from_run(pipeline_.run(lm_query(*resources_.vocab, prefix)));
}

CacheLm::CacheLm(LmResources resources, const CacheLmOptions& options)
    : CacheLm(std::move(resources), options, std::make_shared<DynamicCache>(options.capacity)) {}

CacheLm::CacheLm(LmResources resources, const CacheLmOptions& options,
                 std::shared_ptr<DynamicCache> cache)
    : resources_(resources),
      options_(options),
      cache_(std::move(cache)),
      pipeline_(descriptor_for("cache-lm"),
                std::make_shared<PrefixEncoder>(resources.vocab, resources.embedder),
                std::make_shared<CacheRetriever>(cache_),
                std::make_shared<CacheAggregator>(options.theta, resources.vocab->size()),
                std::make_shared<ConvexModel>(resources.vocab, resources.lm, options.lambda)) {}

LmStepResult CacheLm::score(std::span<const TokenId> prefix) const {
  if (prefix.empty()) {
    return lm_only(resources_.lm->next_distribution(prefix), "cache-lm",
                   "empty prefix, cache skipped");
  }
  return from_run(pipeline_.run(lm_query(*resources_.vocab, prefix)));
}

void CacheLm::push(std::span<const TokenId> prefix, TokenId token) {
  if (prefix.empty()) return;
  cache_->push(resources_.embedder->embed(prefix), token);
}

LmStepResult CacheLm::step(std::span<const TokenId> prefix, std::optional<TokenId> observed) {
  auto result = score(prefix);
  if (options_.cache_predicted) {
    push(prefix, static_cast<TokenId>(result.p_m.argmax()));
  } else {
    require(observed.has_value(), ErrorCode::kInvalidArgument,
            "observed-token caching needs the observed token");
    push(prefix, *observed);
  }
  return result;
}

GatedLm::GatedLm(LmResources resources, std::shared_ptr<const MemorizedKB> kb, GateParams params,
                 std::size_t neighbors)
    : resources_(resources), params_(params), pipeline_([&] {
        require(kb->metric() == Metric::kInnerProduct, ErrorCode::kInvalidArgument,
                "gated LM needs an inner-product memorized KB");
        require(neighbors >= 1, ErrorCode::kInvalidArgument, "neighbour count must be >= 1");
        auto encoder = std::make_shared<PrefixEncoder>(resources.vocab, resources.embedder);
        return Pipeline<LmOutput>(
            descriptor_for("gated-lm"), encoder,
            std::make_shared<MemorizedRetriever>(kb, neighbors),
            std::make_shared<NeighborSoftmaxAggregator>(resources.vocab->size()),
            std::make_shared<GatedModel>(resources.vocab, resources.lm, encoder, params));
      }()) {
  require(params_.weights.size() == resources_.embedder->dim(), ErrorCode::kDimensionMismatch,
          "gate weights must match the key dimension");
}

LmStepResult GatedLm::step(std::span<const TokenId> prefix) const {
  if (prefix.empty()) {
    return lm_only(resources_.lm->next_distribution(prefix), "gated-lm",
                   "empty prefix, retrieval skipped");
  }
  return from_run(pipeline_.run(lm_query(*resources_.vocab, prefix)));
}

// ---------------------------------------------------------------------------

LmStepResult base_lm_step(std::span<const TokenId> prefix, const LmResources& resources) {
  const auto p = resources.lm->next_distribution(prefix);
  return {p, p, std::nullopt, std::nullopt, Trace{}};
}

LmStepResult knn_lm_step(std::span<const TokenId> prefix, const LmResources& resources,
                         std::shared_ptr<const MemorizedKB> kb, double lambda,
                         std::size_t neighbors, double temperature) {
  return KnnLm(resources, std::move(kb), lambda, neighbors, temperature).step(prefix);
}

LmStepResult cache_lm_step(std::span<const TokenId> prefix, const LmResources& resources,
                           DynamicCache& cache, double lambda, double theta,
                           std::optional<TokenId> observed, bool cache_predicted) {
  CacheLmOptions options;
  options.lambda = lambda;
  options.theta = theta;
  options.capacity = cache.capacity();
  options.cache_predicted = cache_predicted;
  // Non-owning handle: the caller keeps the cache alive for this call.
  std::shared_ptr<DynamicCache> handle(std::shared_ptr<DynamicCache>(), &cache);
  return CacheLm(resources, options, handle).step(prefix, observed);
}

LmStepResult gated_lm_step(std::span<const TokenId> prefix, const LmResources& resources,
                           std::shared_ptr<const MemorizedKB> kb, const GateParams& params,
                           std::size_t neighbors) {
  return GatedLm(resources, std::move(kb), params, neighbors).step(prefix);
}

GateParams fit_gate(const LmResources& resources, std::shared_ptr<const MemorizedKB> kb,
                    std::span<const std::vector<TokenId>> dev, std::size_t neighbors,
                    const GateFitOptions& options) {
  const std::size_t dim = resources.embedder->dim();
  struct Sample {
    DenseVector key;
    double retrieved;  // p_xi(y)
    double lm;         // p_lm(y)
  };
  std::vector<Sample> samples;
  for (const auto& sentence : dev) {
    for (std::size_t i = 1; i < sentence.size(); ++i) {
      const auto prefix = std::span<const TokenId>(sentence).first(i);
      auto key = resources.embedder->embed(prefix);
      const auto hits = kb->search(key, std::min(neighbors, kb->size()));
      std::vector<NeighborHit> nh;
      for (const auto& h : hits.hits) nh.push_back({kb->target(h.row), h.score});
      const auto p_xi = neighbor_softmax(nh, resources.vocab->size());
      const auto p_lm = resources.lm->next_distribution(prefix);
      samples.push_back({std::move(key), p_xi[sentence[i]], p_lm[sentence[i]]});
    }
  }
  GateParams params{std::vector<double>(dim, 0.0), GateMode::kScalar, 0.0};
  if (samples.empty()) return params;

  const double n = static_cast<double>(samples.size());
  auto objective = [&](const GateParams& p) {
    double nll = 0.0;
    for (const auto& s : samples) {
      const double g = gate_values(s.key, p)[0];
      nll -= std::log((1.0 - g) * s.retrieved + g * s.lm);
    }
    return nll / n;
  };

  double current = objective(params);
  double step = options.step;
  for (int it = 0; it < options.iterations; ++it) {
    std::vector<double> grad(dim, 0.0);
    double grad_bias = 0.0;
    for (const auto& s : samples) {
      const double g = gate_values(s.key, params)[0];
      const double p = (1.0 - g) * s.retrieved + g * s.lm;
      const double dz = -(s.lm - s.retrieved) * g * (1.0 - g) / p / n;
      for (std::size_t d = 0; d < dim; ++d) grad[d] += dz * s.key[d];
      grad_bias += dz;
    }
    double norm2 = grad_bias * grad_bias;
    for (const double g : grad) norm2 += g * g;
    if (norm2 < 1e-18) break;

    bool improved = false;
    for (int halvings = 0; halvings < 40 && !improved; ++halvings) {
      GateParams trial = params;
      for (std::size_t d = 0; d < dim; ++d) trial.weights[d] -= step * grad[d];
      trial.bias -= step * grad_bias;
      const double value = objective(trial);
      if (value < current) {
        params = std::move(trial);
        current = value;
        improved = true;
        step *= 1.5;
      } else {
        step *= 0.5;
      }
    }
    if (!improved) break;
  }
  return params;
}

// ---------------------------------------------------------------------------

Distribution BaseLmScorer::predict(std::span<const TokenId> prefix) {
  return resources_.lm->next_distribution(prefix);
}

Distribution KnnLmScorer::predict(std::span<const TokenId> prefix) {
  return model_.step(prefix).p_m;
}

Distribution GatedLmScorer::predict(std::span<const TokenId> prefix) {
  return model_.step(prefix).p_m;
}

Distribution CacheLmScorer::predict(std::span<const TokenId> prefix) {
  auto result = model_.score(prefix);
  last_argmax_ = static_cast<TokenId>(result.p_m.argmax());
  return std::move(result.p_m);
}

void CacheLmScorer::observe(std::span<const TokenId> prefix, TokenId token) {
  model_.push(prefix, model_.options().cache_predicted && last_argmax_ ? *last_argmax_ : token);
}

}  // namespace artk
