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

#include <exception>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artk/core/descriptor.hpp"
#include "artk/core/error.hpp"
#include "artk/core/types.hpp"

namespace artk {

/// Free-form events a stage reports while running (fallbacks, clamps, ...).
using Notes = std::vector<std::string>;

class Encoder {
 public:
  virtual ~Encoder() = default;
  virtual std::string name() const = 0;
  virtual KeyKind key_kind() const = 0;
  virtual Key encode(const Query& query) const = 0;
};

/// Owns (or references) the knowledge base it searches.
class Retriever {
 public:
  virtual ~Retriever() = default;
  virtual std::string name() const = 0;
  virtual KeyKind key_kind() const = 0;
  virtual std::vector<Candidate> retrieve(const Key& key) const = 0;
};

/// Receives the key and query alongside the candidates; most aggregators
/// only look at the candidates.
class Aggregator {
 public:
  virtual ~Aggregator() = default;
  virtual std::string name() const = 0;
  virtual Artefact aggregate(std::span<const Candidate> candidates, const Key& key,
                             const Query& query, Notes& notes) const = 0;
};

template <typename Output>
class Model {
 public:
  virtual ~Model() = default;
  virtual std::string name() const = 0;
  virtual Output predict(const Query& query, const Artefact& artefact, Notes& notes) const = 0;
};

struct TraceEvent {
  std::string stage;
  std::string message;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Everything a run retrieved and produced, kept for explainability.
struct Trace {
  Key key;
  std::vector<Candidate> candidates;
  Artefact artefact;
  std::vector<TraceEvent> events;
};

/// Deterministic text dump (fixed field order, 17 significant digits).
std::string to_string(const Trace& trace);

template <typename Output>
struct PipelineRun {
  Output output;
  Trace trace;
};

namespace detail {

template <typename F>
auto run_stage(const std::string& stage, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(stage, e.code(), e.what());
  } catch (const std::exception& e) {
    throw StageError(stage, ErrorCode::kInvalidArgument, e.what());
  }
}

void append_notes(std::vector<TraceEvent>& events, const std::string& stage, Notes& notes);

}  // namespace detail

/// Encoder -> Retriever -> Aggregator -> Model, immutable after assembly.
///
/// Key kinds of the encoder and retriever are checked when the pipeline is
/// assembled and again on every run. Stage failures are re-raised as
/// StageError tagged with "<role> '<stage name>'".
template <typename Output>
class Pipeline {
 public:
  Pipeline(PipelineDescriptor descriptor, std::shared_ptr<const Encoder> encoder,
           std::shared_ptr<const Retriever> retriever,
           std::shared_ptr<const Aggregator> aggregator,
           std::shared_ptr<const Model<Output>> model)
      : descriptor_(std::move(descriptor)),
        encoder_(std::move(encoder)),
        retriever_(std::move(retriever)),
        aggregator_(std::move(aggregator)),
        model_(std::move(model)) {
    require(encoder_ && retriever_ && aggregator_ && model_, ErrorCode::kInvalidArgument,
            "pipeline stages must all be set");
    require(encoder_->key_kind() == retriever_->key_kind(), ErrorCode::kStageMismatch,
            "encoder '" + encoder_->name() + "' produces " +
                std::string(to_string(encoder_->key_kind())) + " keys but retriever '" +
                retriever_->name() + "' expects " +
                std::string(to_string(retriever_->key_kind())));
  }

  PipelineRun<Output> run(const Query& query) const {
    PipelineRun<Output> result{Output{}, Trace{}};
    Trace& trace = result.trace;
    const std::string encoder_tag = "encoder '" + encoder_->name() + "'";
    const std::string retriever_tag = "retriever '" + retriever_->name() + "'";
    const std::string aggregator_tag = "aggregator '" + aggregator_->name() + "'";
    const std::string model_tag = "model '" + model_->name() + "'";

    trace.key = detail::run_stage(encoder_tag, [&] { return encoder_->encode(query); });
    if (trace.key.kind() != retriever_->key_kind()) {
      throw StageError(retriever_tag, ErrorCode::kStageMismatch,
                       "received a " + std::string(to_string(trace.key.kind())) + " key");
    }
    trace.candidates =
        detail::run_stage(retriever_tag, [&] { return retriever_->retrieve(trace.key); });

    Notes notes;
    trace.artefact = detail::run_stage(aggregator_tag, [&] {
      return aggregator_->aggregate(trace.candidates, trace.key, query, notes);
    });
    detail::append_notes(trace.events, aggregator_->name(), notes);

    result.output =
        detail::run_stage(model_tag, [&] { return model_->predict(query, trace.artefact, notes); });
    detail::append_notes(trace.events, model_->name(), notes);
    return result;
  }

  const PipelineDescriptor& describe() const noexcept { return descriptor_; }

  /// Same pipeline with the aggregator swapped; candidates are unaffected.
  Pipeline with_aggregator(std::shared_ptr<const Aggregator> aggregator) const {
    return Pipeline(descriptor_, encoder_, retriever_, std::move(aggregator), model_);
  }

  const Encoder& encoder() const noexcept { return *encoder_; }
  const Retriever& retriever() const noexcept { return *retriever_; }
  const Aggregator& aggregator() const noexcept { return *aggregator_; }
  const Model<Output>& model() const noexcept { return *model_; }

 private:
  PipelineDescriptor descriptor_;
  std::shared_ptr<const Encoder> encoder_;
  std::shared_ptr<const Retriever> retriever_;
  std::shared_ptr<const Aggregator> aggregator_;
  std::shared_ptr<const Model<Output>> model_;
};

template <typename Output>
PipelineRun<Output> run_pipeline(const Pipeline<Output>& pipeline, const Query& query) {
  return pipeline.run(query);
}

template <typename Output>
const PipelineDescriptor& describe(const Pipeline<Output>& pipeline) {
  return pipeline.describe();
}

/// Hands candidates through unchanged as text blocks / empty artefact.
class PassThroughAggregator final : public Aggregator {
 public:
  std::string name() const override { return "pass-through"; }
  Artefact aggregate(std::span<const Candidate> candidates, const Key& key, const Query& query,
                     Notes& notes) const override;
};

}  // namespace artk
