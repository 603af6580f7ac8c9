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

#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "artk/core/pipeline.hpp"
#include "artk/sparse_index/inverted_index.hpp"
#include "artk/sparse_index/retrieval.hpp"

namespace artk {

inline constexpr std::size_t kDefaultKnowledgePool = 7;

struct DialogueExample {
  std::vector<std::vector<std::string>> history;  // utterances, oldest first
  std::vector<std::string> topic;
};

/// Reads JSONL {"history":[utterance, ...],"topic":string}.
std::vector<DialogueExample> read_dialogues(std::istream& in);

/// Dense TF-IDF space over the index vocabulary (one coordinate per term, in
/// term order). Vectors are L2-normalized; text without indexed terms maps to
/// the zero vector. Passage vectors encode title followed by the first
/// paragraph.
class PassageSpace {
 public:
  explicit PassageSpace(std::shared_ptr<const InvertedIndex> index);

  std::size_t dim() const noexcept { return terms_.size(); }
  std::vector<double> encode(std::span<const std::string> tokens) const;
  const std::vector<double>& passage(std::uint32_t doc) const;
  const InvertedIndex& index() const noexcept { return *index_; }

 private:
  std::shared_ptr<const InvertedIndex> index_;
  std::map<std::string, std::size_t> terms_;
  std::vector<std::vector<double>> passages_;
};

/// Term-wise max of the TF-IDF vectors of the last two utterances and the topic.
TermVector wizards_key(std::span<const std::vector<std::string>> history,
                       std::span<const std::string> topic, const InvertedIndex& index);

struct WizardsResult {
  std::vector<double> artefact;
  std::vector<ScoredDoc> chosen;
  Trace trace;
};

/// Lookup of the top `pool` passages for the dialogue key, then the
/// topic-weighted sum of their vectors. No passage gives the zero vector and
/// a trace event. Throws on an empty history.
WizardsResult wizards_select(std::span<const std::vector<std::string>> history,
                             std::span<const std::string> topic,
                             std::shared_ptr<const PassageSpace> space,
                             std::size_t pool = kDefaultKnowledgePool);

}  // namespace artk
