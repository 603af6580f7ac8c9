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

#include <set>
#include <span>
#include <string>
#include <vector>

#include "artk/kb/triple_store.hpp"
#include "artk/pipelines/qa.hpp"
#include "artk/sparse_index/inverted_index.hpp"

namespace artk {

struct PullNetOptions {
  std::size_t iterations = 2;  // T
  std::size_t fanout = 3;
};

struct PullNetResult {
  QaResult qa;
  /// C_0 .. C_T.
  std::vector<std::set<std::string>> node_sets;
};

/// Relation names split on '_', '-' and whitespace, then analyzed.
std::vector<std::string> relation_terms(const std::string& relation);

/// Iterative subgraph pull.
///
/// C_0 holds the question entities. Each iteration expands the nodes added in
/// the previous one: facts with the node as subject or object are ranked by
/// how many question terms their relation name contains, documents linked to
/// the node by the summed IDF of the question terms they contain; the top
/// `fanout` of each are pulled in with the entities they reach. Every node
/// remembers the question terms covered along the path that reached it
/// first-or-best. The answer is the non-question entity of C_T covering the
/// most question terms (ties by name); no coverage at all means no answer.
PullNetResult pullnet_lite(std::span<const std::string> question_entities,
                           std::span<const std::string> question_terms, const TripleStore& store,
                           const InvertedIndex& docs, const PullNetOptions& options = {});

}  // namespace artk
