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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "artk/core/pipeline.hpp"
#include "artk/core/types.hpp"

namespace artk {

/// Set of (parent, relation, entity) facts indexed by parent, by
/// (parent, relation) and by entity. The entity set is every parent and
/// object seen; the relation set every relation seen.
class TripleStore {
 public:
  /// Returns false when the triple was already present.
  bool insert(const Triple& triple);
  bool contains(const Triple& triple) const { return triples_.count(triple) > 0; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  const std::set<Triple>& triples() const noexcept { return triples_; }
  const std::set<std::string>& entities() const noexcept { return entities_; }
  const std::set<std::string>& relations() const noexcept { return relations_; }
  bool has_entity(const std::string& e) const { return entities_.count(e) > 0; }

  /// Triples matching every bound slot, sorted. Throws when no slot is bound.
  std::vector<Triple> match(const TriplePattern& pattern) const;
  /// Triples with the given parent, sorted.
  std::vector<Triple> outgoing(const std::string& parent) const;
  /// Triples with the given object, sorted.
  std::vector<Triple> incoming(const std::string& entity) const;

  /// Tab-separated parent, relation, entity per line; '#' starts a comment
  /// line, blank lines are skipped. Throws Error(kFormat) with the line number.
  static TripleStore load_tsv(std::istream& in);
  static TripleStore load_tsv(const std::filesystem::path& path);

 private:
  std::set<Triple> triples_;
  std::set<std::string> entities_;
  std::set<std::string> relations_;
  std::map<std::string, std::set<Triple>> by_parent_;
  std::map<std::pair<std::string, std::string>, std::set<Triple>> by_parent_relation_;
  std::map<std::string, std::set<Triple>> by_entity_;
};

std::vector<Triple> kg_match(const TripleStore& store, const TriplePattern& pattern);

/// Per-sequence subgraph; only grows through kg_expand_local, so it stays a
/// subset of the store it was expanded from.
class LocalGraph {
 public:
  const TripleStore& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return graph_.size(); }
  bool contains(const Triple& t) const { return graph_.contains(t); }

  friend LocalGraph kg_expand_local(const LocalGraph& local, const TripleStore& store,
                                    const std::string& entity);

 private:
  TripleStore graph_;
};

/// local plus every store triple whose parent is `entity`. Throws
/// Error(kNotFound) for an entity the store does not know.
LocalGraph kg_expand_local(const LocalGraph& local, const TripleStore& store,
                           const std::string& entity);

/// Pattern lookup against a store as a pipeline retriever.
class TripleRetriever final : public Retriever {
 public:
  explicit TripleRetriever(std::shared_ptr<const TripleStore> store) : store_(std::move(store)) {}
  std::string name() const override { return "kg-match"; }
  KeyKind key_kind() const override { return KeyKind::kTriplePattern; }
  std::vector<Candidate> retrieve(const Key& key) const override;

 private:
  std::shared_ptr<const TripleStore> store_;
};

}  // namespace artk
