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

#include "artk/kb/triple_store.hpp"

#include <fstream>
#include <istream>

#include "artk/core/error.hpp"

namespace artk {
namespace {

std::vector<Triple> filtered(const std::set<Triple>& pool, const TriplePattern& pattern) {
  std::vector<Triple> out;
  for (const auto& t : pool) {
    if (pattern.matches(t)) out.push_back(t);
  }
  return out;
}

}  // namespace

bool TripleStore::insert(const Triple& triple) {
  require(!triple.parent.empty() && !triple.relation.empty() && !triple.entity.empty(),
          ErrorCode::kInvalidArgument, "triple slots must be non-empty");
  if (!triples_.insert(triple).second) return false;
  entities_.insert(triple.parent);
  entities_.insert(triple.entity);
  relations_.insert(triple.relation);
  by_parent_[triple.parent].insert(triple);
  by_parent_relation_[{triple.parent, triple.relation}].insert(triple);
  by_entity_[triple.entity].insert(triple);
  return true;
}

std::vector<Triple> TripleStore::match(const TriplePattern& pattern) const {
  require(pattern.bound_slots() >= 1, ErrorCode::kInvalidArgument,
          "pattern must bind at least one slot");
  static const std::set<Triple> kNone;
  auto pick = [](const auto& map, const auto& key) -> const std::set<Triple>& {
    const auto it = map.find(key);
    return it == map.end() ? kNone : it->second;
  };
  if (pattern.parent && pattern.relation) {
    return filtered(pick(by_parent_relation_, std::make_pair(*pattern.parent, *pattern.relation)),
                    pattern);
  }
  if (pattern.parent) return filtered(pick(by_parent_, *pattern.parent), pattern);
  if (pattern.entity) return filtered(pick(by_entity_, *pattern.entity), pattern);
  return filtered(triples_, pattern);
}

std::vector<Triple> TripleStore::outgoing(const std::string& parent) const {
  const auto it = by_parent_.find(parent);
  if (it == by_parent_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::vector<Triple> TripleStore::incoming(const std::string& entity) const {
  const auto it = by_entity_.find(entity);
  if (it == by_entity_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

TripleStore TripleStore::load_tsv(std::istream& in) {
  TripleStore store;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto a = line.find('\t');
    const auto b = a == std::string::npos ? a : line.find('\t', a + 1);
    require(b != std::string::npos && line.find('\t', b + 1) == std::string::npos,
            ErrorCode::kFormat, "line " + std::to_string(number) + ": expected 3 tab-separated fields");
    const Triple t{line.substr(0, a), line.substr(a + 1, b - a - 1), line.substr(b + 1)};
    require(!t.parent.empty() && !t.relation.empty() && !t.entity.empty(), ErrorCode::kFormat,
            "line " + std::to_string(number) + ": empty field");
    store.insert(t);
  }
  return store;
}

TripleStore TripleStore::load_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.is_open(), ErrorCode::kIo, "cannot open " + path.string());
  return load_tsv(in);
}

std::vector<Triple> kg_match(const TripleStore& store, const TriplePattern& pattern) {
  return store.match(pattern);
}

LocalGraph kg_expand_local(const LocalGraph& local, const TripleStore& store,
                           const std::string& entity) {
  require(store.has_entity(entity), ErrorCode::kNotFound, "unknown entity '" + entity + "'");
  LocalGraph out = local;
  for (const auto& t : store.outgoing(entity)) out.graph_.insert(t);
  return out;
}

std::vector<Candidate> TripleRetriever::retrieve(const Key& key) const {
  std::vector<Candidate> out;
  for (const auto& t : store_->match(key.pattern())) out.push_back({key, t, 1.0});
  return out;
}

}  // namespace artk
