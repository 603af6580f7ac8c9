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

#include "artk/pipelines/pullnet.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "artk/core/text.hpp"

namespace artk {
namespace {

using TermSet = std::set<std::string>;

TermSet overlap(const TermSet& question, std::span<const std::string> terms) {
  TermSet out;
  for (const auto& t : terms) {
    if (question.count(t) > 0) out.insert(t);
  }
  return out;
}

TermSet merged(TermSet a, const TermSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<std::string> relation_terms(const std::string& relation) {
  std::string spaced = relation;
  std::replace_if(spaced.begin(), spaced.end(), [](char c) { return c == '_' || c == '-'; }, ' ');
  return analyze(spaced);
}

PullNetResult pullnet_lite(std::span<const std::string> question_entities,
                           std::span<const std::string> question_terms, const TripleStore& store,
                           const InvertedIndex& docs, const PullNetOptions& options) {
  PullNetResult result;
  const auto q_terms = analyze(question_terms);
  const TermSet question(q_terms.begin(), q_terms.end());
  const std::set<std::string> seeds(question_entities.begin(), question_entities.end());

  std::map<std::string, TermSet> cover;
  for (const auto& e : seeds) cover[e] = {};
  result.node_sets.push_back(seeds);
  auto& events = result.qa.trace.events;
  if (seeds.empty()) {
    events.push_back({"pullnet", "no linked question entities"});
    return result;
  }

  const double n = static_cast<double>(docs.doc_count());
  auto idf = [&](const std::string& term) {
    return std::log((n + 1.0) / (static_cast<double>(docs.df(term)) + 1.0));
  };

  std::vector<std::string> frontier(seeds.begin(), seeds.end());
  for (std::size_t t = 1; t <= options.iterations; ++t) {
    std::set<std::string> added;
    auto reach = [&](const std::string& node, const TermSet& path) {
      const auto it = cover.find(node);
      if (it == cover.end()) {
        cover.emplace(node, path);
        added.insert(node);
      } else if (path.size() > it->second.size()) {
        it->second = path;
      }
    };

    for (const auto& e : frontier) {
      // Facts with e as subject or object.
      auto facts = store.outgoing(e);
      const auto in = store.incoming(e);
      facts.insert(facts.end(), in.begin(), in.end());
      std::sort(facts.begin(), facts.end());
      facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
      std::vector<std::pair<std::size_t, Triple>> ranked_facts;
      for (const auto& f : facts) {
        ranked_facts.emplace_back(overlap(question, relation_terms(f.relation)).size(), f);
      }
      std::stable_sort(ranked_facts.begin(), ranked_facts.end(),
                       [](const auto& a, const auto& b) { return a.first > b.first; });
      if (ranked_facts.size() > options.fanout) ranked_facts.resize(options.fanout);
      for (const auto& [score, f] : ranked_facts) {
        const auto& other = f.parent == e ? f.entity : f.parent;
        reach(other, merged(cover[e], overlap(question, relation_terms(f.relation))));
        result.qa.trace.candidates.push_back({std::nullopt, f, static_cast<double>(score)});
      }

      // Documents linked to e.
      std::vector<std::pair<double, std::uint32_t>> ranked_docs;
      for (const auto doc : docs.docs_with_entity(e)) {
        double score = 0.0;
        for (const auto& term : overlap(question, docs.doc_terms(doc))) score += idf(term);
        ranked_docs.emplace_back(score, doc);
      }
      std::stable_sort(ranked_docs.begin(), ranked_docs.end(),
                       [](const auto& a, const auto& b) { return a.first > b.first; });
      if (ranked_docs.size() > options.fanout) ranked_docs.resize(options.fanout);
      for (const auto& [score, doc] : ranked_docs) {
        const auto& d = docs.document(doc);
        const auto path = merged(cover[e], overlap(question, docs.doc_terms(doc)));
        for (const auto& x : d.entities) {
          if (x != e) reach(x, path);
        }
        result.qa.trace.candidates.push_back({std::nullopt, DocRef{doc, d.id}, score});
      }
    }

    std::set<std::string> nodes;
    for (const auto& [node, path] : cover) nodes.insert(node);
    result.node_sets.push_back(nodes);
    events.push_back({"pullnet", "iteration " + std::to_string(t) + ": " +
                                     std::to_string(added.size()) + " new nodes, " +
                                     std::to_string(nodes.size()) + " total"});
    frontier.assign(added.begin(), added.end());
  }

  const std::string* best = nullptr;
  std::size_t best_cover = 0;
  for (const auto& [node, path] : cover) {
    if (seeds.count(node) > 0) continue;
    if (path.size() > best_cover) {  // map order: ties keep the smaller name
      best = &node;
      best_cover = path.size();
    }
  }
  if (best != nullptr) {
    result.qa.answer = *best;
    result.qa.scores.selection = static_cast<double>(best_cover);
  } else {
    events.push_back({"pullnet", "no entity covers a question term"});
  }
  return result;
}

}  // namespace artk
