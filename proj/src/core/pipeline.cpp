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

#include "artk/core/pipeline.hpp"

#include <iomanip>
#include <sstream>

#include "artk/core/text.hpp"

namespace artk {
namespace detail {

void append_notes(std::vector<TraceEvent>& events, const std::string& stage, Notes& notes) {
  for (auto& note : notes) events.push_back(TraceEvent{stage, std::move(note)});
  notes.clear();
}

}  // namespace detail

namespace {

void write_key(std::ostream& out, const Key& key) {
  out << "key " << to_string(key.kind()) << ':';
  switch (key.kind()) {
    case KeyKind::kDense:
      for (const float v : key.dense()) out << ' ' << v;
      break;
    case KeyKind::kTermVector:
      for (const auto& [term, weight] : key.terms().weights()) out << ' ' << term << '=' << weight;
      break;
    case KeyKind::kTriplePattern: {
      const auto& p = key.pattern();
      out << ' ' << p.parent.value_or("?") << ' ' << p.relation.value_or("?") << ' '
          << p.entity.value_or("?");
      break;
    }
  }
  out << '\n';
}

void write_payload(std::ostream& out, const Payload& payload) {
  if (const auto* token = std::get_if<TokenId>(&payload)) {
    out << "token " << *token;
  } else if (const auto* doc = std::get_if<DocRef>(&payload)) {
    out << "doc " << doc->index << ' ' << doc->id;
  } else if (const auto* text = std::get_if<std::string>(&payload)) {
    out << "text " << *text;
  } else {
    const auto& t = std::get<Triple>(payload);
    out << "triple " << t.parent << ' ' << t.relation << ' ' << t.entity;
  }
}

void write_artefact(std::ostream& out, const Artefact& artefact) {
  out << "artefact " << to_string(artefact.kind()) << ':';
  switch (artefact.kind()) {
    case ArtefactKind::kEmpty:
      break;
    case ArtefactKind::kDistribution:
      for (const double p : artefact.as_distribution().probs()) out << ' ' << p;
      break;
    case ArtefactKind::kTextBlocks:
      for (const auto& block : artefact.as_text_blocks()) {
        out << " [" << block.source_id << ' ' << block.score << ' ' << join(block.tokens) << ']';
      }
      break;
    case ArtefactKind::kWeightedVector:
      for (const double v : artefact.as_weighted_vector()) out << ' ' << v;
      break;
    case ArtefactKind::kTripleSet:
      for (const auto& t : artefact.as_triple_set()) {
        out << " (" << t.parent << ' ' << t.relation << ' ' << t.entity << ')';
      }
      break;
  }
  out << '\n';
}

}  // namespace

std::string to_string(const Trace& trace) {
  std::ostringstream out;
  out << std::setprecision(17);
  write_key(out, trace.key);
  out << "candidates " << trace.candidates.size() << '\n';
  for (const auto& candidate : trace.candidates) {
    out << "  ";
    write_payload(out, candidate.value);
    out << " score " << candidate.score << '\n';
  }
  write_artefact(out, trace.artefact);
  for (const auto& event : trace.events) out << "event " << event.stage << ": " << event.message << '\n';
  return out.str();
}

Artefact PassThroughAggregator::aggregate(std::span<const Candidate> candidates, const Key&,
                                          const Query&, Notes&) const {
  if (candidates.empty()) return Artefact{};
  if (std::holds_alternative<Triple>(candidates.front().value)) {
    std::vector<Triple> triples;
    for (const auto& c : candidates) {
      const auto* triple = std::get_if<Triple>(&c.value);
      require(triple != nullptr, ErrorCode::kInvalidArgument, "mixed candidate payload kinds");
      triples.push_back(*triple);
    }
    return Artefact::triple_set(std::move(triples));
  }
  std::vector<TextBlock> blocks;
  for (const auto& c : candidates) {
    TextBlock block;
    block.score = c.score;
    if (const auto* doc = std::get_if<DocRef>(&c.value)) {
      block.source_id = doc->id;
    } else if (const auto* text = std::get_if<std::string>(&c.value)) {
      block.tokens = split_whitespace(*text);
    } else if (const auto* token = std::get_if<TokenId>(&c.value)) {
      block.source_id = std::to_string(*token);
    } else {
      fail(ErrorCode::kInvalidArgument, "mixed candidate payload kinds");
    }
    blocks.push_back(std::move(block));
  }
  return Artefact::text_blocks(std::move(blocks));
}

}  // namespace artk
