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

#include "artk/sparse_index/inverted_index.hpp"

#include <algorithm>
#include <fstream>

#include "artk/core/error.hpp"
#include "artk/core/text.hpp"
#include "artk/dense_index/container.hpp"

namespace artk {

std::vector<std::string> document_terms(const Document& document) {
  auto terms = analyze(document.title);
  const auto body = analyze(document.text);
  terms.insert(terms.end(), body.begin(), body.end());
  return terms;
}

InvertedIndex InvertedIndex::build(std::span<const Document> documents) {
  require(documents.size() <= UINT32_MAX, ErrorCode::kInvalidArgument, "too many documents");
  InvertedIndex index;
  index.documents_.assign(documents.begin(), documents.end());
  for (std::uint32_t doc = 0; doc < documents.size(); ++doc) {
    const auto terms = document_terms(documents[doc]);
    index.lengths_.push_back(static_cast<std::uint32_t>(terms.size()));
    std::map<std::string, std::uint32_t> counts;
    for (const auto& t : terms) ++counts[t];
    // Documents are visited in order, so each list stays sorted.
    for (const auto& [term, tf] : counts) index.postings_[term].push_back({doc, tf});
  }
  index.finish();
  return index;
}

void InvertedIndex::finish() {
  forward_.assign(documents_.size(), {});
  for (const auto& [term, list] : postings_) {
    for (const auto& p : list) forward_[p.doc].push_back(term);
  }
  double total = 0.0;
  for (const auto len : lengths_) total += len;
  avgdl_ = lengths_.empty() ? 0.0 : total / static_cast<double>(lengths_.size());
  ids_.clear();
  for (std::uint32_t doc = 0; doc < documents_.size(); ++doc) ids_.emplace(documents_[doc].id, doc);
}

std::uint32_t InvertedIndex::doc_length(std::uint32_t doc) const {
  require(doc < lengths_.size(), ErrorCode::kNotFound, "unknown document " + std::to_string(doc));
  return lengths_[doc];
}

std::size_t InvertedIndex::df(const std::string& term) const { return postings(term).size(); }

std::uint32_t InvertedIndex::tf(const std::string& term, std::uint32_t doc) const {
  const auto list = postings(term);
  const auto it = std::lower_bound(list.begin(), list.end(), doc,
                                   [](const Posting& p, std::uint32_t d) { return p.doc < d; });
  return it != list.end() && it->doc == doc ? it->tf : 0;
}

std::span<const Posting> InvertedIndex::postings(const std::string& term) const {
  const auto it = postings_.find(term);
  if (it == postings_.end()) return {};
  return it->second;
}

const Document& InvertedIndex::document(std::uint32_t doc) const {
  require(doc < documents_.size(), ErrorCode::kNotFound, "unknown document " + std::to_string(doc));
  return documents_[doc];
}

std::optional<std::uint32_t> InvertedIndex::find(const std::string& id) const {
  const auto it = ids_.find(id);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::string> InvertedIndex::doc_terms(std::uint32_t doc) const {
  require(doc < forward_.size(), ErrorCode::kNotFound, "unknown document " + std::to_string(doc));
  return forward_[doc];
}

std::vector<std::uint32_t> InvertedIndex::docs_with_entity(const std::string& entity) const {
  std::vector<std::uint32_t> docs;
  for (std::uint32_t doc = 0; doc < documents_.size(); ++doc) {
    const auto& e = documents_[doc].entities;
    if (std::find(e.begin(), e.end(), entity) != e.end()) docs.push_back(doc);
  }
  return docs;
}

void InvertedIndex::save(std::ostream& out) const {
  BinaryWriter w(out);
  w.header();
  w.u8(kKindTag);
  w.u64(documents_.size());
  for (std::size_t doc = 0; doc < documents_.size(); ++doc) {
    const auto& d = documents_[doc];
    w.blob(d.id);
    w.blob(d.title);
    w.blob(d.text);
    w.u32(static_cast<std::uint32_t>(d.entities.size()));
    for (const auto& e : d.entities) w.blob(e);
    w.u32(lengths_[doc]);
  }
  w.u64(postings_.size());
  for (const auto& [term, list] : postings_) {
    w.blob(term);
    w.u32(static_cast<std::uint32_t>(list.size()));
    for (const auto& p : list) {
      w.u32(p.doc);
      w.u32(p.tf);
    }
  }
}

void InvertedIndex::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  require(out.is_open(), ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  save(out);
}

InvertedIndex InvertedIndex::load(std::istream& in) {
  BinaryReader r(in);
  r.header();
  require(r.u8() == kKindTag, ErrorCode::kFormat, "container does not hold an inverted index");
  InvertedIndex index;
  const auto docs = r.u64();
  for (std::uint64_t i = 0; i < docs; ++i) {
    Document d;
    d.id = r.blob();
    d.title = r.blob();
    d.text = r.blob();
    const auto entities = r.u32();
    for (std::uint32_t e = 0; e < entities; ++e) d.entities.push_back(r.blob());
    index.documents_.push_back(std::move(d));
    index.lengths_.push_back(r.u32());
  }
  const auto terms = r.u64();
  for (std::uint64_t i = 0; i < terms; ++i) {
    auto term = r.blob();
    const auto n = r.u32();
    std::vector<Posting> list(n);
    for (auto& p : list) {
      p.doc = r.u32();
      p.tf = r.u32();
      require(p.doc < docs, ErrorCode::kFormat, "posting refers to a missing document");
    }
    index.postings_.emplace(std::move(term), std::move(list));
  }
  index.finish();
  return index;
}

InvertedIndex InvertedIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.is_open(), ErrorCode::kIo, "cannot open " + path.string());
  return load(in);
}

}  // namespace artk
