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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artk/backbone/corpus.hpp"

namespace artk {

struct Posting {
  std::uint32_t doc = 0;
  std::uint32_t tf = 0;

  friend bool operator==(const Posting&, const Posting&) = default;
};

/// Term -> postings map over analyzed title and body terms.
///
/// Documents are addressed by their position in the build input. Posting
/// lists are sorted by document and duplicate-free. The source documents are
/// kept so pipelines can render passages and titles.
class InvertedIndex {
 public:
  /// Document tag written after the container header.
  static constexpr std::uint8_t kKindTag = 0x53;

  static InvertedIndex build(std::span<const Document> documents);

  std::size_t doc_count() const noexcept { return documents_.size(); }
  double avgdl() const noexcept { return avgdl_; }
  std::uint32_t doc_length(std::uint32_t doc) const;
  std::size_t df(const std::string& term) const;
  std::uint32_t tf(const std::string& term, std::uint32_t doc) const;
  std::span<const Posting> postings(const std::string& term) const;
  const std::map<std::string, std::vector<Posting>>& terms() const noexcept { return postings_; }

  const Document& document(std::uint32_t doc) const;
  std::optional<std::uint32_t> find(const std::string& id) const;
  /// Sorted distinct analyzed terms of one document.
  std::span<const std::string> doc_terms(std::uint32_t doc) const;
  /// Documents linked to an entity id through their entity annotations.
  std::vector<std::uint32_t> docs_with_entity(const std::string& entity) const;

  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static InvertedIndex load(std::istream& in);
  static InvertedIndex load(const std::filesystem::path& path);

 private:
  void finish();

  std::vector<Document> documents_;
  std::vector<std::uint32_t> lengths_;
  double avgdl_ = 0.0;
  std::map<std::string, std::vector<Posting>> postings_;
  std::vector<std::vector<std::string>> forward_;
  std::map<std::string, std::uint32_t> ids_;
};

/// Analyzed terms of title followed by body.
std::vector<std::string> document_terms(const Document& document);

}  // namespace artk
