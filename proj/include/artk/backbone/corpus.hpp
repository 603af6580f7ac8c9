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
#include <string>
#include <vector>

namespace artk {

struct Document {
  std::string id;
  std::string title;
  std::string text;
  std::vector<std::string> entities;  // pre-linked entity ids, optional

  friend bool operator==(const Document&, const Document&) = default;
};

/// Reads plain text (one document per line, ids "1", "2", ...) or JSONL
/// ({"id","text"} with optional "title" and "entities"). The format is picked
/// per line: a line starting with '{' is parsed as JSON. Blank lines are skipped.
std::vector<Document> read_documents(std::istream& in);
std::vector<Document> read_documents(const std::filesystem::path& path);

void write_documents_jsonl(std::ostream& out, const std::vector<Document>& documents);

/// Whitespace tokenization of each document's text.
std::vector<std::vector<std::string>> tokenize_documents(const std::vector<Document>& documents);

/// Text up to the first newline.
std::string first_paragraph(const std::string& text);

}  // namespace artk
