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

#include "artk/backbone/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "artk/core/error.hpp"
#include "artk/core/text.hpp"

namespace artk {

std::vector<Document> read_documents(std::istream& in) {
  std::vector<Document> documents;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;

    Document doc;
    if (line[first] == '{') {
      nlohmann::json record;
      try {
        record = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::kFormat, "line " + std::to_string(line_no) + ": " + e.what());
      }
      require(record.contains("text") && record["text"].is_string(), ErrorCode::kFormat,
              "line " + std::to_string(line_no) + ": JSONL record needs a string \"text\"");
      doc.text = record["text"].get<std::string>();
      if (record.contains("id")) {
        const auto& id = record["id"];
        doc.id = id.is_string() ? id.get<std::string>() : id.dump();
      } else {
        doc.id = std::to_string(documents.size() + 1);
      }
      if (record.contains("title")) doc.title = record["title"].get<std::string>();
      if (record.contains("entities")) {
        doc.entities = record["entities"].get<std::vector<std::string>>();
      }
    } else {
      doc.id = std::to_string(documents.size() + 1);
      doc.text = line;
    }
    documents.push_back(std::move(doc));
  }
  return documents;
}

std::vector<Document> read_documents(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kIo, "cannot open " + path.string());
  return read_documents(in);
}

void write_documents_jsonl(std::ostream& out, const std::vector<Document>& documents) {
  for (const auto& doc : documents) {
    nlohmann::ordered_json record;
    record["id"] = doc.id;
    if (!doc.title.empty()) record["title"] = doc.title;
    record["text"] = doc.text;
    if (!doc.entities.empty()) record["entities"] = doc.entities;
    out << record.dump() << '\n';
  }
}

std::vector<std::vector<std::string>> tokenize_documents(const std::vector<Document>& documents) {
  std::vector<std::vector<std::string>> out;
  out.reserve(documents.size());
  for (const auto& doc : documents) out.push_back(split_whitespace(doc.text));
  return out;
}

std::string first_paragraph(const std::string& text) {
  const auto newline = text.find('\n');
  return newline == std::string::npos ? text : text.substr(0, newline);
}

}  // namespace artk
