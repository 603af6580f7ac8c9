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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artk/core/types.hpp"

namespace artk {

enum class Metric : std::uint8_t { kL2 = 0, kInnerProduct = 1, kCosine = 2 };

std::string_view to_string(Metric metric);
std::optional<Metric> parse_metric(std::string_view text);

struct IndexEntry {
  DenseVector vector;
  std::string payload;
};

struct SearchHit {
  std::size_t row = 0;
  std::string payload;
  /// Similarity; for L2 this is the negated Euclidean distance so larger is
  /// always better.
  double score = 0.0;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

/// Hits in descending score, ties broken by insertion order.
struct SearchResult {
  std::vector<SearchHit> hits;
  bool exact = true;
};

/// Exhaustive scan over raw entries; the ground truth for index tests.
SearchResult brute_force(std::span<const IndexEntry> entries, std::span<const float> key,
                         std::size_t count, Metric metric);

/// Flat vector store with exact search and an opt-in partitioned mode.
///
/// Cosine indexes store normalized vectors. Approximate mode clusters the
/// vectors into round(sqrt(N)) cells with seeded k-means (10 Lloyd
/// iterations) and scans only the `probe` best cells at query time.
/// Appending invalidates the partitioning; queries fall back to exact search
/// until build_partitions() is called again.
class DenseIndex {
 public:
  DenseIndex(std::size_t dim, Metric metric);

  /// Throws on empty entries or mixed dimensions.
  static DenseIndex build(std::span<const IndexEntry> entries, std::size_t dim, Metric metric,
                          bool approximate = false, std::uint64_t seed = 0);

  void add(std::span<const float> vector, std::string payload);
  void build_partitions(std::uint64_t seed, int iterations = 10);
  bool partitioned() const noexcept { return partitioned_; }
  std::size_t partition_count() const noexcept { return lists_.size(); }

  /// probe == 0 requests exact search. count must be >= 1; count > size()
  /// returns every entry.
  SearchResult knn(std::span<const float> key, std::size_t count, std::size_t probe = 0) const;
  SearchResult knn(const Key& key, std::size_t count, std::size_t probe = 0) const;

  std::size_t dim() const noexcept { return dim_; }
  Metric metric() const noexcept { return metric_; }
  std::size_t size() const noexcept { return payloads_.size(); }
  std::span<const float> vector(std::size_t row) const;
  const std::string& payload(std::size_t row) const;

  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static DenseIndex load(std::istream& in);
  static DenseIndex load(const std::filesystem::path& path);

 private:
  double score_row(std::size_t row, std::span<const float> query) const;
  SearchResult select(std::vector<std::pair<double, std::size_t>> scored, std::size_t count,
                      bool exact) const;

  std::size_t dim_;
  Metric metric_;
  std::vector<float> data_;
  std::vector<std::string> payloads_;

  bool partitioned_ = false;
  std::vector<float> centroids_;
  std::vector<std::vector<std::uint32_t>> lists_;
};

}  // namespace artk
