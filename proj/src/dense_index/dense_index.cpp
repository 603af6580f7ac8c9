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

#include "artk/dense_index/dense_index.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

#include "artk/core/error.hpp"
#include "artk/dense_index/container.hpp"

namespace artk {
namespace {

double dot(std::span<const float> a, std::span<const float> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += static_cast<double>(a[i]) * b[i];
  return sum;
}

double l2(std::span<const float> a, std::span<const float> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

DenseVector unit(std::span<const float> v) {
  double norm2 = 0.0;
  for (const float x : v) norm2 += static_cast<double>(x) * x;
  DenseVector out(v.begin(), v.end());
  if (norm2 > 0.0) {
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : out) x = static_cast<float>(x * inv);
  }
  return out;
}

double similarity(Metric metric, std::span<const float> stored, std::span<const float> query) {
  return metric == Metric::kL2 ? -l2(stored, query) : dot(stored, query);
}

bool ranks_before(const std::pair<double, std::size_t>& a, const std::pair<double, std::size_t>& b) {
  return a.first > b.first || (a.first == b.first && a.second < b.second);
}

void check_key(std::span<const float> key, std::size_t dim, std::size_t count) {
  require(key.size() == dim, ErrorCode::kDimensionMismatch,
          "key has dimension " + std::to_string(key.size()) + ", index expects " +
              std::to_string(dim));
  require(count >= 1, ErrorCode::kInvalidArgument, "neighbour count must be >= 1");
  for (const float x : key) {
    require(std::isfinite(x), ErrorCode::kInvalidArgument, "key contains a non-finite value");
  }
}

}  // namespace

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::kL2: return "l2";
    case Metric::kInnerProduct: return "ip";
    case Metric::kCosine: return "cosine";
  }
  return "unknown";
}

std::optional<Metric> parse_metric(std::string_view text) {
  if (text == "l2") return Metric::kL2;
  if (text == "ip") return Metric::kInnerProduct;
  if (text == "cosine") return Metric::kCosine;
  return std::nullopt;
}

SearchResult brute_force(std::span<const IndexEntry> entries, std::span<const float> key,
                         std::size_t count, Metric metric) {
  require(!entries.empty(), ErrorCode::kEmptyInput, "brute force over an empty entry set");
  const std::size_t dim = entries.front().vector.size();
  check_key(key, dim, count);
  const DenseVector query = metric == Metric::kCosine ? unit(key) : DenseVector(key.begin(), key.end());

  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(entries.size());
  for (std::size_t row = 0; row < entries.size(); ++row) {
    require(entries[row].vector.size() == dim, ErrorCode::kDimensionMismatch,
            "entry " + std::to_string(row) + " has a different dimension");
    const DenseVector stored = metric == Metric::kCosine ? unit(entries[row].vector)
                                                         : entries[row].vector;
    scored.emplace_back(similarity(metric, stored, query), row);
  }
  std::stable_sort(scored.begin(), scored.end(), ranks_before);
  scored.resize(std::min(count, scored.size()));

  SearchResult result;
  for (const auto& [score, row] : scored) result.hits.push_back({row, entries[row].payload, score});
  return result;
}

DenseIndex::DenseIndex(std::size_t dim, Metric metric) : dim_(dim), metric_(metric) {
  require(dim > 0, ErrorCode::kInvalidArgument, "index dimension must be positive");
}

DenseIndex DenseIndex::build(std::span<const IndexEntry> entries, std::size_t dim, Metric metric,
                             bool approximate, std::uint64_t seed) {
  require(!entries.empty(), ErrorCode::kEmptyInput, "cannot build an index from no entries");
  DenseIndex index(dim, metric);
  index.data_.reserve(entries.size() * dim);
  index.payloads_.reserve(entries.size());
  for (const auto& entry : entries) index.add(entry.vector, entry.payload);
  if (approximate) index.build_partitions(seed);
  return index;
}

void DenseIndex::add(std::span<const float> vector, std::string payload) {
  require(vector.size() == dim_, ErrorCode::kDimensionMismatch,
          "vector has dimension " + std::to_string(vector.size()) + ", index expects " +
              std::to_string(dim_));
  if (metric_ == Metric::kCosine) {
    const auto u = unit(vector);
    data_.insert(data_.end(), u.begin(), u.end());
  } else {
    data_.insert(data_.end(), vector.begin(), vector.end());
  }
  payloads_.push_back(std::move(payload));
  partitioned_ = false;
  centroids_.clear();
  lists_.clear();
}

void DenseIndex::build_partitions(std::uint64_t seed, int iterations) {
  require(size() > 0, ErrorCode::kEmptyInput, "cannot partition an empty index");
  const std::size_t n = size();
  const std::size_t cells =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::lround(std::sqrt(n))), 1, n);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  centroids_.assign(cells * dim_, 0.0f);
  for (std::size_t c = 0; c < cells; ++c) {
    const auto v = vector(order[c]);
    std::copy(v.begin(), v.end(), centroids_.begin() + static_cast<std::ptrdiff_t>(c * dim_));
  }

  std::vector<std::size_t> assignment(n, 0);
  auto centroid = [&](std::size_t c) {
    return std::span<const float>(centroids_).subspan(c * dim_, dim_);
  };
  auto assign = [&] {
    for (std::size_t row = 0; row < n; ++row) {
      std::size_t best = 0;
      double best_score = similarity(metric_, centroid(0), vector(row));
      for (std::size_t c = 1; c < cells; ++c) {
        const double s = similarity(metric_, centroid(c), vector(row));
        if (s > best_score) {
          best = c;
          best_score = s;
        }
      }
      assignment[row] = best;
    }
  };

  for (int it = 0; it < iterations; ++it) {
    assign();
    std::vector<double> sums(cells * dim_, 0.0);
    std::vector<std::size_t> sizes(cells, 0);
    for (std::size_t row = 0; row < n; ++row) {
      const auto v = vector(row);
      const std::size_t c = assignment[row];
      ++sizes[c];
      for (std::size_t d = 0; d < dim_; ++d) sums[c * dim_ + d] += v[d];
    }
    for (std::size_t c = 0; c < cells; ++c) {
      if (sizes[c] == 0) continue;  // empty cell keeps its previous centroid
      DenseVector mean(dim_);
      for (std::size_t d = 0; d < dim_; ++d) {
        mean[d] = static_cast<float>(sums[c * dim_ + d] / static_cast<double>(sizes[c]));
      }
      if (metric_ == Metric::kCosine) mean = unit(mean);
      std::copy(mean.begin(), mean.end(), centroids_.begin() + static_cast<std::ptrdiff_t>(c * dim_));
    }
  }
  assign();

  lists_.assign(cells, {});
  for (std::size_t row = 0; row < n; ++row) {
    lists_[assignment[row]].push_back(static_cast<std::uint32_t>(row));
  }
  partitioned_ = true;
}

double DenseIndex::score_row(std::size_t row, std::span<const float> query) const {
  return similarity(metric_, vector(row), query);
}

SearchResult DenseIndex::select(std::vector<std::pair<double, std::size_t>> scored,
                                std::size_t count, bool exact) const {
  const std::size_t keep = std::min(count, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep),
                    scored.end(), ranks_before);
  SearchResult result;
  result.exact = exact;
  result.hits.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    const auto [score, row] = scored[i];
    result.hits.push_back({row, payloads_[row], score});
  }
  return result;
}

SearchResult DenseIndex::knn(std::span<const float> key, std::size_t count,
                             std::size_t probe) const {
  check_key(key, dim_, count);
  require(size() > 0, ErrorCode::kEmptyInput, "search over an empty index");
  const DenseVector query = metric_ == Metric::kCosine ? unit(key) : DenseVector(key.begin(), key.end());

  std::vector<std::pair<double, std::size_t>> scored;
  if (probe == 0 || !partitioned_) {
    scored.reserve(size());
    for (std::size_t row = 0; row < size(); ++row) scored.emplace_back(score_row(row, query), row);
    return select(std::move(scored), count, true);
  }

  const std::size_t cells = lists_.size();
  std::vector<std::pair<double, std::size_t>> ranked_cells;
  ranked_cells.reserve(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    const auto centroid = std::span<const float>(centroids_).subspan(c * dim_, dim_);
    ranked_cells.emplace_back(similarity(metric_, centroid, query), c);
  }
  const std::size_t probed = std::min(probe, cells);
  std::partial_sort(ranked_cells.begin(), ranked_cells.begin() + static_cast<std::ptrdiff_t>(probed),
                    ranked_cells.end(), ranks_before);
  for (std::size_t i = 0; i < probed; ++i) {
    for (const auto row : lists_[ranked_cells[i].second]) {
      scored.emplace_back(score_row(row, query), row);
    }
  }
  // Probing every cell is a full scan.
  return select(std::move(scored), count, probed == cells);
}

SearchResult DenseIndex::knn(const Key& key, std::size_t count, std::size_t probe) const {
  return knn(std::span<const float>(key.dense()), count, probe);
}

std::span<const float> DenseIndex::vector(std::size_t row) const {
  require(row < size(), ErrorCode::kNotFound, "row " + std::to_string(row) + " out of range");
  return std::span<const float>(data_).subspan(row * dim_, dim_);
}

const std::string& DenseIndex::payload(std::size_t row) const {
  require(row < size(), ErrorCode::kNotFound, "row " + std::to_string(row) + " out of range");
  return payloads_[row];
}

void DenseIndex::save(std::ostream& out) const {
  BinaryWriter w(out);
  w.header();
  w.u8(static_cast<std::uint8_t>(metric_));
  w.u32(static_cast<std::uint32_t>(dim_));
  w.u64(size());
  for (const float x : data_) w.f32(x);
  for (const auto& p : payloads_) w.blob(p);
}

void DenseIndex::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  require(out.is_open(), ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  save(out);
}

DenseIndex DenseIndex::load(std::istream& in) {
  BinaryReader r(in);
  r.header();
  const auto tag = r.u8();
  require(tag <= static_cast<std::uint8_t>(Metric::kCosine), ErrorCode::kFormat,
          "unknown metric tag " + std::to_string(tag) + " (not a dense index?)");
  const auto dim = r.u32();
  const auto count = r.u64();
  require(dim > 0, ErrorCode::kFormat, "dense index with zero dimension");

  DenseIndex index(dim, static_cast<Metric>(tag));
  index.data_.resize(count * dim);
  for (auto& x : index.data_) x = r.f32();
  index.payloads_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) index.payloads_.push_back(r.blob());
  return index;
}

DenseIndex DenseIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.is_open(), ErrorCode::kIo, "cannot open " + path.string());
  return load(in);
}

}  // namespace artk
