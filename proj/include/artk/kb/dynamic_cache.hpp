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

#include <deque>
#include <vector>

#include "artk/core/types.hpp"

namespace artk {

struct CacheEntry {
  DenseVector key;
  TokenId token = 0;

  friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

/// Bounded recency buffer. Oldest entries are evicted first; single writer.
class DynamicCache {
 public:
  /// capacity must be >= 1.
  explicit DynamicCache(std::size_t capacity);

  void push(DenseVector key, TokenId token);
  void clear() noexcept { entries_.clear(); }

  /// Newest first.
  const std::deque<CacheEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::size_t capacity_;
  std::deque<CacheEntry> entries_;
};

void cache_push(DynamicCache& cache, DenseVector key, TokenId token);
std::vector<CacheEntry> cache_entries(const DynamicCache& cache);

}  // namespace artk
