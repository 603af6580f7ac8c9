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

#include "artk/kb/dynamic_cache.hpp"

#include "artk/core/error.hpp"

namespace artk {

DynamicCache::DynamicCache(std::size_t capacity) : capacity_(capacity) {
  require(capacity >= 1, ErrorCode::kInvalidArgument, "cache capacity must be >= 1");
}

void DynamicCache::push(DenseVector key, TokenId token) {
  if (!entries_.empty()) {
    require(key.size() == entries_.front().key.size(), ErrorCode::kDimensionMismatch,
            "cache key dimension changed");
  }
  entries_.push_front({std::move(key), token});
  while (entries_.size() > capacity_) entries_.pop_back();
}

void cache_push(DynamicCache& cache, DenseVector key, TokenId token) {
  cache.push(std::move(key), token);
}

std::vector<CacheEntry> cache_entries(const DynamicCache& cache) {
  return {cache.entries().begin(), cache.entries().end()};
}

}  // namespace artk
