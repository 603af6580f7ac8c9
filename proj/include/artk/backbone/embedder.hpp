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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artk/backbone/vocabulary.hpp"
#include "artk/core/types.hpp"

namespace artk {

/// Unit vector drawn from N(0, I) seeded by (seed, token); pure function.
DenseVector seeded_unit_vector(std::uint64_t seed, std::string_view token, std::size_t dim);

/// L2-normalizes in double precision. The zero vector is returned unchanged.
DenseVector normalize(std::span<const double> v);
DenseVector normalize(std::span<const float> v);

struct PrefixEmbedderOptions {
  std::size_t dim = 1024;
  double decay = 0.7;
  std::uint64_t seed = 0;
};

/// Stand-in for a trained LM's prefix representation: a decayed sum of
/// seeded random token vectors,
///
///   key = normalize( sum_i decay^(len - i) * v(prefix_i) ),  i = 1..len
///
/// so the most recent token has weight 1 and prefixes sharing a long suffix
/// land close together.
class PrefixEmbedder {
 public:
  PrefixEmbedder(const Vocabulary& vocab, const PrefixEmbedderOptions& options);

  std::size_t dim() const noexcept { return options_.dim; }
  double decay() const noexcept { return options_.decay; }
  std::uint64_t seed() const noexcept { return options_.seed; }
  std::size_t vocab_size() const noexcept { return table_.size() / options_.dim; }

  std::span<const float> token_vector(TokenId id) const;

  /// Throws Error(kEmptyInput) for an empty prefix.
  DenseVector embed(std::span<const TokenId> prefix) const;
  std::vector<double> embed_unnormalized(std::span<const TokenId> prefix) const;

 private:
  PrefixEmbedderOptions options_;
  std::vector<float> table_;  // vocab_size x dim, row-major
};

/// Order-free bag-of-words encoder over analyzed terms; the dense encoder
/// used for passages and questions.
class BagOfWordsEmbedder {
 public:
  BagOfWordsEmbedder(std::size_t dim, std::uint64_t seed) : dim_(dim), seed_(seed) {}

  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Returns the zero vector when no term survives analysis.
  DenseVector embed(std::span<const std::string> tokens) const;

 private:
  std::size_t dim_;
  std::uint64_t seed_;
};

}  // namespace artk
