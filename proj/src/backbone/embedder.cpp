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

#include "artk/backbone/embedder.hpp"

#include <cmath>
#include <map>
#include <random>

#include "artk/core/error.hpp"
#include "artk/core/text.hpp"

namespace artk {

DenseVector seeded_unit_vector(std::uint64_t seed, std::string_view token, std::size_t dim) {
  require(dim > 0, ErrorCode::kInvalidArgument, "embedding dimension must be positive");
  std::mt19937_64 rng(fnv1a64(token, 0xcbf29ce484222325ULL ^ (seed * 0x9e3779b97f4a7c15ULL)));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(dim);
  for (auto& x : v) x = gauss(rng);
  return normalize(v);
}

DenseVector normalize(std::span<const double> v) {
  double norm2 = 0.0;
  for (const double x : v) norm2 += x * x;
  DenseVector out(v.size());
  const double inv = norm2 > 0.0 ? 1.0 / std::sqrt(norm2) : 1.0;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<float>(v[i] * inv);
  return out;
}

DenseVector normalize(std::span<const float> v) {
  std::vector<double> wide(v.begin(), v.end());
  return normalize(wide);
}

PrefixEmbedder::PrefixEmbedder(const Vocabulary& vocab, const PrefixEmbedderOptions& options)
    : options_(options) {
  require(options.dim > 0, ErrorCode::kInvalidArgument, "embedding dimension must be positive");
  require(options.decay > 0.0 && options.decay <= 1.0, ErrorCode::kInvalidArgument,
          "decay must lie in (0, 1]");
  table_.reserve(vocab.size() * options.dim);
  for (const auto& token : vocab.tokens()) {
    const auto v = seeded_unit_vector(options.seed, token, options.dim);
    table_.insert(table_.end(), v.begin(), v.end());
  }
}

std::span<const float> PrefixEmbedder::token_vector(TokenId id) const {
  require(id < vocab_size(), ErrorCode::kNotFound, "token id outside embedder vocabulary");
  return std::span<const float>(table_).subspan(static_cast<std::size_t>(id) * options_.dim,
                                                options_.dim);
}

std::vector<double> PrefixEmbedder::embed_unnormalized(std::span<const TokenId> prefix) const {
  require(!prefix.empty(), ErrorCode::kEmptyInput, "cannot embed an empty prefix");
  std::vector<double> sum(options_.dim, 0.0);
  // Horner form: sum <- decay * sum + v(token), oldest token first.
  for (const TokenId id : prefix) {
    const auto v = token_vector(id);
    for (std::size_t d = 0; d < options_.dim; ++d) sum[d] = options_.decay * sum[d] + v[d];
  }
  return sum;
}

DenseVector PrefixEmbedder::embed(std::span<const TokenId> prefix) const {
  return normalize(embed_unnormalized(prefix));
}

DenseVector BagOfWordsEmbedder::embed(std::span<const std::string> tokens) const {
  std::map<std::string, int> tf;
  for (const auto& term : analyze(tokens)) ++tf[term];
  std::vector<double> sum(dim_, 0.0);
  for (const auto& [term, count] : tf) {
    const auto v = seeded_unit_vector(seed_, term, dim_);
    for (std::size_t d = 0; d < dim_; ++d) sum[d] += count * static_cast<double>(v[d]);
  }
  return normalize(sum);
}

}  // namespace artk
