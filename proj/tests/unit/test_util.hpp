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

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "artk/core/types.hpp"

namespace artk::testing {

/// Small seeded value generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin() { return index(0, 1) == 1; }

  DenseVector gaussian(std::size_t dim) {
    std::normal_distribution<float> normal(0.0f, 1.0f);
    DenseVector v(dim);
    for (auto& x : v) x = normal(rng_);
    return v;
  }
  DenseVector unit(std::size_t dim) {
    auto v = gaussian(dim);
    double n = 0.0;
    for (const float x : v) n += static_cast<double>(x) * x;
    n = std::sqrt(n);
    for (auto& x : v) x = static_cast<float>(x / n);
    return v;
  }

  /// Strictly positive distribution; `spiky` concentrates mass on a few entries.
  Distribution distribution(std::size_t size, bool spiky = false) {
    std::vector<double> m(size);
    for (auto& x : m) x = spiky ? std::pow(uniform(1e-6, 1.0), 8.0) : uniform(1e-3, 1.0);
    return Distribution::normalized(std::move(m));
  }

  std::vector<double> reals(std::size_t size, double lo, double hi) {
    std::vector<double> v(size);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  std::string word(std::size_t alphabet = 6, std::size_t max_len = 3) {
    std::string s;
    const std::size_t len = index(1, max_len);
    for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<char>('a' + index(0, alphabet - 1)));
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

/// Runs `body(gen, case_index)` for `cases` generated cases.
template <typename Body>
void for_all(std::size_t cases, std::uint64_t seed, Body body) {
  Gen gen(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    SCOPED_TRACE("case " + std::to_string(i));
    body(gen, i);
    if (::testing::Test::HasFatalFailure() || ::testing::Test::HasNonfatalFailure()) return;
  }
}

inline double sum(std::span<const double> v) {
  double s = 0.0;
  for (const double x : v) s += x;
  return s;
}

}  // namespace artk::testing
