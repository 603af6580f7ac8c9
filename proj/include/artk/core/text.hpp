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

namespace artk {

/// Splits on ASCII whitespace; no normalization.
std::vector<std::string> split_whitespace(std::string_view text);

/// Lowercases and trims leading/trailing punctuation. May return an empty string.
std::string normalize_term(std::string_view token);

/// Normalizes every token and drops the ones that become empty.
std::vector<std::string> analyze(std::span<const std::string> tokens);
std::vector<std::string> analyze(std::string_view text);

std::string join(std::span<const std::string> tokens, std::string_view separator = " ");

/// 64-bit FNV-1a. Stable across platforms; used to seed per-token generators.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis = 0xcbf29ce484222325ULL);

}  // namespace artk
