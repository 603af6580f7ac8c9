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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "artk/core/descriptor.hpp"
#include "artk/eval/config.hpp"

namespace artk {

nlohmann::ordered_json to_json(const PipelineDescriptor& descriptor);

/// Perplexity report for base, knn-lm, cache-lm or gated-lm. The LM is
/// trained on `train` (or on `corpus` itself when no train path is set) and
/// evaluated document by document on `corpus`. gated-lm fits its gate on
/// `dev` when given, else runs with a zero gate.
nlohmann::ordered_json eval_lm_report(const RunConfig& config);

/// Exact-match report for nn-qa (train QA pairs as the KB) or dpr-qa
/// (`docs` as the passage collection) over the QA pairs in `corpus`.
nlohmann::ordered_json eval_qa_report(const RunConfig& config);

/// Entry point of the artk executable. Diagnostics go to `err` as a single
/// line; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artk
