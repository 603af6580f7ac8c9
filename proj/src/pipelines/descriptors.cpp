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

#include "artk/pipelines/descriptors.hpp"

#include <algorithm>

#include "artk/core/error.hpp"

namespace artk {
namespace {

using FP = FusionPoint;
using FM = FusionMechanism;
using KS = KbSource;

const std::vector<PipelineDescriptor>& registry() {
  static const std::vector<PipelineDescriptor> kRegistry = {
      {"base", "n-gram LM", FP::kNone, FM::kNone, KS::kExternal, "No fusion", "", "None", "None",
       "None", "None"},
      {"knn-lm", "k-NN LM", FP::kVeryLate, FM::kConvex, KS::kTrainTime, "Very late",
       "Static convex combination", "Train-time", "Prefix embd., L2", "Target word", "Softmax"},
      {"cache-lm", "Continuous Cache LM", FP::kVeryLate, FM::kConvex, KS::kDynamic, "Very late",
       "Static convex combination", "Dynamic", "Prefix embd., inner product", "Target word",
       "Softmax"},
      {"gated-lm", "Dynamic Gating LM", FP::kLate, FM::kDynamicGate, KS::kTrainTime, "Late",
       "Dyn. convex combination", "Train-time", "Prefix encoding, inner product", "Target word",
       "Softmax sum"},
      {"kg-lm", "Knowledge Graph LM", FP::kIntermediate, FM::kMasking, KS::kExternal,
       "Intermediate", "Constraints", "External", "Entity+relation Discrete struct.",
       "Matching entity", "None"},
      {"dpr-qa", "Dense Passage Retrieval", FP::kEarly, FM::kPriming, KS::kExternal, "Early",
       "Input", "External", "Passage embd., inner product", "Passages", "None"},
      {"nn-qa", "Nearest Neighbour QA", FP::kNone, FM::kNone, KS::kTrainTime, "No model", "",
       "Train-time", "Passage embd., inner product", "Answers", "None"},
      // Subgraph creation feeds the retrieved graph in with the input.
      {"pullnet", "PullNet", FP::kEarly, FM::kNone, KS::kMultiple, "Subgraph creation", "",
       "Multiple External", "Entities", "Docs and Facts", "Iterative join"},
      {"fakta", "FAKTA", FP::kEarly, FM::kPriming, KS::kExternal, "Early", "Input",
       "External Online", "Condensed query", "Docs", "Re-ranking, Filtering"},
      {"wizards", "Wizards of Wikipedia", FP::kIntermediate, FM::kAttentionSum, KS::kExternal,
       "Intermediate", "Addition", "External", "Context+topic, inverted index", "Passages",
       "Attention (topic)"},
  };
  return kRegistry;
}

}  // namespace

const std::vector<std::string>& pipeline_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& d : registry()) names.push_back(d.name);
    return names;
  }();
  return kNames;
}

PipelineDescriptor descriptor_for(std::string_view name) {
  const auto& all = registry();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const PipelineDescriptor& d) { return d.name == name; });
  require(it != all.end(), ErrorCode::kNotFound, "unknown pipeline '" + std::string(name) + "'");
  return *it;
}

}  // namespace artk
