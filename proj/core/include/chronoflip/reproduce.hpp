// Copyright 2026 The chronoflip developers
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

#include "chronoflip/sdp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chronoflip {

/// One end-to-end reproduction check. `measured` is the worst observed value
/// and must not exceed `threshold` for the criterion to pass.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
  double wall_ms = 0.0;
};

/// Run all reproduction criteria. The SDP options control the error-bound
/// solve; everything else is deterministic given the seed. `extra_trials`
/// raises the number of random instances per randomized criterion; it never
/// drops below the pinned defaults.
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed,
                                              const SdpOptions& sdp_options = {},
                                              long extra_trials = 0);

/// Subset selected by 1-based indices (empty = all).
std::vector<CriterionResult> run_criteria(const std::vector<int>& indices,
                                          std::uint64_t seed,
                                          const SdpOptions& sdp_options = {},
                                          long extra_trials = 0);

}  // namespace chronoflip
