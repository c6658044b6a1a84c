// Copyright 2026 The ccpulse Authors
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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ccpulse {

struct AcceptanceOptions {
  unsigned threads = 0;
  std::size_t nogo_resolution = 32;
  std::uint64_t seed = 20120917;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Human-readable summary of what was measured.
  std::string detail;
  double seconds = 0.0;
  /// Wall-time limit counted toward `passed`; 0 means none.
  double budget_seconds = 0.0;
};

inline constexpr int kCriterionCount = 8;

/// Runs criterion `id` in [1, kCriterionCount].
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options = {});

/// "[PASS] 1 Time-cost table reproduction (0.012 s): ..." style line.
std::string format_result_line(const CriterionResult& r);

}  // namespace ccpulse
