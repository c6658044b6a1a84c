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

#include <optional>
#include <span>
#include <string_view>

#include "ccpulse/su2.hpp"

namespace ccpulse {

struct CatalogEntry {
  std::string_view key;      // command-line name, e.g. "reduced-cinbb"
  std::string_view display;  // table name, e.g. "reduced CinBB"
};

/// Every buildable sequence, in a stable order.
std::span<const CatalogEntry> catalog_entries();

/// The elementary pulse, the single-error composites, the five CCCPs and the
/// three reduced CCCPs, in the order of the published time-cost table.
std::span<const std::string_view> time_cost_keys();

// Accepts keys and display names, ignoring case.
const CatalogEntry* find_entry(std::string_view name);

/// Builds `key` for `target`. `phi_prime` is only read by "trivial-triple"
/// (defaults to target.phi). Throws InvalidParameter for unknown names;
/// builder domain failures propagate as DomainError.
PulseSequence build_named(std::string_view key, const RotationParams& target,
                          std::optional<double> phi_prime = std::nullopt);

}  // namespace ccpulse
