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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccpulse/su2.hpp"

namespace ccpulse {

/// A named target -> sequence builder.
struct CompositeBuilder {
  std::string name;
  std::function<PulseSequence(const RotationParams&)> build;
};

/// Structural patterns of outer pulses left in place during concatenation.
enum class SkipRule {
  None,
  /// Any R(2pi, phi).
  FullRotations,
  /// Consecutive R(pi, phi') R(2pi, phi) R(pi, phi').
  TrivialTriples,
  /// Consecutive R(theta, phi) R(theta, phi + pi).
  TrivialPairs,
};

struct CccpRecipe {
  CompositeBuilder outer;
  CompositeBuilder inner;
  SkipRule skip_rule = SkipRule::None;
  std::string label;
};

/// Mask of outer pulses matched by `rule` (true = keep as is).
std::vector<bool> exempt_pulses(const PulseSequence& outer, SkipRule rule);

/// Replaces every non-exempt outer pulse (theta_i, phi_i) with
/// inner(theta_i, phi_i). The inner builder must be REP-PLE when the outer
/// is PLE-robust and REP-ORE when it is ORE-robust; the result must be
/// robust on both axes. Throws RecipeError otherwise.
PulseSequence concatenate(const CccpRecipe& recipe,
                          const RotationParams& target);

enum class CccpName { CinS, CinSK, SKinsC, CinBB, BBinsC };

const char* to_string(CccpName name);
std::optional<CccpName> parse_cccp_name(std::string_view text);

CccpRecipe cccp_recipe(CccpName name);

PulseSequence named_cccp(CccpName name, const RotationParams& target);

/// CORPSE(theta, phi) followed by SK1's two 2pi pulses.
PulseSequence reduced_cinsk(const RotationParams& target);

/// BB1's pi, 2pi, pi block followed by CORPSE(theta, phi).
PulseSequence reduced_cinbb(const RotationParams& target);

/// Short CORPSE rewritten as R(t, phi) R(t, phi + pi) R(2pi - theta, phi + pi)
/// R(t, phi + pi) R(t, phi) (application order), t = theta/2 - k.
PulseSequence modified_short_corpse(const RotationParams& target);

/// SK1 on the middle pulse of the modified short CORPSE, with the leading
/// same-axis pair merged: six pulses.
PulseSequence reduced_skinsc(const RotationParams& target);

enum class ReducedName { CinSK, CinBB, SKinsC };

const char* to_string(ReducedName name);

/// Reduced CCCP built by concatenate() with the matching skip rule (and a
/// same-axis merge for SKinsC). Cross-check for the closed forms above.
PulseSequence reduced_via_concatenation(ReducedName name,
                                        const RotationParams& target);

/// Merges adjacent pulses whose phases agree mod 2pi (within 1e-12) by
/// adding their angles. Exact under both error types.
PulseSequence merge_same_axis(const PulseSequence& seq);

/// Phases agree mod 2pi within `tol`.
bool same_phase(double a, double b, double tol = 1e-12);

}  // namespace ccpulse
