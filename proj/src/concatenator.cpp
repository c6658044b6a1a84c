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

#include "ccpulse/concatenator.hpp"

#include <cmath>

#include "ccpulse/analysis.hpp"
#include "ccpulse/error_models.hpp"
#include "ccpulse/errors.hpp"
#include "ccpulse/pulse_library.hpp"

namespace ccpulse {

namespace {

constexpr double kPatternTol = 1e-12;

bool angle_is(double theta, double value) {
  return std::abs(theta - value) <= kPatternTol;
}

std::string describe(const RotationParams& p) {
  return "(" + std::to_string(p.theta) + ", " + std::to_string(p.phi) + ")";
}

CompositeBuilder builder(std::string name,
                         PulseSequence (*fn)(const RotationParams&)) {
  return {std::move(name), fn};
}

CompositeBuilder corpse_builder() {
  return {"CORPSE", [](const RotationParams& t) { return corpse(t); }};
}

}  // namespace

bool same_phase(double a, double b, double tol) {
  const double d = wrap_two_pi(a - b);
  return d <= tol || kTwoPi - d <= tol;
}

std::vector<bool> exempt_pulses(const PulseSequence& outer, SkipRule rule) {
  const auto& p = outer.pulses;
  std::vector<bool> mask(p.size(), false);
  switch (rule) {
    case SkipRule::None:
      break;
    case SkipRule::FullRotations:
      for (std::size_t i = 0; i < p.size(); ++i) {
        mask[i] = angle_is(p[i].theta, kTwoPi);
      }
      break;
    case SkipRule::TrivialTriples:
      for (std::size_t i = 0; i + 2 < p.size(); ++i) {
        if (mask[i]) continue;
        if (angle_is(p[i].theta, kPi) && angle_is(p[i + 1].theta, kTwoPi) &&
            angle_is(p[i + 2].theta, kPi) &&
            same_phase(p[i].phi, p[i + 2].phi)) {
          mask[i] = mask[i + 1] = mask[i + 2] = true;
          i += 2;
        }
      }
      break;
    case SkipRule::TrivialPairs:
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (std::abs(p[i].theta - p[i + 1].theta) <= kPatternTol &&
            same_phase(p[i].phi + kPi, p[i + 1].phi)) {
          mask[i] = mask[i + 1] = true;
          ++i;
        }
      }
      break;
  }
  return mask;
}

PulseSequence concatenate(const CccpRecipe& recipe,
                          const RotationParams& target) {
  const PulseSequence outer = recipe.outer.build(target);
  const bool outer_ple = is_robust(outer, ErrorAxis::PLE);
  const bool outer_ore = is_robust(outer, ErrorAxis::ORE);
  if (!outer_ple && !outer_ore) {
    throw RecipeError("concatenate: outer " + recipe.outer.name +
                      " is robust against neither PLE nor ORE");
  }
  // A PLE-robust outer needs inner pulses that behave like elementary pulses
  // under PLE and cancel ORE, and vice versa.
  const RepKind needed = outer_ple ? RepKind::REP_PLE : RepKind::REP_ORE;

  const std::vector<bool> exempt = exempt_pulses(outer, recipe.skip_rule);
  PulseSequence out;
  out.target = target;
  out.label = recipe.label.empty()
                  ? recipe.inner.name + " in " + recipe.outer.name
                  : recipe.label;
  for (std::size_t i = 0; i < outer.pulses.size(); ++i) {
    const RotationParams& p = outer.pulses[i];
    if (exempt[i]) {
      out.pulses.push_back(p);
      continue;
    }
    const PulseSequence inner = recipe.inner.build(p);
    const RepClass cls = classify_rep(inner);
    if (cls.rep != needed) {
      throw RecipeError("concatenate: inner " + recipe.inner.name + " at " +
                        describe(p) + " is not " + to_string(needed) +
                        " (outer " + recipe.outer.name + " is robust against " +
                        (outer_ple ? "PLE" : "ORE") + ")");
    }
    out.pulses.insert(out.pulses.end(), inner.pulses.begin(),
                      inner.pulses.end());
  }
  for (ErrorAxis axis : {ErrorAxis::PLE, ErrorAxis::ORE}) {
    if (!is_robust(out, axis)) {
      throw RecipeError("concatenate: " + out.label + " is not robust against " +
                        to_string(axis));
    }
  }
  return out;
}

const char* to_string(CccpName name) {
  switch (name) {
    case CccpName::CinS: return "CinS";
    case CccpName::CinSK: return "CinSK";
    case CccpName::SKinsC: return "SKinsC";
    case CccpName::CinBB: return "CinBB";
    case CccpName::BBinsC: return "BBinsC";
  }
  return "?";
}

std::optional<CccpName> parse_cccp_name(std::string_view text) {
  for (CccpName n : {CccpName::CinS, CccpName::CinSK, CccpName::SKinsC,
                     CccpName::CinBB, CccpName::BBinsC}) {
    if (text == to_string(n)) return n;
  }
  return std::nullopt;
}

CccpRecipe cccp_recipe(CccpName name) {
  const CompositeBuilder short_c = builder("short CORPSE", &short_corpse);
  switch (name) {
    case CccpName::CinS:
      return {builder("SCROFULOUS", &scrofulous), corpse_builder(),
              SkipRule::None, "CinS"};
    case CccpName::CinSK:
      return {builder("SK1", &sk1), corpse_builder(), SkipRule::None, "CinSK"};
    case CccpName::SKinsC:
      return {short_c, builder("SK1", &sk1), SkipRule::None, "SKinsC"};
    case CccpName::CinBB:
      return {builder("BB1", &bb1), corpse_builder(), SkipRule::None, "CinBB"};
    case CccpName::BBinsC:
      return {short_c, builder("BB1", &bb1), SkipRule::None, "BBinsC"};
  }
  throw InvalidParameter("cccp_recipe: unknown CCCP");
}

PulseSequence named_cccp(CccpName name, const RotationParams& target) {
  return concatenate(cccp_recipe(name), target);
}

PulseSequence reduced_cinsk(const RotationParams& target) {
  const auto [theta, phi] = target;
  const double k = corpse_k(theta);
  const double s = correction_phase(theta);
  return {{{kTwoPi + theta / 2.0 - k, phi},
           {kTwoPi - 2.0 * k, phi + kPi},
           {theta / 2.0 - k, phi},
           {kTwoPi, phi - s},
           {kTwoPi, phi + s}},
          target,
          "reduced CinSK"};
}

PulseSequence reduced_cinbb(const RotationParams& target) {
  const auto [theta, phi] = target;
  const double k = corpse_k(theta);
  const double phi1 = phi + correction_phase(theta);
  return {{{kPi, phi1},
           {kTwoPi, 3.0 * phi1 - 2.0 * phi},
           {kPi, phi1},
           {kTwoPi + theta / 2.0 - k, phi},
           {kTwoPi - 2.0 * k, phi + kPi},
           {theta / 2.0 - k, phi}},
          target,
          "reduced CinBB"};
}

PulseSequence modified_short_corpse(const RotationParams& target) {
  const auto [theta, phi] = target;
  const double t = theta / 2.0 - corpse_k(theta);
  const double phi_bar = phi + kPi;
  return {{{t, phi},
           {t, phi_bar},
           {kTwoPi - theta, phi_bar},
           {t, phi_bar},
           {t, phi}},
          target,
          "modified short CORPSE"};
}

PulseSequence reduced_skinsc(const RotationParams& target) {
  const auto [theta, phi] = target;
  const double k = corpse_k(theta);
  const double t = theta / 2.0 - k;
  const double phi_bar = phi + kPi;
  // SK1 correction phase for the (2pi - theta, phi + pi) middle pulse.
  const double s = correction_phase(kTwoPi - theta);
  return {{{t, phi},
           {kTwoPi - theta / 2.0 - k, phi_bar},
           {kTwoPi, phi_bar - s},
           {kTwoPi, phi_bar + s},
           {t, phi_bar},
           {t, phi}},
          target,
          "reduced SKinsC"};
}

const char* to_string(ReducedName name) {
  switch (name) {
    case ReducedName::CinSK: return "reduced CinSK";
    case ReducedName::CinBB: return "reduced CinBB";
    case ReducedName::SKinsC: return "reduced SKinsC";
  }
  return "?";
}

PulseSequence reduced_via_concatenation(ReducedName name,
                                        const RotationParams& target) {
  switch (name) {
    case ReducedName::CinSK:
      return concatenate({builder("SK1", &sk1), corpse_builder(),
                          SkipRule::FullRotations, "reduced CinSK"},
                         target);
    case ReducedName::CinBB:
      return concatenate({builder("BB1", &bb1), corpse_builder(),
                          SkipRule::TrivialTriples, "reduced CinBB"},
                         target);
    case ReducedName::SKinsC:
      return merge_same_axis(concatenate(
          {builder("modified short CORPSE", &modified_short_corpse),
           builder("SK1", &sk1), SkipRule::TrivialPairs, "reduced SKinsC"},
          target));
  }
  throw InvalidParameter("reduced_via_concatenation: unknown name");
}

PulseSequence merge_same_axis(const PulseSequence& seq) {
  PulseSequence out{{}, seq.target, seq.label};
  for (const RotationParams& p : seq.pulses) {
    if (!out.pulses.empty() && same_phase(out.pulses.back().phi, p.phi)) {
      out.pulses.back().theta += p.theta;
    } else {
      out.pulses.push_back(p);
    }
  }
  return out;
}

}  // namespace ccpulse
