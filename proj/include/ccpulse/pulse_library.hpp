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

#include "ccpulse/su2.hpp"

// Builders for the named single-error composite pulses and the trivial
// sequences used to shorten concatenated pulses. Every builder returns raw
// (unwrapped) angles in application order and records its target gate.
//
// Domain failures throw DomainError naming the formula that failed.

namespace ccpulse {

/// Winding numbers of the CORPSE family.
struct CorpseWindings {
  int n1 = 1;
  int n2 = 1;
  int n3 = 0;

  static constexpr CorpseWindings standard() { return {1, 1, 0}; }
  static constexpr CorpseWindings short_form() { return {0, 1, 0}; }
};

/// Inverse of sin(x)/x on [0, pi] by bisection (tolerance 1e-12).
/// Accepts y in [0, 1]; y = 1 gives 0 and y = 0 gives pi.
double arcsinc(double y);

/// CORPSE auxiliary angle k = arcsin[sin(theta/2)/2].
double corpse_k(double theta);

/// arccos[-theta/(4pi)], the BB1/SK1 correction phase. Needs |theta| <= 4pi.
double correction_phase(double theta);

/// Single pulse implementing the target directly.
PulseSequence elementary(const RotationParams& target);

/// pi(phi1) 2pi(3 phi1 - 2 phi) pi(phi1) then theta(phi), with
/// phi1 = phi + arccos[-theta/(4pi)]. Needs |theta| <= 4pi.
PulseSequence bb1(const RotationParams& target);

/// Three pulses theta1(phi + phi1) pi(phi + phi2) theta1(phi + phi1).
/// For theta in (pi, 2pi) the formula has no real arcsinc solution; the
/// sequence for (2pi - theta, phi + pi) is returned instead, which realizes
/// the same gate up to a global sign.
PulseSequence scrofulous(const RotationParams& target);

/// theta(phi) then 2pi(phi - s) 2pi(phi + s), s = arccos[-theta/(4pi)].
PulseSequence sk1(const RotationParams& target);

/// theta_i = 2 n_i pi + {theta/2 - k, -2k, theta/2 - k}; phases phi, phi+pi, phi.
PulseSequence corpse(const RotationParams& target,
                     CorpseWindings windings = CorpseWindings::standard());

PulseSequence short_corpse(const RotationParams& target);

/// R(theta, phi) R(theta, phi + pi): identity at zero error, PLE-robust.
PulseSequence trivial_pair(double theta, double phi);

/// R(2pi, phi): -I at zero error, ORE-robust.
PulseSequence full_rotation(double phi);

/// R(pi, phi') R(2pi, phi) R(pi, phi'): identity at zero error, ORE-robust.
PulseSequence trivial_triple(double phi_prime, double phi);

}  // namespace ccpulse
