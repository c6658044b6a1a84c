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
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ccpulse/analysis.hpp"
#include "ccpulse/su2.hpp"

namespace ccpulse {

enum class AngleUnit { Radians, Degrees };

/// Parses "pi", "-pi/2", "3pi/2", "2*pi/3", "0.25" and similar. With
/// AngleUnit::Degrees only plain numbers are accepted and converted to
/// radians. Throws InvalidParameter on malformed input.
double parse_angle(std::string_view text, AngleUnit unit = AngleUnit::Radians);

struct Provenance {
  std::string builder;
  std::map<std::string, double> parameters;
};

/// A sequence plus how it was produced; stored as JSON.
struct SequenceDocument {
  PulseSequence sequence;
  Provenance provenance;
};

inline constexpr std::string_view kSequenceFormat = "ccpulse.sequence/1";

std::string to_json(const SequenceDocument& doc);

/// Throws InvalidParameter on malformed or incomplete documents.
SequenceDocument parse_sequence_document(std::string_view text);

/// Header row "eps\f" then f values; each body row starts with its eps
/// value. F values are written with 12 decimals.
void write_fidelity_csv(std::ostream& out, const FidelityMap& map);

struct TimeCostRow {
  std::string pulse;
  std::size_t pulse_count = 0;
  double time_cost = 0.0;
};

void write_timecost_text(std::ostream& out, const std::vector<TimeCostRow>& rows,
                         std::string_view theta_label);
void write_timecost_csv(std::ostream& out,
                        const std::vector<TimeCostRow>& rows);

/// printf-style "%.<digits>g".
std::string format_general(double value, int digits);
/// printf-style "%.<decimals>f".
std::string format_fixed(double value, int decimals);

}  // namespace ccpulse
