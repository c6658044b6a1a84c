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

#include "ccpulse/serialization.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <json.hpp>

#include "ccpulse/errors.hpp"

namespace ccpulse {

namespace {

using json = nlohmann::ordered_json;

double parse_number(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw InvalidParameter("cannot parse angle '" + std::string(whole) + "'");
  }
  return value;
}

json angle_pair(const RotationParams& p) {
  return json{{"theta_rad", p.theta}, {"phi_rad", p.phi}};
}

RotationParams read_angle_pair(const json& j, const char* where) {
  if (!j.is_object() || !j.contains("theta_rad") || !j.contains("phi_rad") ||
      !j["theta_rad"].is_number() || !j["phi_rad"].is_number()) {
    throw InvalidParameter(std::string("sequence document: malformed ") +
                           where);
  }
  return {j["theta_rad"].get<double>(), j["phi_rad"].get<double>()};
}

std::string printf_double(const char* fmt, int precision, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, precision, value);
  return buf;
}

}  // namespace

double parse_angle(std::string_view text, AngleUnit unit) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const std::size_t pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) {
    const double v = parse_number(text, whole);
    return unit == AngleUnit::Degrees ? v * kPi / 180.0 : v;
  }
  if (unit == AngleUnit::Degrees) {
    throw InvalidParameter("angle '" + std::string(whole) +
                           "' uses pi but degrees were requested");
  }
  // [sign][coef][*]pi[/den]
  std::string_view coef = text.substr(0, pi_pos);
  std::string_view rest = text.substr(pi_pos + 2);
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  double factor = 1.0;
  if (coef == "-") {
    factor = -1.0;
  } else if (!coef.empty() && coef != "+") {
    factor = parse_number(coef, whole);
  }
  double den = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') {
      throw InvalidParameter("cannot parse angle '" + std::string(whole) + "'");
    }
    den = parse_number(rest.substr(1), whole);
    if (den == 0.0) {
      throw InvalidParameter("angle '" + std::string(whole) +
                             "' divides by zero");
    }
  }
  return factor * kPi / den;
}

std::string to_json(const SequenceDocument& doc) {
  json pulses = json::array();
  for (const RotationParams& p : doc.sequence.pulses) {
    pulses.push_back(angle_pair(p));
  }
  json params = json::object();
  for (const auto& [k, v] : doc.provenance.parameters) params[k] = v;
  // Keys in fixed insertion order for byte-stable output.
  json out = json::object();
  out["format"] = kSequenceFormat;
  out["label"] = doc.sequence.label;
  out["target"] = angle_pair(doc.sequence.target);
  out["pulses"] = std::move(pulses);
  out["provenance"] = {{"builder", doc.provenance.builder},
                       {"parameters", std::move(params)}};
  return out.dump(2) + "\n";
}

SequenceDocument parse_sequence_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidParameter(std::string("sequence document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("pulses") || !j["pulses"].is_array() ||
      !j.contains("target")) {
    throw InvalidParameter("sequence document: missing 'target' or 'pulses'");
  }
  if (j.contains("format") && j["format"] != kSequenceFormat) {
    throw InvalidParameter("sequence document: unsupported format");
  }
  SequenceDocument doc;
  doc.sequence.label = j.value("label", std::string{});
  doc.sequence.target = read_angle_pair(j["target"], "target");
  for (const json& p : j["pulses"]) {
    doc.sequence.pulses.push_back(read_angle_pair(p, "pulse"));
  }
  if (j.contains("provenance") && j["provenance"].is_object()) {
    const json& prov = j["provenance"];
    doc.provenance.builder = prov.value("builder", std::string{});
    if (prov.contains("parameters") && prov["parameters"].is_object()) {
      for (const auto& [k, v] : prov["parameters"].items()) {
        if (!v.is_number()) {
          throw InvalidParameter("sequence document: parameter '" + k +
                                 "' is not a number");
        }
        doc.provenance.parameters[k] = v.get<double>();
      }
    }
  }
  return doc;
}

std::string format_general(double value, int digits) {
  return printf_double("%.*g", digits, value);
}

std::string format_fixed(double value, int decimals) {
  return printf_double("%.*f", decimals, value);
}

void write_fidelity_csv(std::ostream& out, const FidelityMap& map) {
  out << "eps\\f";
  for (double f : map.f_axis) out << ',' << format_general(f, 12);
  out << '\n';
  for (std::size_t i = 0; i < map.eps_axis.size(); ++i) {
    out << format_general(map.eps_axis[i], 12);
    for (std::size_t j = 0; j < map.f_axis.size(); ++j) {
      out << ',' << format_fixed(map.at(i, j), 12);
    }
    out << '\n';
  }
}

void write_timecost_text(std::ostream& out, const std::vector<TimeCostRow>& rows,
                         std::string_view theta_label) {
  std::size_t width = 5;
  for (const TimeCostRow& r : rows) width = std::max(width, r.pulse.size());
  const std::string t_header = "T(" + std::string(theta_label) + ")";
  out << std::left << std::setw(static_cast<int>(width)) << "pulse"
      << "  " << std::right << std::setw(4) << "N"
      << "  " << std::setw(8) << t_header << '\n';
  for (const TimeCostRow& r : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << r.pulse << "  "
        << std::right << std::setw(4) << r.pulse_count << "  " << std::setw(8)
        << format_fixed(r.time_cost, 1) << '\n';
  }
}

void write_timecost_csv(std::ostream& out,
                        const std::vector<TimeCostRow>& rows) {
  out << "pulse,N,T\n";
  for (const TimeCostRow& r : rows) {
    out << r.pulse << ',' << r.pulse_count << ','
        << format_general(r.time_cost, 17) << '\n';
  }
}

}  // namespace ccpulse
