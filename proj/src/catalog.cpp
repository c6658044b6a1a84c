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

#include "ccpulse/catalog.hpp"

#include <array>
#include <cctype>
#include <string>

#include "ccpulse/concatenator.hpp"
#include "ccpulse/errors.hpp"
#include "ccpulse/pulse_library.hpp"

namespace ccpulse {

namespace {

constexpr std::array<CatalogEntry, 18> kEntries{{
    {"elementary", "elementary"},
    {"scrofulous", "SCROFULOUS"},
    {"sk1", "SK1"},
    {"bb1", "BB1"},
    {"short-corpse", "short CORPSE"},
    {"corpse", "CORPSE"},
    {"cins", "CinS"},
    {"cinsk", "CinSK"},
    {"cinbb", "CinBB"},
    {"skinsc", "SKinsC"},
    {"bbinsc", "BBinsC"},
    {"reduced-cinsk", "reduced CinSK"},
    {"reduced-cinbb", "reduced CinBB"},
    {"reduced-skinsc", "reduced SKinsC"},
    {"modified-short-corpse", "modified short CORPSE"},
    {"trivial-pair", "trivial pair"},
    {"full-rotation", "full rotation"},
    {"trivial-triple", "trivial triple"},
}};

constexpr std::array<std::string_view, 14> kTimeCostKeys{
    "elementary",    "scrofulous",    "sk1",           "bb1",
    "short-corpse",  "corpse",        "cins",          "cinsk",
    "cinbb",         "skinsc",        "bbinsc",        "reduced-cinsk",
    "reduced-cinbb", "reduced-skinsc"};

}  // namespace

std::span<const CatalogEntry> catalog_entries() { return kEntries; }

std::span<const std::string_view> time_cost_keys() { return kTimeCostKeys; }

namespace {

// Case-insensitive, and treats spaces in display names like '-' in keys.
bool name_matches(std::string_view name, std::string_view candidate) {
  if (name.size() != candidate.size()) return false;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const auto fold = [](char c) {
      return c == ' ' ? '-' : static_cast<char>(std::tolower(
                                  static_cast<unsigned char>(c)));
    };
    if (fold(name[i]) != fold(candidate[i])) return false;
  }
  return true;
}

}  // namespace

const CatalogEntry* find_entry(std::string_view name) {
  for (const CatalogEntry& e : kEntries) {
    if (e.key == name) return &e;
  }
  for (const CatalogEntry& e : kEntries) {
    if (name_matches(name, e.key) || name_matches(name, e.display)) return &e;
  }
  return nullptr;
}

PulseSequence build_named(std::string_view key, const RotationParams& target,
                          std::optional<double> phi_prime) {
  const CatalogEntry* entry = find_entry(key);
  if (entry == nullptr) {
    throw InvalidParameter("unknown pulse name '" + std::string(key) + "'");
  }
  key = entry->key;
  PulseSequence seq = [&]() -> PulseSequence {
    if (key == "elementary") return elementary(target);
    if (key == "scrofulous") return scrofulous(target);
    if (key == "sk1") return sk1(target);
    if (key == "bb1") return bb1(target);
    if (key == "short-corpse") return short_corpse(target);
    if (key == "corpse") return corpse(target);
    if (key == "cins") return named_cccp(CccpName::CinS, target);
    if (key == "cinsk") return named_cccp(CccpName::CinSK, target);
    if (key == "cinbb") return named_cccp(CccpName::CinBB, target);
    if (key == "skinsc") return named_cccp(CccpName::SKinsC, target);
    if (key == "bbinsc") return named_cccp(CccpName::BBinsC, target);
    if (key == "reduced-cinsk") return reduced_cinsk(target);
    if (key == "reduced-cinbb") return reduced_cinbb(target);
    if (key == "reduced-skinsc") return reduced_skinsc(target);
    if (key == "modified-short-corpse") return modified_short_corpse(target);
    if (key == "trivial-pair") return trivial_pair(target.theta, target.phi);
    if (key == "full-rotation") return full_rotation(target.phi);
    return trivial_triple(phi_prime.value_or(target.phi), target.phi);
  }();
  seq.label = std::string(entry->display);
  return seq;
}

}  // namespace ccpulse
