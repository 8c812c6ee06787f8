// Copyright 2026 The flmarket Authors
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

#include <string>

#include "flmarket/market.hpp"

namespace flmarket {

// Identifier written to, and required in, the "format" field.
inline constexpr const char* kScenarioFormat = "flmarket-scenario/1";

// Self-describing JSON document. Reals are written as shortest-round-trip
// decimal strings, so loading a saved scenario reproduces it exactly.
std::string scenario_to_json(const Scenario& scenario);

// Throws ParseError for malformed JSON or a missing/mistyped field (message
// names the line or field), ValidationError for invariant violations.
Scenario scenario_from_json(const std::string& text);

void save_scenario(const Scenario& scenario, const std::string& path);
Scenario load_scenario(const std::string& path);

}  // namespace flmarket
