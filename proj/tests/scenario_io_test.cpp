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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "flmarket/error.hpp"
#include "flmarket/scenario_gen.hpp"
#include "flmarket/scenario_io.hpp"

namespace flmarket {
namespace {

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  if (pos != std::string::npos) text.replace(pos, from.size(), to);
  return text;
}

TEST(ScenarioIo, RoundTripIsExact) {
  GenParams p;
  p.truthful = false;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    p.seed = seed;
    p.buyers = 1 + seed % 4;
    const Scenario s = generate(p);
    const std::string text = scenario_to_json(s);
    const Scenario back = scenario_from_json(text);
    EXPECT_EQ(back, s);
    EXPECT_EQ(scenario_to_json(back), text);
  }
}

TEST(ScenarioIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "flmarket_io_test.json";
  const Scenario s = generate(GenParams{});
  save_scenario(s, path.string());
  EXPECT_EQ(load_scenario(path.string()), s);
  std::filesystem::remove(path);
  EXPECT_THROW(load_scenario(path.string()), std::runtime_error);
}

TEST(ScenarioIo, TruncatedFileIsParseError) {
  const std::string text = scenario_to_json(generate(GenParams{}));
  for (std::size_t cut : {std::size_t{0}, std::size_t{1}, text.size() / 3, text.size() - 3}) {
    EXPECT_THROW(scenario_from_json(text.substr(0, cut)), ParseError) << cut;
  }
}

TEST(ScenarioIo, MissingOrMistypedFieldNamesIt) {
  const std::string text = scenario_to_json(generate(GenParams{}));
  try {
    scenario_from_json(replace_once(text, "\"unit_fly_cost\"", "\"unit_fly_kost\""));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unit_fly_cost"), std::string::npos) << e.what();
  }
  EXPECT_THROW(scenario_from_json(replace_once(text, "flmarket-scenario/1", "flmarket-scenario/9")),
               ParseError);
  EXPECT_THROW(scenario_from_json(replace_once(text, "\"alpha2\": \"1\"", "\"alpha2\": \"one\"")),
               ParseError);
}

TEST(ScenarioIo, BadTableShapeIsValidationError) {
  Scenario s = generate(GenParams{});
  // Drop one buyer column from UAV 1's bid table by rebuilding it 3x2.
  Table t(3, 2);
  for (std::size_t m = 0; m < 3; ++m) {
    for (std::size_t l = 0; l < 2; ++l) t.at(m, l) = s.uav_sellers[1].sell_bids.at(m, l);
  }
  s.uav_sellers[1].sell_bids = t;
  const std::string text = scenario_to_json(s);
  try {
    scenario_from_json(text);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("uav_sellers[1].sell_bids"), std::string::npos) << e.what();
  }
}

TEST(ScenarioIo, RaggedRowIsValidationError) {
  const std::string text = scenario_to_json(generate(GenParams{}));
  // Remove the last element of the first valuation row.
  const auto start = text.find("\"valuations\"");
  const auto row_end = text.find(']', start);
  const auto comma = text.rfind(',', row_end);
  std::string edited = text.substr(0, comma) + text.substr(text.rfind('\n', row_end));
  EXPECT_THROW(scenario_from_json(edited), ValidationError);
}

}  // namespace
}  // namespace flmarket
