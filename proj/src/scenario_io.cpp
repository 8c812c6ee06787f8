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

#include "flmarket/scenario_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "flmarket/error.hpp"
#include "json.hpp"

namespace flmarket {

namespace {

using Json = nlohmann::ordered_json;

std::string real_to_string(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Json reals(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(real_to_string(x));
  return out;
}

Json table(const Table& t) {
  Json out = Json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < t.cols(); ++c) row.push_back(real_to_string(t.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

// Field-path aware readers.
[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ParseError("field '" + path + "': " + what);
}

const Json& member(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) bad(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) bad(path + "." + key, "missing");
  return *it;
}

double read_real(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a decimal string");
  const std::string& s = j.get_ref<const std::string&>();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    bad(path, "'" + s + "' is not a real number");
  }
  return v;
}

std::vector<double> read_reals(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_real(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Table read_table(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<std::vector<double>> data;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    data.push_back(read_reals(j[r], rp));
    if (r == 0) {
      cols = data[0].size();
    } else if (data[r].size() != cols) {
      throw ValidationError(rp + ": ragged table, expected " + std::to_string(cols) +
                            " columns, got " + std::to_string(data[r].size()));
    }
  }
  Table t(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) t.at(r, c) = data[r][c];
  }
  return t;
}

std::uint64_t read_u64(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) bad(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

const Json& read_array(const Json& obj, const std::string& path, const char* key) {
  const Json& a = member(obj, path, key);
  if (!a.is_array()) bad(path + "." + key, "expected an array");
  return a;
}

}  // namespace

std::string scenario_to_json(const Scenario& s) {
  Json doc;
  doc["format"] = kScenarioFormat;
  doc["seed"] = s.seed;
  doc["data_unit_scale"] = real_to_string(s.data_unit_scale);
  doc["buyers"] = Json::array();
  for (const auto& b : s.buyers) {
    Json jb;
    jb["id"] = b.buyer_id;
    jb["required_data"] = real_to_string(b.required_data);
    jb["alpha1"] = real_to_string(b.valuation_alpha1);
    jb["alpha2"] = real_to_string(b.valuation_alpha2);
    jb["valuations"] = table(b.valuations);
    doc["buyers"].push_back(std::move(jb));
  }
  doc["data_sellers"] = Json::array();
  for (const auto& d : s.data_sellers) {
    Json jd;
    jd["id"] = d.seller_id;
    jd["data_sizes"] = reals(d.data_sizes);
    jd["unit_costs"] = reals(d.unit_costs);
    jd["true_costs"] = reals(d.true_costs);
    jd["sell_bids"] = reals(d.sell_bids);
    doc["data_sellers"].push_back(std::move(jd));
  }
  doc["uav_sellers"] = Json::array();
  for (const auto& u : s.uav_sellers) {
    Json ju;
    ju["id"] = u.seller_id;
    ju["unit_fly_cost"] = real_to_string(u.unit_fly_cost);
    ju["distances"] = reals(u.distances);
    std::vector<double> sizes, rates;
    for (const auto& p : u.service_params) {
      sizes.push_back(p.model_size_kb);
      rates.push_back(p.rate_kbps);
    }
    ju["model_sizes_kb"] = reals(sizes);
    ju["rates_kbps"] = reals(rates);
    ju["true_costs"] = table(u.true_costs);
    ju["sell_bids"] = table(u.sell_bids);
    doc["uav_sellers"].push_back(std::move(ju));
  }
  return doc.dump(1) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }

  const Json& format = member(doc, "$", "format");
  if (!format.is_string() || format.get<std::string>() != kScenarioFormat) {
    bad("$.format", std::string("expected \"") + kScenarioFormat + "\"");
  }

  Scenario s;
  s.seed = read_u64(member(doc, "$", "seed"), "$.seed");
  s.data_unit_scale = read_real(member(doc, "$", "data_unit_scale"), "$.data_unit_scale");

  const Json& buyers = read_array(doc, "$", "buyers");
  for (std::size_t l = 0; l < buyers.size(); ++l) {
    const std::string p = "buyers[" + std::to_string(l) + "]";
    const Json& jb = buyers[l];
    BuyerRequest b;
    b.buyer_id = read_u64(member(jb, p, "id"), p + ".id");
    b.required_data = read_real(member(jb, p, "required_data"), p + ".required_data");
    b.valuation_alpha1 = read_real(member(jb, p, "alpha1"), p + ".alpha1");
    b.valuation_alpha2 = read_real(member(jb, p, "alpha2"), p + ".alpha2");
    b.valuations = read_table(member(jb, p, "valuations"), p + ".valuations");
    s.buyers.push_back(std::move(b));
  }

  const Json& sellers = read_array(doc, "$", "data_sellers");
  for (std::size_t m = 0; m < sellers.size(); ++m) {
    const std::string p = "data_sellers[" + std::to_string(m) + "]";
    const Json& jd = sellers[m];
    DataSellerBid d;
    d.seller_id = read_u64(member(jd, p, "id"), p + ".id");
    d.data_sizes = read_reals(member(jd, p, "data_sizes"), p + ".data_sizes");
    d.unit_costs = read_reals(member(jd, p, "unit_costs"), p + ".unit_costs");
    d.true_costs = read_reals(member(jd, p, "true_costs"), p + ".true_costs");
    d.sell_bids = read_reals(member(jd, p, "sell_bids"), p + ".sell_bids");
    s.data_sellers.push_back(std::move(d));
  }

  const Json& uavs = read_array(doc, "$", "uav_sellers");
  for (std::size_t n = 0; n < uavs.size(); ++n) {
    const std::string p = "uav_sellers[" + std::to_string(n) + "]";
    const Json& ju = uavs[n];
    UavSellerBid u;
    u.seller_id = read_u64(member(ju, p, "id"), p + ".id");
    u.unit_fly_cost = read_real(member(ju, p, "unit_fly_cost"), p + ".unit_fly_cost");
    u.distances = read_reals(member(ju, p, "distances"), p + ".distances");
    const auto sizes = read_reals(member(ju, p, "model_sizes_kb"), p + ".model_sizes_kb");
    const auto rates = read_reals(member(ju, p, "rates_kbps"), p + ".rates_kbps");
    if (sizes.size() != rates.size()) {
      throw ValidationError(p + ".rates_kbps: expected " + std::to_string(sizes.size()) +
                            " entries to match model_sizes_kb, got " +
                            std::to_string(rates.size()));
    }
    for (std::size_t l = 0; l < sizes.size(); ++l) u.service_params.push_back({sizes[l], rates[l]});
    u.true_costs = read_table(member(ju, p, "true_costs"), p + ".true_costs");
    u.sell_bids = read_table(member(ju, p, "sell_bids"), p + ".sell_bids");
    s.uav_sellers.push_back(std::move(u));
  }

  s.validate();
  return s;
}

void save_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << scenario_to_json(s);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json(buf.str());
}

}  // namespace flmarket
