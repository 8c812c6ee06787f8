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

#include "flmarket/report.hpp"

#include <charconv>
#include <sstream>

#include "flmarket/error.hpp"
#include "json.hpp"

namespace flmarket {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string opt(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

Json interval(const Interval& iv) { return Json::array({iv.lo, iv.hi}); }

std::string size_list(const std::vector<SizeSpec>& sizes) {
  std::string out;
  for (const auto& s : sizes) {
    if (!out.empty()) out += ',';
    out += s.label();
  }
  return out;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

CsvDocument read_csv(const std::string& text) {
  CsvDocument doc;
  std::stringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
      const auto colon = body.find(": ");
      if (colon == std::string::npos) {
        doc.comments.emplace_back(body, "");
      } else {
        doc.comments.emplace_back(body.substr(0, colon), body.substr(colon + 2));
      }
      continue;
    }
    auto cells = split(line);
    if (doc.header.empty()) {
      doc.header = std::move(cells);
      continue;
    }
    if (cells.size() != doc.header.size()) {
      throw ParseError("csv line " + std::to_string(line_no) + ": expected " +
                       std::to_string(doc.header.size()) + " cells, got " +
                       std::to_string(cells.size()));
    }
    doc.rows.push_back(std::move(cells));
  }
  return doc;
}

std::string write_csv(const CsvDocument& doc) {
  std::string out;
  for (const auto& [k, v] : doc.comments) out += "# " + k + ": " + v + "\n";
  auto row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  row(doc.header);
  for (const auto& r : doc.rows) row(r);
  return out;
}

CsvDocument winners_csv(const MarketBids& bids, const AuctionOutcome& o) {
  CsvDocument doc;
  doc.comments.emplace_back("mechanism", o.mechanism);
  doc.comments.emplace_back("objective", format_real(o.objective));
  doc.header = kWinnerColumns;
  const bool paid = !o.payments.empty();
  for (std::size_t i = 0; i < o.allocation.triples.size(); ++i) {
    const Triple& t = o.allocation.triples[i];
    const SellerPairBid& e = bids[t.buyer].at(t.data_seller, t.uav_seller);
    std::vector<std::string> r = {size_label(t.buyer + 1, t.data_seller + 1, t.uav_seller + 1),
                                  format_real(e.uav_bid), format_real(e.data_bid),
                                  format_real(e.joint_bid)};
    if (paid) {
      const double pu = o.payments.uav_seller_payments[t.uav_seller];
      const double pd = o.payments.data_seller_payments[t.data_seller];
      r.push_back(format_real(o.payments.pair_totals.at(t)));
      r.push_back(format_real(o.pair_revenues[i]));
      r.push_back(format_real(pu));
      r.push_back(format_real(o.uav_seller_revenues[t.uav_seller]));
      r.push_back(format_real(pd));
      r.push_back(format_real(o.data_seller_revenues[t.data_seller]));
    } else {
      r.resize(kWinnerColumns.size());
    }
    doc.rows.push_back(std::move(r));
  }
  return doc;
}

std::string outcome_json(const MarketBids& bids, const AuctionOutcome& o, bool with_timing) {
  Json doc;
  doc["mechanism"] = o.mechanism;
  doc["objective"] = o.objective;
  doc["has_payments"] = !o.payments.empty();
  doc["winners"] = Json::array();
  for (std::size_t i = 0; i < o.allocation.triples.size(); ++i) {
    const Triple& t = o.allocation.triples[i];
    const SellerPairBid& e = bids[t.buyer].at(t.data_seller, t.uav_seller);
    Json w;
    w["buyer"] = t.buyer;
    w["data_seller"] = t.data_seller;
    w["uav_seller"] = t.uav_seller;
    w["valuation"] = e.valuation;
    w["data_bid"] = e.data_bid;
    w["uav_bid"] = e.uav_bid;
    w["joint_bid"] = e.joint_bid;
    if (!o.payments.empty()) {
      w["total_payment"] = o.payments.pair_totals.at(t);
      w["data_payment"] = o.payments.data_seller_payments[t.data_seller];
      w["uav_payment"] = o.payments.uav_seller_payments[t.uav_seller];
      w["pair_revenue"] = o.pair_revenues[i];
    }
    doc["winners"].push_back(std::move(w));
  }
  doc["buyer_revenues"] = o.buyer_revenues;
  doc["data_seller_revenues"] = o.data_seller_revenues;
  doc["uav_seller_revenues"] = o.uav_seller_revenues;
  doc["data_seller_payments"] = o.payments.data_seller_payments;
  doc["uav_seller_payments"] = o.payments.uav_seller_payments;
  if (with_timing) doc["elapsed_s"] = o.elapsed.count();
  return doc.dump(1) + "\n";
}

std::string gen_params_json(const GenParams& p, bool with_size) {
  Json j;
  if (with_size) j["size"] = size_label(p.buyers, p.data_sellers, p.uav_sellers);
  j["data_size"] = interval(p.data_size);
  j["data_unit_scale"] = p.data_unit_scale;
  j["unit_cost"] = interval(p.unit_cost);
  j["distance"] = interval(p.distance);
  j["unit_fly_cost"] = interval(p.unit_fly_cost);
  j["model_size"] = interval(p.model_size);
  j["rate"] = interval(p.rate);
  j["alpha1"] = interval(p.alpha1);
  j["alpha2"] = p.alpha2;
  j["required_data"] = p.required_data;
  j["seed"] = p.seed;
  j["truthful"] = p.truthful;
  j["bid_factor"] = interval(p.bid_factor);
  return j.dump();
}

CsvDocument compare_csv(const ComparisonReport& report, bool with_timing) {
  CsvDocument doc;
  doc.comments.emplace_back("gen_params", gen_params_json(report.config.params, false));
  doc.comments.emplace_back("sizes", size_list(report.config.sizes));
  doc.comments.emplace_back("trials", std::to_string(report.config.trials));
  doc.header = kCompareColumns;
  if (with_timing) doc.header.push_back("mean_runtime_s");
  for (const auto& r : report.rows) {
    std::vector<std::string> cells = {r.size, r.method, std::to_string(r.trials),
                                      r.trials ? format_real(r.mean_objective) : "",
                                      opt(r.win_rate), opt(r.mean_gap)};
    if (with_timing) cells.push_back(r.trials ? format_real(r.mean_runtime_s) : "");
    doc.rows.push_back(std::move(cells));
  }
  return doc;
}

CsvDocument records_csv(const ComparisonReport& report, bool with_timing) {
  CsvDocument doc;
  doc.comments.emplace_back("gen_params", gen_params_json(report.config.params, false));
  doc.comments.emplace_back("sizes", size_list(report.config.sizes));
  doc.header = kRecordColumns;
  if (with_timing) doc.header.push_back("runtime_s");
  for (const auto& r : report.records) {
    std::vector<std::string> cells = {r.size, std::to_string(r.trial), std::to_string(r.seed),
                                      r.method, opt(r.objective)};
    if (with_timing) cells.push_back(r.objective ? format_real(r.runtime_s) : "");
    doc.rows.push_back(std::move(cells));
  }
  return doc;
}

CsvDocument bench_csv(const std::vector<BenchRow>& rows, const BenchConfig& config) {
  CsvDocument doc;
  doc.comments.emplace_back("gen_params", gen_params_json(config.params, false));
  doc.comments.emplace_back("sizes", size_list(config.sizes));
  doc.comments.emplace_back("trials", std::to_string(config.trials));
  doc.header = kBenchColumns;
  for (const auto& r : rows) {
    doc.rows.push_back({r.size, r.method, std::to_string(r.trials),
                        r.trials ? format_real(r.mean_s) : "",
                        r.trials ? format_real(r.std_s) : "", r.status});
  }
  return doc;
}

CsvDocument audit_csv(const AuditReport& report, const AuditConfig& config) {
  CsvDocument doc;
  doc.comments.emplace_back("gen_params", gen_params_json(config.params));
  doc.comments.emplace_back("kind", audit_kind_name(report.kind));
  doc.comments.emplace_back("scenarios", std::to_string(report.scenarios));
  doc.comments.emplace_back("deviations", std::to_string(report.deviations));
  doc.comments.emplace_back("violations", std::to_string(report.violations.size()));
  doc.header = kAuditColumns;
  for (const auto& v : report.violations) {
    doc.rows.push_back({audit_kind_name(report.kind), std::to_string(v.scenario_seed),
                        v.mechanism, v.participant, v.deviation,
                        format_real(v.truthful_revenue), format_real(v.deviated_revenue)});
  }
  return doc;
}

std::string audit_json(const AuditReport& report, const AuditConfig& config) {
  Json doc;
  doc["kind"] = audit_kind_name(report.kind);
  doc["gen_params"] = Json::parse(gen_params_json(config.params));
  doc["grid"] = config.grid;
  doc["scenarios"] = report.scenarios;
  doc["deviations"] = report.deviations;
  doc["passed"] = report.passed();
  doc["violations"] = Json::array();
  for (const auto& v : report.violations) {
    doc["violations"].push_back({{"scenario_seed", v.scenario_seed},
                                 {"mechanism", v.mechanism},
                                 {"participant", v.participant},
                                 {"deviation", v.deviation},
                                 {"truthful_revenue", v.truthful_revenue},
                                 {"deviated_revenue", v.deviated_revenue}});
  }
  return doc.dump(1) + "\n";
}

}  // namespace flmarket
