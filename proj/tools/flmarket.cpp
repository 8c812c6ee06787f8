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

// flmarket: command-line runner for the seller-pair reverse auctions.
//
//   flmarket generate --size 3/3/3 --seed 7 --out market.json
//   flmarket run --scenario market.json --mechanism matching --csv winners.csv
//   flmarket compare --sizes 3/3/3,5/5/5 --trials 100 --csv compare.csv
//   flmarket audit --kind truthfulness --size 4/4/4 --scenarios 100
//   flmarket bench --sizes 1/5/5,5/5/5,9/5/5 --trials 20
//
// Exit status: 0 success, 1 audit violations, 2 usage or input error,
// 3 internal consistency failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flmarket/audit.hpp"
#include "flmarket/error.hpp"
#include "flmarket/experiments.hpp"
#include "flmarket/methods.hpp"
#include "flmarket/report.hpp"
#include "flmarket/scenario_gen.hpp"
#include "flmarket/scenario_io.hpp"

namespace {

using namespace flmarket;

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument(what + ": not a number: '" + text + "'");
  }
  return v;
}

Interval parse_interval(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    const double v = parse_real(text, what);
    return {v, v};
  }
  return {parse_real(text.substr(0, comma), what), parse_real(text.substr(comma + 1), what)};
}

void add_interval(CLI::App* app, const std::string& flag, Interval& target,
                  const std::string& help) {
  app->add_option_function<std::string>(
         flag, [&target, flag](const std::string& s) { target = parse_interval(s, flag); },
         help + " (\"lo,hi\" or a single value)")
      ->type_name("LO,HI");
}

// Flags shared by every subcommand that draws random markets.
struct GenFlags {
  GenParams params;
  std::string size;

  void add(CLI::App* app, bool with_size) {
    if (with_size) app->add_option("--size", size, "market size L/M/N (buyers/data/UAV)");
    app->add_option("--seed", params.seed, "base seed")->capture_default_str();
    add_interval(app, "--data-size", params.data_size, "normalized data size per seller");
    app->add_option("--data-unit-scale", params.data_unit_scale, "raw units per normalized unit")
        ->capture_default_str();
    add_interval(app, "--unit-cost", params.unit_cost, "per-unit data cost");
    add_interval(app, "--distance", params.distance, "UAV-to-seller distance (m)");
    add_interval(app, "--unit-fly-cost", params.unit_fly_cost, "UAV cost per meter");
    add_interval(app, "--model-size", params.model_size, "model size (KB)");
    add_interval(app, "--rate", params.rate, "UAV transfer rate (KB/s)");
    add_interval(app, "--alpha1", params.alpha1, "valuation scale");
    app->add_option("--alpha2", params.alpha2, "valuation curvature")->capture_default_str();
    app->add_option("--required-data", params.required_data, "buyer data requirement (raw)")
        ->capture_default_str();
    app->add_flag("--untruthful", [this](std::int64_t) { params.truthful = false; },
                  "sellers bid true cost times a random factor");
    add_interval(app, "--bid-factor", params.bid_factor, "bid factor range for --untruthful");
  }

  GenParams resolve() const {
    GenParams p = params;
    if (!size.empty()) parse_size(size, p);
    p.validate();
    return p;
  }
};

struct FogaFlags {
  FogaConfig config;

  void add(CLI::App* app) {
    app->add_option("--foga-population", config.population_size, "FOGA population size")
        ->capture_default_str();
    app->add_option("--foga-generations", config.generations, "FOGA generations")
        ->capture_default_str();
    app->add_option("--foga-crossover", config.crossover_rate, "FOGA crossover rate")
        ->capture_default_str();
    app->add_option("--foga-mutation", config.mutation_rate, "FOGA per-gene mutation rate")
        ->capture_default_str();
    app->add_option("--foga-fragment-passes", config.fragment_passes,
                    "FOGA fragment-search passes per generation")
        ->capture_default_str();
  }
};

CriticalValueRule parse_rule(const std::string& s) {
  if (s == "threshold") return CriticalValueRule::kThreshold;
  if (s == "list-successor") return CriticalValueRule::kListSuccessor;
  throw std::invalid_argument("unknown critical-value rule: " + s);
}

SizeSpec parse_cap(const std::string& s) {
  GenParams p;
  parse_size(s, p);
  return {p.buyers, p.data_sellers, p.uav_sellers};
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string seed_text(std::uint64_t seed) { return std::to_string(seed); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seller-pair reverse auctions for federated-learning data markets"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option values");

  // generate
  GenFlags gen_flags;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("generate", "draw a random scenario and write it as JSON");
  gen_flags.add(gen, true);
  gen->add_option("--out,-o", gen_out, "output path, '-' for stdout")->capture_default_str();

  // run
  GenFlags run_gen;
  FogaFlags run_foga;
  std::string run_scenario, run_mechanism = "matching", run_rule = "threshold";
  std::string run_csv = "-", run_json, run_cap = "6/6/6";
  std::uint64_t run_rsbm_seed = 1;
  bool run_timing = false;
  auto* run = app.add_subcommand("run", "run one mechanism on one scenario");
  run->add_option("--scenario", run_scenario, "scenario JSON (otherwise generated)");
  run_gen.add(run, true);
  run->add_option("--mechanism,-m", run_mechanism, "vcg|matching|hvpm|lcpm|rsbm|foga")
      ->capture_default_str();
  run->add_option("--critical-rule", run_rule, "matching critical value: threshold|list-successor")
      ->capture_default_str();
  run_foga.add(run);
  run->add_option("--rsbm-seed", run_rsbm_seed, "RSBM seed")->capture_default_str();
  run->add_option("--foga-seed", run_foga.config.seed, "FOGA seed")->capture_default_str();
  run->add_option("--vcg-cap", run_cap, "largest L/M/N accepted by vcg")->capture_default_str();
  run->add_option("--csv", run_csv, "winners CSV path, '-' for stdout")->capture_default_str();
  run->add_option("--json", run_json, "outcome JSON path");
  run->add_flag("--with-timing", run_timing, "add elapsed time to the JSON dump");

  // compare
  GenFlags cmp_gen;
  FogaFlags cmp_foga;
  std::string cmp_sizes = "3/3/3", cmp_cap = "6/6/6", cmp_csv = "-", cmp_records;
  std::size_t cmp_trials = 100, cmp_threads = 0;
  bool cmp_timing = false;
  auto* cmp = app.add_subcommand("compare", "compare all methods over random trials");
  cmp->add_option("--sizes", cmp_sizes, "comma-separated L/M/N list")->capture_default_str();
  cmp->add_option("--trials", cmp_trials, "trials per size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmp_gen.add(cmp, false);
  cmp_foga.add(cmp);
  cmp->add_option("--vcg-cap", cmp_cap, "vcg is skipped above this L/M/N")->capture_default_str();
  cmp->add_option("--threads", cmp_threads, "worker threads, 0 = all cores");
  cmp->add_option("--csv", cmp_csv, "summary CSV path, '-' for stdout")->capture_default_str();
  cmp->add_option("--records", cmp_records, "per-trial CSV path");
  cmp->add_flag("--with-timing", cmp_timing, "add runtime columns");

  // audit
  GenFlags aud_gen;
  std::string aud_kind = "truthfulness", aud_mechs = "vcg,matching", aud_rule = "threshold";
  std::string aud_fixture = "none", aud_csv, aud_json = "-";
  AuditConfig aud_config;
  auto* aud = app.add_subcommand("audit", "property audit over random scenarios");
  aud->add_option("--kind", aud_kind, "truthfulness|ir|stability")->capture_default_str();
  aud->add_option("--scenarios", aud_config.scenarios, "number of scenarios")
      ->capture_default_str();
  aud_gen.add(aud, true);
  aud->add_option("--grid", aud_config.grid, "deviation grid points in [0.2, 3.0]")
      ->capture_default_str();
  aud->add_option("--mechanisms", aud_mechs, "comma-separated: vcg,matching")
      ->capture_default_str();
  aud->add_option("--critical-rule", aud_rule, "matching critical value: threshold|list-successor")
      ->capture_default_str();
  aud->add_option("--payment-fixture", aud_fixture,
                  "negative control: none|minus10|first-price")
      ->capture_default_str();
  aud->add_flag("--include-losers", aud_config.include_losers, "also deviate losing pairs");
  aud->add_option("--tolerance", aud_config.tolerance, "revenue tolerance")
      ->capture_default_str();
  aud->add_option("--threads", aud_config.threads, "worker threads, 0 = all cores");
  aud->add_option("--csv", aud_csv, "violations CSV path");
  aud->add_option("--json", aud_json, "report JSON path, '-' for stdout")->capture_default_str();

  // bench
  GenFlags bench_gen;
  FogaFlags bench_foga;
  std::string bench_sizes = "1/5/5,5/5/5,9/5/5", bench_cap = "9/9/9", bench_csv = "-";
  BenchConfig bench_config;
  auto* bench = app.add_subcommand("bench", "wall-clock timing per method and size");
  bench->add_option("--sizes", bench_sizes, "comma-separated L/M/N list")
      ->capture_default_str();
  bench->add_option("--trials", bench_config.trials, "timed runs per size")
      ->capture_default_str();
  bench_gen.add(bench, false);
  bench_foga.add(bench);
  bench->add_option("--vcg-cap", bench_cap, "vcg is skipped above this L/M/N")
      ->capture_default_str();
  bench->add_option("--vcg-timeout", bench_config.vcg_timeout_s,
                    "cumulative vcg seconds per size before giving up")
      ->capture_default_str();
  bench->add_option("--csv", bench_csv, "timing CSV path, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      const GenParams p = gen_flags.resolve();
      write_text(gen_out, scenario_to_json(generate(p)));
      return 0;
    }

    if (*run) {
      Scenario scenario;
      std::string origin;
      if (!run_scenario.empty()) {
        scenario = load_scenario(run_scenario);
        origin = run_scenario;
      } else {
        const GenParams p = run_gen.resolve();
        scenario = generate(p);
        origin = gen_params_json(p);
      }
      const Method method = parse_method(run_mechanism);
      const SizeSpec size{scenario.num_buyers(), scenario.num_data_sellers(),
                          scenario.num_uav_sellers()};
      if (method == Method::kVcg && !within_cap(size, parse_cap(run_cap))) {
        throw SizeError("vcg: market " + size.label() + " exceeds --vcg-cap " + run_cap);
      }
      MethodConfig mc;
      mc.matching.rule = parse_rule(run_rule);
      mc.foga = run_foga.config;
      mc.rsbm_seed = run_rsbm_seed;
      const MarketBids bids = build_joint_bids(scenario);
      const AuctionOutcome outcome = run_method(method, bids, mc);
      CsvDocument doc = winners_csv(bids, outcome);
      doc.comments.insert(doc.comments.begin(), {"scenario_seed", seed_text(scenario.seed)});
      doc.comments.insert(doc.comments.begin() + 1,
                          {run_scenario.empty() ? "gen_params" : "scenario", origin});
      write_text(run_csv, write_csv(doc));
      if (!run_json.empty()) write_text(run_json, outcome_json(bids, outcome, run_timing));
      return 0;
    }

    if (*cmp) {
      CompareConfig config;
      config.sizes = parse_sizes(cmp_sizes);
      config.trials = cmp_trials;
      config.params = cmp_gen.resolve();
      config.foga = cmp_foga.config;
      config.vcg_cap = parse_cap(cmp_cap);
      config.threads = cmp_threads;
      for (const auto& s : config.sizes) {
        if (!within_cap(s, config.vcg_cap)) {
          std::cerr << "warning: vcg skipped at " << s.label() << " (above --vcg-cap "
                    << cmp_cap << ")\n";
        }
      }
      const ComparisonReport report = run_compare(config);
      write_text(cmp_csv, write_csv(compare_csv(report, cmp_timing)));
      if (!cmp_records.empty()) {
        write_text(cmp_records, write_csv(records_csv(report, cmp_timing)));
      }
      return 0;
    }

    if (*aud) {
      const AuditKind kind = parse_audit_kind(aud_kind);
      aud_config.params = aud_gen.resolve();
      MatchingOptions mo;
      mo.rule = parse_rule(aud_rule);
      std::vector<Mechanism> mechanisms;
      std::stringstream names(aud_mechs);
      for (std::string name; std::getline(names, name, ',');) {
        const Method m = parse_method(name);
        if (m == Method::kVcg) {
          mechanisms.push_back(vcg_mechanism());
        } else if (m == Method::kMatching) {
          mechanisms.push_back(matching_mechanism(mo));
        } else {
          throw std::invalid_argument("audit: " + name + " has no payment rule");
        }
      }
      if (aud_fixture == "minus10") {
        for (auto& m : mechanisms) m = broken_payment_fixture(m, 10.0);
      } else if (aud_fixture == "first-price") {
        mechanisms = {first_price_fixture()};
      } else if (aud_fixture != "none") {
        throw std::invalid_argument("unknown payment fixture: " + aud_fixture);
      }
      const AuditReport report = run_audit(kind, mechanisms, aud_config);
      if (!aud_json.empty()) write_text(aud_json, audit_json(report, aud_config));
      if (!aud_csv.empty()) write_text(aud_csv, write_csv(audit_csv(report, aud_config)));
      std::cerr << audit_kind_name(kind) << ": " << report.scenarios << " scenarios, "
                << report.deviations << " checks, " << report.violations.size()
                << " violations\n";
      return report.passed() ? 0 : kExitViolations;
    }

    if (*bench) {
      bench_config.sizes = parse_sizes(bench_sizes);
      bench_config.params = bench_gen.resolve();
      bench_config.foga = bench_foga.config;
      bench_config.vcg_cap = parse_cap(bench_cap);
      write_text(bench_csv, write_csv(flmarket::bench_csv(run_bench(bench_config), bench_config)));
      return 0;
    }
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
