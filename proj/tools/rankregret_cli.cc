// Copyright 2026 The rankregret Authors
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

// rankregret: command-line front end.
//
//   rankregret metrics  --kind ndcg --k 10 data/
//   rankregret bounds   --direction auc-ndcg --n-pos 2 --n-neg 2
//   rankregret psi      --source acc --target auc --eta 0.9,0.6,0.3
//   rankregret verify   --n-max 7
//   rankregret simulate --seed 7 --out-dir out/
//   rankregret rates    --scenario balanced --out-dir out/
//
// Every subcommand accepts --config FILE, a JSON object whose keys are the
// long option names (with '_' for '-'); flags given on the command line win.
// Exit codes: 0 success, 1 verification failed, 2 input error, 3 capacity.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rankregret/bayes_oracle.h"
#include "rankregret/errors.h"
#include "rankregret/io.h"
#include "rankregret/metrics.h"
#include "rankregret/psi_estimator.h"
#include "rankregret/regret_sim.h"
#include "rankregret/transfer_bounds.h"
#include "rankregret/verification.h"

namespace fs = std::filesystem;
using namespace rankregret;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

// Reads a JSON object as CLI11 config items for the selected subcommand. A
// top-level "config" object (as written into summary.json) is used in place of
// the whole document.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* root) : root_(root) {}

  std::string to_config(const CLI::App* app, bool default_also, bool,
                        std::string) const override {
    Json json = Json::object();
    for (const CLI::Option* opt : app->get_options({})) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const std::string name = opt->get_lnames().front();
      if (opt->count() > 0) {
        json[name] = opt->results().size() == 1 ? Json(opt->results().front())
                                                : Json(opt->results());
      } else if (default_also && !opt->get_default_str().empty()) {
        json[name] = opt->get_default_str();
      }
    }
    return json.dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    Json json;
    try {
      json = Json::parse(input);
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("config is not valid JSON: ") +
                                 e.what());
    }
    if (json.is_object() && json.contains("config") &&
        json["config"].is_object()) {
      json = json["config"];
    }
    if (!json.is_object()) {
      throw CLI::ConversionError("config must be a JSON object");
    }
    std::vector<std::string> parents;
    if (!root_->get_subcommands().empty()) {
      parents.push_back(root_->get_subcommands().front()->get_name());
    }
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : json.items()) {
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      std::replace(item.name.begin(), item.name.end(), '_', '-');
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(Scalar(v));
      } else {
        item.inputs.push_back(Scalar(value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  static std::string Scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
  }

  const CLI::App* root_;
};

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) {
    throw InvalidArgumentError("cannot write " + path.string());
  }
}

void EnsureDirectory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw InvalidArgumentError("cannot create output directory " +
                               dir.string());
  }
}

double ParseLogBase(const std::string& text) {
  if (text == "e") return kNaturalLogBase;
  try {
    std::size_t used = 0;
    const double base = std::stod(text, &used);
    if (used == text.size()) return base;
  } catch (const std::exception&) {
  }
  throw InvalidArgumentError("log base must be a number or 'e', got '" + text +
                             "'");
}

std::string FormatRegret(double value) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(6);
  out << value;
  return out.str();
}

// ---------------------------------------------------------------- metrics

struct MetricsArgs {
  std::string kind = "ndcg";
  std::optional<std::size_t> k;
  std::string log_base = "2";
  double threshold = 0.5;
  std::string input;
};

void SetupMetrics(CLI::App& app, MetricsArgs& args) {
  auto* cmd = app.add_subcommand("metrics", "Metric values and regrets of "
                                            "label,score CSV lists");
  cmd->add_option("--kind", args.kind,
                  "acc, p, r, auc, ndcg, dcg, map or mrr")
      ->capture_default_str();
  cmd->add_option("--k", args.k, "Cutoff for truncated metrics");
  cmd->add_option("--log-base", args.log_base, "Discount log base, or 'e'")
      ->capture_default_str();
  cmd->add_option("--threshold", args.threshold, "Acc decision threshold")
      ->capture_default_str();
  cmd->add_option("input", args.input, "CSV file or directory of CSV files")
      ->required();
}

int RunMetrics(const MetricsArgs& args) {
  MetricSpec spec = ParseMetricSpec(args.kind);
  spec.truncation = args.k;
  spec.log_base = ParseLogBase(args.log_base);
  spec.threshold = args.threshold;
  spec.Validate();
  const auto lists = ReadScoredLists(args.input);
  if (lists.empty()) {
    std::cerr << "warning: no .csv files in " << args.input << "\n";
  }
  for (const ScoredList& list : lists) {
    Json record{{"list", list.name}, {"metric", ToJson(spec)}};
    try {
      record["report"] = ToJson(MetricRegret(spec, list.labels, list.scores));
    } catch (const UndefinedMetricError& e) {
      record["error"] = e.what();
    } catch (const InvalidArgumentError& e) {
      record["error"] = e.what();
    }
    std::cout << record.dump() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string direction = "auc-ndcg";
  std::size_t n_pos = 1;
  std::size_t n_neg = 1;
  std::optional<double> margin;
  std::string log_base = "e";
  std::optional<std::size_t> k1;
  std::optional<std::size_t> k2;
  std::string metric = "p";
  bool worst_case = false;
};

void SetupBounds(CLI::App& app, BoundsArgs& args) {
  auto* cmd = app.add_subcommand("bounds", "Closed-form transfer coefficient");
  cmd->add_option("--direction", args.direction,
                  "auc-ndcg, ndcg-auc, auc-acc, ndcg-acc, trunc, "
                  "trunc-reverse")
      ->capture_default_str();
  cmd->add_option("--n-pos", args.n_pos, "Number of positives")->required();
  cmd->add_option("--n-neg", args.n_neg, "Number of negatives")->required();
  cmd->add_option("--margin", args.margin, "Margin delta for the Acc bounds");
  cmd->add_option("--log-base", args.log_base, "Discount log base, or 'e'")
      ->capture_default_str();
  cmd->add_option("--k1", args.k1, "Smaller cutoff (truncation)");
  cmd->add_option("--k2", args.k2, "Larger cutoff (truncation)");
  cmd->add_option("--metric", args.metric, "p, r or ndcg (truncation)")
      ->capture_default_str();
  cmd->add_flag("--worst-case", args.worst_case,
                "Also evaluate the attainability instance");
}

int RunBounds(const BoundsArgs& args) {
  BoundParams params;
  params.n_pos = args.n_pos;
  params.n_neg = args.n_neg;
  params.n = args.n_pos + args.n_neg;
  params.margin = args.margin;
  params.log_base = ParseLogBase(args.log_base);
  params.k1 = args.k1;
  params.k2 = args.k2;
  const TransferDirection direction = ParseDirection(args.direction);
  if (direction == TransferDirection::kTruncation ||
      direction == TransferDirection::kTruncationReverse) {
    params.truncated_kind = ParseMetricSpec(args.metric).kind;
  }
  const TransferBound bound = MakeBound(direction, params);
  Json out{{"bound", ToJson(bound)}};
  if (params.n >= 3) {
    const auto d = DeltaExtremes(params.n, params.log_base);
    out["differentials"] = {{"delta_max", d.delta_max},
                            {"delta_min", d.delta_min}};
  }
  if (args.worst_case) {
    const WorstCase wc = WorstCaseConstruct(bound);
    out["worst_case"] = {
        {"labels", std::vector<int>(wc.labels.labels().begin(),
                                    wc.labels.labels().end())},
        {"perm", wc.perm.ToString()},
        {"source_regret", wc.regrets.source},
        {"target_regret", wc.regrets.target},
        {"ratio", wc.regrets.target / wc.regrets.source}};
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- psi

struct PsiArgs {
  std::string source = "auc";
  std::string target = "ndcg";
  std::vector<int> labels;
  std::vector<double> eta;
  std::optional<std::size_t> grid;
  std::string out_dir;
};

void SetupPsi(CLI::App& app, PsiArgs& args) {
  auto* cmd = app.add_subcommand("psi", "Brute-force regret transfer function");
  cmd->add_option("--source", args.source, "Source metric, e.g. auc")
      ->capture_default_str();
  cmd->add_option("--target", args.target, "Target metric, e.g. ndcg@3")
      ->capture_default_str();
  auto* labels = cmd->add_option("--labels", args.labels, "Labels, e.g. 1,1,0")
                     ->delimiter(',');
  cmd->add_option("--eta", args.eta, "Relevance probabilities")
      ->delimiter(',')
      ->excludes(labels);
  cmd->add_option("--grid", args.grid,
                  "Uniform grid size (default: attained source regrets)");
  cmd->add_option("--out-dir", args.out_dir,
                  "Write psi.csv and psi.json here instead of stdout");
}

int RunPsi(const PsiArgs& args) {
  const MetricSpec source = ParseMetricSpec(args.source);
  const MetricSpec target = ParseMetricSpec(args.target);
  if (args.labels.empty() == args.eta.empty()) {
    throw InvalidArgumentError("give exactly one of --labels and --eta");
  }
  std::vector<RegretSample> samples;
  PsiCurve curve;
  if (!args.labels.empty()) {
    const LabeledList labels(args.labels);
    samples = EnumerateRegretPairs(source, target, labels);
    curve = {source, target, labels.size(), labels, std::nullopt, {}};
  } else {
    const RelevanceVector eta(args.eta);
    samples = EnumerateExpectedRegretPairs(source, target, eta);
    curve = {source, target, eta.size(), std::nullopt, eta, {}};
  }
  std::optional<std::vector<double>> grid;
  if (args.grid) {
    double max_eps = 0.0;
    for (const RegretSample& s : samples) max_eps = std::max(max_eps, s.source);
    grid = UniformGrid(*args.grid, max_eps);
  }
  curve.points = PsiFromSamples(samples, grid);

  Json config{{"source", args.source}, {"target", args.target}};
  if (!args.labels.empty()) config["labels"] = args.labels;
  if (!args.eta.empty()) config["eta"] = args.eta;
  if (args.grid) config["grid"] = *args.grid;
  Json out{{"config", config}, {"curve", ToJson(curve)}};
  if (args.out_dir.empty()) {
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  EnsureDirectory(args.out_dir);
  std::ostringstream csv;
  WritePsiCsv(csv, curve, config);
  WriteFile(fs::path(args.out_dir) / "psi.csv", csv.str());
  WriteFile(fs::path(args.out_dir) / "psi.json", out.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------- verify

const std::vector<std::string> kAllChecks = {
    "auc-ndcg", "ndcg-auc", "auc-acc", "ndcg-acc",
    "trunc",    "trunc-reverse", "relations"};

struct VerifyArgs {
  std::size_t n_min = 3;
  std::size_t n_max = 7;
  std::vector<std::string> directions = kAllChecks;
  std::vector<double> margins{0.1, 0.25, 0.4};
  std::vector<double> levels{0.1, 0.3, 0.6, 0.9};
  std::size_t relations_n_max = 6;
  std::size_t max_witnesses = 5;
  std::string out;
};

void SetupVerify(CLI::App& app, VerifyArgs& args) {
  auto* cmd = app.add_subcommand(
      "verify", "Check transfer bounds and optimal-set relations by "
                "exhaustive enumeration");
  cmd->add_option("--n-min", args.n_min, "Smallest list length")
      ->capture_default_str();
  cmd->add_option("--n-max", args.n_max, "Largest list length (<= 9)")
      ->capture_default_str();
  cmd->add_option("--directions", args.directions,
                  "Subset of auc-ndcg, ndcg-auc, auc-acc, ndcg-acc, trunc, "
                  "trunc-reverse, relations")
      ->delimiter(',')
      ->check(CLI::IsMember(kAllChecks))
      ->capture_default_str();
  cmd->add_option("--margins", args.margins, "Margins for the Acc bounds")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--levels", args.levels, "Eta levels for set relations")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--relations-n-max", args.relations_n_max,
                  "Largest n for set relations")
      ->capture_default_str();
  cmd->add_option("--max-witnesses", args.max_witnesses,
                  "Failures listed per check")
      ->capture_default_str();
  cmd->add_option("--out", args.out, "Write the JSON verdict here");
}

int RunVerify(const VerifyArgs& args) {
  if (args.n_max > kMaxPsiSize) {
    throw CapacityError("verify --n-max", args.n_max, kMaxPsiSize);
  }
  bool all_passed = true;
  Json verdict{{"config",
                {{"n_min", args.n_min},
                 {"n_max", args.n_max},
                 {"directions", args.directions},
                 {"margins", args.margins},
                 {"levels", args.levels},
                 {"relations_n_max", args.relations_n_max}}}};
  Json checks = Json::array();

  for (const std::string& name : args.directions) {
    if (name == "relations") {
      const std::size_t hi = std::min(args.relations_n_max, args.n_max);
      const std::size_t lo = std::min<std::size_t>(2, hi);
      const SetRelationReport report = CheckSetRelations(args.levels, lo, hi);
      all_passed &= report.passed();
      Json rel = Json::array();
      for (const RelationTally& t : report.relations) {
        std::cout << "relations  " << t.relation << ": " << t.checked
                  << " checked, " << t.violations << " violations\n";
        if (t.witness) std::cout << "    witness " << *t.witness << "\n";
        rel.push_back({{"relation", t.relation},
                       {"checked", t.checked},
                       {"violations", t.violations},
                       {"witness", t.witness ? Json(*t.witness) : Json()}});
      }
      std::cout << "relations  strict listwise-in-acc inclusions: "
                << report.strict_inclusions << "\n";
      checks.push_back({{"check", "relations"},
                        {"passed", report.passed()},
                        {"instances", report.instances},
                        {"strict_inclusions", report.strict_inclusions},
                        {"relations", rel}});
      continue;
    }
    const TransferDirection direction = ParseDirection(name);
    const TransferDirection dirs[] = {direction};
    const BoundSweep sweep =
        SweepBounds(dirs, args.n_min, args.n_max, args.margins);
    all_passed &= sweep.passed();
    std::cout << name << ": " << sweep.rows.size() << " instances, "
              << sweep.failures() << " failures"
              << (direction == TransferDirection::kTruncationReverse
                      ? " (divergence expected)"
                      : "")
              << "\n";
    Json rows = Json::array();
    std::size_t listed = 0;
    for (const BoundSweepRow& row : sweep.rows) {
      rows.push_back(ToJson(row.verdict));
      if (row.verdict.passed() || listed >= args.max_witnesses) continue;
      ++listed;
      const BoundParams& p = row.verdict.bound.params;
      std::cout << "    fail n=" << row.n << " n+=" << row.n_pos;
      if (p.margin) std::cout << " delta=" << *p.margin;
      if (p.k1) {
        std::cout << " metric=" << KindName(*p.truncated_kind)
                  << " k1=" << *p.k1 << " k2=" << *p.k2;
      }
      if (row.verdict.violation) {
        std::cout << " perm=" << row.verdict.violation->ToString()
                  << " source=" << row.verdict.violation_regrets.source
                  << " target=" << row.verdict.violation_regrets.target
                  << " C=" << *row.verdict.bound.coefficient;
      }
      std::cout << "\n";
    }
    checks.push_back({{"check", name},
                      {"passed", sweep.passed()},
                      {"failures", sweep.failures()},
                      {"verdicts", rows}});
  }
  verdict["passed"] = all_passed;
  verdict["checks"] = checks;
  if (!args.out.empty()) WriteFile(args.out, verdict.dump(2) + "\n");
  std::cout << (all_passed ? "verify: all checks passed\n"
                           : "verify: some checks failed\n");
  return all_passed ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  SimConfig config;
  std::vector<std::string> losses{"pointwise", "pairwise", "listwise"};
  std::string alpha_mode = "grid";
  std::string regret_form = "graded";
  std::string out_dir = "sim_out";
  std::vector<std::string> formats{"csv", "json"};
};

void SetupSimulate(CLI::App& app, SimulateArgs& args) {
  auto* cmd = app.add_subcommand("simulate", "Regret-manifold simulation");
  SimConfig& c = args.config;
  cmd->add_option("-n", c.n, "Items per list")->capture_default_str();
  cmd->add_option("--snapshots", c.snapshots, "Snapshots per loss")
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--losses", args.losses, "pointwise, pairwise, listwise")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--alpha-mode", args.alpha_mode, "grid or random")
      ->capture_default_str();
  cmd->add_option("--noise-scale", c.model.noise_scale,
                  "Gaussian noise scale")
      ->capture_default_str();
  cmd->add_option("--swap-fraction", c.model.swap_fraction,
                  "Pairwise head swaps at alpha = 0, fraction of n")
      ->capture_default_str();
  cmd->add_option("--threshold", c.threshold, "Acc decision threshold")
      ->capture_default_str();
  cmd->add_option("--log-base", c.log_base, "NDCG discount log base")
      ->capture_default_str();
  cmd->add_option("--regret-form", args.regret_form, "graded or binarized")
      ->capture_default_str();
  cmd->add_option("--out-dir", args.out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_option("--format", args.formats, "Any of csv, json, svg")
      ->delimiter(',')
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();
}

int RunSimulate(SimulateArgs& args) {
  SimConfig& config = args.config;
  config.losses.clear();
  for (const std::string& name : args.losses) {
    config.losses.push_back(ParseLoss(name));
  }
  config.alpha_mode = ParseAlphaMode(args.alpha_mode);
  config.regret_form = ParseRegretForm(args.regret_form);
  config.Validate();
  const Json config_json = ToJson(config);

  const fs::path dir(args.out_dir);
  EnsureDirectory(dir);
  const SimResult result = RunSimulation(config);
  auto wants = [&](const char* format) {
    return std::find(args.formats.begin(), args.formats.end(), format) !=
           args.formats.end();
  };
  if (wants("csv")) {
    std::ostringstream csv;
    WriteSnapshotsCsv(csv, result, config_json);
    WriteFile(dir / "snapshots.csv", csv.str());
  }
  if (wants("json")) {
    Json summary = Json::array();
    for (const LossSummary& s : result.summary) summary.push_back(ToJson(s));
    const Json doc{{"config", config_json}, {"summary", summary}};
    WriteFile(dir / "summary.json", doc.dump(2) + "\n");
  }
  if (wants("svg")) {
    WriteFile(dir / "ndcg_vs_acc.svg", RenderScatterSvg(result));
  }

  std::cout << "seed " << config.seed << ", n = " << config.n << ", "
            << config.snapshots << " snapshots per loss\n";
  std::cout << "loss        mean r_acc  mean r_auc  mean r_ndcg\n";
  for (const LossSummary& s : result.summary) {
    std::string name(LossName(s.loss));
    name.resize(12, ' ');
    std::cout << name << FormatRegret(s.mean_r_acc) << "    "
              << FormatRegret(s.mean_r_auc) << "    "
              << FormatRegret(s.mean_r_ndcg) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- rates

struct RatesArgs {
  std::vector<std::string> scenarios{"balanced", "imbalanced"};
  std::vector<std::size_t> grid{100, 1000, 10000, 100000, 1000000};
  double margin = 0.25;
  std::string log_base = "e";
  std::string out_dir;
};

void SetupRates(CLI::App& app, RatesArgs& args) {
  auto* cmd = app.add_subcommand("rates", "Asymptotic growth of the transfer "
                                          "coefficients");
  cmd->add_option("--scenario", args.scenarios, "balanced and/or imbalanced")
      ->delimiter(',')
      ->check(CLI::IsMember({"balanced", "imbalanced"}))
      ->capture_default_str();
  cmd->add_option("--grid", args.grid, "List lengths, strictly increasing")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--margin", args.margin, "Margin delta for the ->Acc rates")
      ->capture_default_str();
  cmd->add_option("--log-base", args.log_base, "Discount log base, or 'e'")
      ->capture_default_str();
  cmd->add_option("--out-dir", args.out_dir,
                  "Write one n,C CSV per direction and rates.json here");
}

int RunRates(const RatesArgs& args) {
  const double base = ParseLogBase(args.log_base);
  const Json config{{"scenarios", args.scenarios},
                    {"grid", args.grid},
                    {"margin", args.margin},
                    {"log_base", args.log_base}};
  constexpr RateDirection kDirections[] = {
      RateDirection::kRankToList, RateDirection::kListToRank,
      RateDirection::kRankToPoint, RateDirection::kListToPoint};
  if (!args.out_dir.empty()) EnsureDirectory(args.out_dir);

  Json fits = Json::array();
  bool header = false;
  for (const std::string& name : args.scenarios) {
    const RateScenario scenario = ParseScenario(name);
    for (RateDirection direction : kDirections) {
      const RateFit fit =
          AsymptoticRateScan(scenario, direction, args.grid, args.margin, base);
      fits.push_back(ToJson(fit));
      if (!header) {
        std::cout << "scenario    direction  growth      slope     spread\n";
        header = true;
      }
      std::string s(name), d(RateDirectionName(direction)), g(fit.growth);
      s.resize(12, ' ');
      d.resize(11, ' ');
      g.resize(12, ' ');
      std::cout << s << d << g << FormatRegret(fit.slope) << "  "
                << FormatRegret(fit.spread) << "\n";
      if (!args.out_dir.empty()) {
        std::string file = name + "_" + std::string(RateDirectionName(direction));
        std::replace(file.begin(), file.end(), '-', '_');
        file.erase(std::remove(file.begin(), file.end(), '>'), file.end());
        std::transform(file.begin(), file.end(), file.begin(),
                       [](unsigned char ch) { return std::tolower(ch); });
        std::ostringstream csv;
        WriteRateCsv(csv, fit, config);
        WriteFile(fs::path(args.out_dir) / (file + ".csv"), csv.str());
      }
    }
  }
  if (!args.out_dir.empty()) {
    const Json doc{{"config", config}, {"fits", fits}};
    WriteFile(fs::path(args.out_dir) / "rates.json", doc.dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regret and transfer analysis of ranking metrics",
               "rankregret"};
  app.config_formatter(std::make_shared<JsonConfig>(&app));
  app.set_config("--config", "", "JSON config file; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.fallthrough();
  app.require_subcommand(1);

  MetricsArgs metrics;
  BoundsArgs bounds;
  PsiArgs psi;
  VerifyArgs verify;
  SimulateArgs simulate;
  RatesArgs rates;
  SetupMetrics(app, metrics);
  SetupBounds(app, bounds);
  SetupPsi(app, psi);
  SetupVerify(app, verify);
  SetupSimulate(app, simulate);
  SetupRates(app, rates);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "metrics") return RunMetrics(metrics);
    if (name == "bounds") return RunBounds(bounds);
    if (name == "psi") return RunPsi(psi);
    if (name == "verify") return RunVerify(verify);
    if (name == "simulate") return RunSimulate(simulate);
    if (name == "rates") return RunRates(rates);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
