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

#include "rankregret/io.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rankregret/errors.h"

namespace rankregret {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Shortest representation that reads back to the same double.
std::string FormatDouble(double value) {
  std::array<char, 32> buf;
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                       value);
  return std::string(buf.data(), end);
}

Json OptionalJson(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json OptionalJson(const std::optional<std::size_t>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json PermJson(const std::optional<Permutation>& perm) {
  return perm ? Json(perm->ToString()) : Json(nullptr);
}

template <typename T>
T Field(const Json& json, const char* key) {
  try {
    return json.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("config field '") + key +
                               "': " + e.what());
  }
}

}  // namespace

ScoredList ParseScoredList(std::istream& in, const std::string& name) {
  std::vector<int> labels;
  std::vector<double> scores;
  std::string line;
  std::size_t line_no = 0;
  bool seen_row = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos ||
        text.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(name, line_no, "expected two fields 'label,score'");
    }
    const std::string_view label_text = Trim(text.substr(0, comma));
    const std::string_view score_text = Trim(text.substr(comma + 1));
    if (!seen_row && label_text == "label" && score_text == "score") {
      seen_row = true;
      continue;
    }
    seen_row = true;
    if (label_text != "0" && label_text != "1") {
      throw ParseError(name, line_no,
                       "label must be 0 or 1, got '" + std::string(label_text) +
                           "'");
    }
    double score = 0.0;
    const auto [ptr, ec] = std::from_chars(
        score_text.data(), score_text.data() + score_text.size(), score);
    if (ec != std::errc() || ptr != score_text.data() + score_text.size() ||
        !std::isfinite(score)) {
      throw ParseError(name, line_no,
                       "score must be a finite number, got '" +
                           std::string(score_text) + "'");
    }
    labels.push_back(label_text == "1" ? 1 : 0);
    scores.push_back(score);
  }
  if (labels.empty()) throw ParseError(name, line_no, "no data rows");
  return {name, LabeledList(std::move(labels)),
          ScoreVector(std::move(scores))};
}

ScoredList ReadScoredList(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string(), 0, "cannot open file");
  return ParseScoredList(in, file.string());
}

std::vector<ScoredList> ReadScoredLists(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_directory(path, ec)) {
    if (!std::filesystem::exists(path, ec)) {
      throw ParseError(path.string(), 0, "no such file or directory");
    }
    return {ReadScoredList(path)};
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<ScoredList> lists;
  for (const auto& file : files) lists.push_back(ReadScoredList(file));
  return lists;
}

Json ToJson(const MetricSpec& spec) {
  Json json{{"name", spec.Name()},
            {"kind", KindName(spec.kind)},
            {"group", GroupName(spec.group())},
            {"k", OptionalJson(spec.truncation)}};
  if (spec.kind == MetricKind::kAcc) {
    json["threshold"] = spec.threshold;
  } else {
    json["log_base"] = spec.log_base;
  }
  return json;
}

Json ToJson(const RegretReport& report) {
  return {{"value", report.value},
          {"ideal", report.ideal},
          {"regret_abs", report.regret_abs},
          {"regret_rel", report.regret_rel},
          {"degenerate", report.degenerate}};
}

Json ToJson(const TransferBound& bound) {
  const BoundParams& p = bound.params;
  Json params{{"n", p.n},
              {"n_pos", p.n_pos},
              {"n_neg", p.n_neg},
              {"margin", OptionalJson(p.margin)},
              {"k1", OptionalJson(p.k1)},
              {"k2", OptionalJson(p.k2)},
              {"log_base", p.log_base}};
  if (p.truncated_kind) params["metric"] = KindName(*p.truncated_kind);
  return {{"direction", DirectionName(bound.direction)},
          {"coefficient", OptionalJson(bound.coefficient)},
          {"divergent", bound.divergent},
          {"params", params}};
}

Json ToJson(const RateFit& fit) {
  Json points = Json::array();
  for (const RatePoint& p : fit.points) {
    points.push_back({{"n", p.n}, {"coefficient", p.coefficient}});
  }
  return {{"scenario", ScenarioName(fit.scenario)},
          {"direction", RateDirectionName(fit.direction)},
          {"slope", fit.slope},
          {"intercept", fit.intercept},
          {"growth", fit.growth},
          {"spread", fit.spread},
          {"margin", fit.margin},
          {"points", points}};
}

Json ToJson(const PsiCurve& curve) {
  Json points = Json::array();
  for (const PsiPoint& p : curve.points) {
    points.push_back({{"epsilon", p.epsilon}, {"psi", p.psi}});
  }
  Json json{{"source", ToJson(curve.source)},
            {"target", ToJson(curve.target)},
            {"n", curve.n}};
  if (curve.labels) {
    json["labels"] = std::vector<int>(curve.labels->labels().begin(),
                                      curve.labels->labels().end());
  }
  if (curve.eta) {
    json["eta"] = std::vector<double>(curve.eta->values().begin(),
                                      curve.eta->values().end());
  }
  json["points"] = points;
  return json;
}

Json ToJson(const BoundVerdict& v) {
  Json json{{"bound", ToJson(v.bound)},
            {"passed", v.passed()},
            {"enumerated", v.enumerated}};
  if (v.bound.divergent) {
    json["divergence_observed"] = v.divergence_observed;
    json["divergence_witness"] = PermJson(v.divergence_witness);
    return json;
  }
  json["dominance"] = v.dominance;
  json["min_slack"] = v.min_slack;
  json["violation"] = PermJson(v.violation);
  if (v.violation) {
    json["violation_regrets"] = {{"source", v.violation_regrets.source},
                                 {"target", v.violation_regrets.target}};
  }
  json["tightness_ratio"] = v.tightness_ratio;
  json["attains"] = v.attains;
  json["attaining"] = PermJson(v.attaining);
  return json;
}

Json ToJson(const SimConfig& config) {
  Json losses = Json::array();
  for (LossKind loss : config.losses) losses.push_back(LossName(loss));
  return {{"n", config.n},
          {"snapshots", config.snapshots},
          {"seed", config.seed},
          {"losses", losses},
          {"alpha_mode", AlphaModeName(config.alpha_mode)},
          {"noise_scale", config.model.noise_scale},
          {"swap_fraction", config.model.swap_fraction},
          {"threshold", config.threshold},
          {"log_base", config.log_base},
          {"regret_form", RegretFormName(config.regret_form)}};
}

Json ToJson(const LossSummary& s) {
  return {{"loss", LossName(s.loss)},
          {"count", s.count},
          {"mean_r_acc", s.mean_r_acc},
          {"mean_r_auc", s.mean_r_auc},
          {"mean_r_ndcg", s.mean_r_ndcg},
          {"auc_undefined", s.auc_undefined}};
}

SimConfig SimConfigFromJson(const Json& json) {
  if (!json.is_object()) {
    throw InvalidArgumentError("simulation config must be a JSON object");
  }
  SimConfig config;
  for (const auto& [key, value] : json.items()) {
    if (key == "n") {
      config.n = Field<std::size_t>(json, "n");
    } else if (key == "snapshots") {
      config.snapshots = Field<std::size_t>(json, "snapshots");
    } else if (key == "seed") {
      config.seed = Field<std::uint64_t>(json, "seed");
    } else if (key == "losses") {
      config.losses.clear();
      for (const auto& name : Field<std::vector<std::string>>(json, "losses")) {
        config.losses.push_back(ParseLoss(name));
      }
    } else if (key == "alpha_mode") {
      config.alpha_mode =
          ParseAlphaMode(Field<std::string>(json, "alpha_mode"));
    } else if (key == "noise_scale") {
      config.model.noise_scale = Field<double>(json, "noise_scale");
    } else if (key == "swap_fraction") {
      config.model.swap_fraction = Field<double>(json, "swap_fraction");
    } else if (key == "threshold") {
      config.threshold = Field<double>(json, "threshold");
    } else if (key == "log_base") {
      config.log_base = Field<double>(json, "log_base");
    } else if (key == "regret_form") {
      config.regret_form =
          ParseRegretForm(Field<std::string>(json, "regret_form"));
    } else {
      throw InvalidArgumentError("unknown config field '" + key + "'");
    }
  }
  config.Validate();
  return config;
}

void WriteConfigComment(std::ostream& out, const Json& config) {
  out << "# config: " << config.dump() << '\n';
}

void WriteSnapshotsCsv(std::ostream& out, const SimResult& result,
                       const Json& config) {
  WriteConfigComment(out, config);
  out << "loss,alpha,r_acc,r_auc,r_ndcg\n";
  for (const Snapshot& s : result.snapshots) {
    out << LossName(s.loss) << ',' << FormatDouble(s.alpha) << ','
        << FormatDouble(s.r_acc) << ','
        << (s.r_auc ? FormatDouble(*s.r_auc) : "undefined") << ','
        << FormatDouble(s.r_ndcg) << '\n';
  }
}

void WritePsiCsv(std::ostream& out, const PsiCurve& curve,
                 const Json& config) {
  WriteConfigComment(out, config);
  out << "epsilon,psi\n";
  for (const PsiPoint& p : curve.points) {
    out << FormatDouble(p.epsilon) << ',' << FormatDouble(p.psi) << '\n';
  }
}

void WriteRateCsv(std::ostream& out, const RateFit& fit, const Json& config) {
  WriteConfigComment(out, config);
  out << "n,C\n";
  for (const RatePoint& p : fit.points) {
    out << p.n << ',' << FormatDouble(p.coefficient) << '\n';
  }
}

std::string RenderScatterSvg(const SimResult& result) {
  constexpr double kWidth = 640, kHeight = 480, kPad = 60;
  constexpr std::array<const char*, 3> kColors = {"#1f77b4", "#d62728",
                                                  "#2ca02c"};
  double max_x = 0.0, max_y = 0.0;
  for (const Snapshot& s : result.snapshots) {
    max_x = std::max(max_x, s.r_acc);
    max_y = std::max(max_y, s.r_ndcg);
  }
  if (max_x <= 0.0) max_x = 1.0;
  if (max_y <= 0.0) max_y = 1.0;
  const double plot_w = kWidth - 2 * kPad;
  const double plot_h = kHeight - 2 * kPad;
  auto px = [&](double x) { return kPad + plot_w * x / max_x; };
  auto py = [&](double y) { return kHeight - kPad - plot_h * y / max_y; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" "
      << "font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << kPad << "\" y1=\"" << kHeight - kPad << "\" x2=\""
      << kWidth - kPad << "\" y2=\"" << kHeight - kPad
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kPad << "\" y1=\"" << kPad << "\" x2=\"" << kPad
      << "\" y2=\"" << kHeight - kPad << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 20
      << "\" text-anchor=\"middle\">Acc regret (max " << FormatDouble(max_x)
      << ")</text>\n";
  svg << "<text x=\"20\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << kHeight / 2
      << ")\">NDCG regret (max " << FormatDouble(max_y) << ")</text>\n";
  for (const Snapshot& s : result.snapshots) {
    svg << "<circle cx=\"" << FormatDouble(px(s.r_acc)) << "\" cy=\""
        << FormatDouble(py(s.r_ndcg)) << "\" r=\"2\" fill=\""
        << kColors[static_cast<std::size_t>(s.loss)]
        << "\" fill-opacity=\"0.6\"/>\n";
  }
  double legend_y = kPad;
  for (LossKind loss : result.config.losses) {
    svg << "<circle cx=\"" << kWidth - kPad - 80 << "\" cy=\"" << legend_y
        << "\" r=\"4\" fill=\"" << kColors[static_cast<std::size_t>(loss)]
        << "\"/>\n";
    svg << "<text x=\"" << kWidth - kPad - 70 << "\" y=\"" << legend_y + 4
        << "\">" << LossName(loss) << "</text>\n";
    legend_y += 18;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace rankregret
