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

// Input parsing and output serialization shared by the command-line tool.

#ifndef RANKREGRET_IO_H_
#define RANKREGRET_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankregret/metrics.h"
#include "rankregret/psi_estimator.h"
#include "rankregret/regret_sim.h"
#include "rankregret/transfer_bounds.h"
#include "rankregret/types.h"

namespace rankregret {

using Json = nlohmann::ordered_json;

struct ScoredList {
  std::string name;
  LabeledList labels;
  ScoreVector scores;
};

// One list per file with rows `label,score`. An optional `label,score` header
// is accepted, as are blank lines and lines starting with '#'. Throws
// ParseError naming the file and line.
ScoredList ParseScoredList(std::istream& in, const std::string& name);
ScoredList ReadScoredList(const std::filesystem::path& file);

// A single file, or every *.csv file of a directory in name order.
std::vector<ScoredList> ReadScoredLists(const std::filesystem::path& path);

Json ToJson(const MetricSpec& spec);
Json ToJson(const RegretReport& report);
Json ToJson(const TransferBound& bound);
Json ToJson(const RateFit& fit);
Json ToJson(const PsiCurve& curve);
Json ToJson(const BoundVerdict& verdict);
Json ToJson(const SimConfig& config);
Json ToJson(const LossSummary& summary);

// Missing fields keep their defaults. Throws InvalidArgumentError on unknown
// keys or values of the wrong type.
SimConfig SimConfigFromJson(const Json& json);

// Writes `# config: <compact json>`, the first line of every CSV output.
void WriteConfigComment(std::ostream& out, const Json& config);

void WriteSnapshotsCsv(std::ostream& out, const SimResult& result,
                       const Json& config);
void WritePsiCsv(std::ostream& out, const PsiCurve& curve, const Json& config);
void WriteRateCsv(std::ostream& out, const RateFit& fit, const Json& config);

// Scatter of NDCG regret against Acc regret, one color per loss.
std::string RenderScatterSvg(const SimResult& result);

}  // namespace rankregret

#endif  // RANKREGRET_IO_H_
