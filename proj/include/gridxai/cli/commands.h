// Copyright 2026 The gridxai Authors.
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

#ifndef GRIDXAI_CLI_COMMANDS_H_
#define GRIDXAI_CLI_COMMANDS_H_

#include <exception>
#include <memory>
#include <ostream>

#include "gridxai/cli/config.h"
#include "gridxai/ingest/transport.h"

namespace gridxai::cli {

enum ExitCode {
  kExitOk = 0,
  kExitConfig = 2,
  kExitData = 3,
  kExitRuntime = 4,
};

// Maps an exception to the exit code class it belongs to.
int ExitCodeFor(const std::exception& e);

// Each command writes the resolved config to <out>/config.json and its
// artifacts under <out>. `log` receives progress lines.

// Fetches all study series (fixtures, cache, or live) into the bundle. A
// transport may be injected for live mode.
void RunIngest(const RunConfig& c, std::ostream& log,
               std::unique_ptr<ingest::Transport> transport = nullptr);
// Bundle to dataset.csv and its provenance report.
void RunBuild(const RunConfig& c, std::ostream& log);
// Writes a synthetic study dataset in place of `build`.
void RunSynth(const RunConfig& c, std::ostream& log);
// Optional random search, cross-validation and the final model.
void RunTrain(const RunConfig& c, std::ostream& log);
// SHAP-guided recursive feature elimination.
void RunRfe(const RunConfig& c, std::ostream& log);
// Attributions, importances and interaction values of the trained model.
void RunExplain(const RunConfig& c, std::ostream& log);
// Plot-ready tables: importances, dependence, wind interactions, binned
// wind-flow volume grids and kernel densities.
void RunReport(const RunConfig& c, std::ostream& log);
// Proxy-replacement ablations listed in the config.
void RunAblate(const RunConfig& c, std::ostream& log);

}  // namespace gridxai::cli

#endif  // GRIDXAI_CLI_COMMANDS_H_
