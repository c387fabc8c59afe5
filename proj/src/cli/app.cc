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

#include "gridxai/cli/app.h"

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gridxai/cli/commands.h"
#include "gridxai/cli/config.h"
#include "gridxai/common/error.h"

namespace gridxai::cli {

int RunApp(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explainable redispatch-volume modelling toolkit", "gridxai"};
  app.require_subcommand(1, 1);

  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  bool offline = false;
  std::optional<std::string> fixtures;
  std::optional<std::string> out_dir;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--seed", seed, "Seed for sampling, splits and training");
  app.add_flag("--offline", offline, "Never use the network");
  app.add_option("--fixtures", fixtures, "Read platform data from fixture files");
  app.add_option("--out", out_dir, "Output directory");

  using Command = std::function<void(const RunConfig&, std::ostream&)>;
  const std::vector<std::pair<std::string, std::pair<std::string, Command>>> commands{
      {"ingest",
       {"Fetch platform series and redispatch records into a bundle",
        [](const RunConfig& c, std::ostream& log) { RunIngest(c, log); }}},
      {"build", {"Build the hourly dataset from a bundle", RunBuild}},
      {"synth", {"Write a synthetic study dataset", RunSynth}},
      {"train", {"Cross-validate and fit the model", RunTrain}},
      {"rfe", {"Recursive feature elimination", RunRfe}},
      {"explain", {"SHAP values, importances and interactions", RunExplain}},
      {"report", {"Figure data tables", RunReport}},
      {"ablate", {"Proxy-replacement ablations", RunAblate}},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands) subs[name] = app.add_subcommand(name, entry.first);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    RunConfig config = config_path ? LoadConfig(*config_path) : DefaultConfig();
    if (out_dir) config.out = *out_dir;
    if (seed) config.ApplySeed(*seed);
    if (offline) config.offline = true;
    if (fixtures) config.fixtures = *fixtures;
    config.Validate();
    for (const auto& [name, entry] : commands) {
      if (subs[name]->parsed()) entry.second(config, out);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    const auto* error = dynamic_cast<const Error*>(&e);
    err << "gridxai: "
        << (error ? std::string(ErrorKindName(error->kind())) + " error: " : "error: ")
        << e.what() << "\n";
    return ExitCodeFor(e);
  }
}

}  // namespace gridxai::cli
