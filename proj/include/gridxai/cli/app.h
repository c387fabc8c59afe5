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

#ifndef GRIDXAI_CLI_APP_H_
#define GRIDXAI_CLI_APP_H_

#include <ostream>

namespace gridxai::cli {

// Parses the command line, runs one subcommand and returns the process exit
// code. Progress goes to `out`, diagnostics to `err`.
int RunApp(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gridxai::cli

#endif  // GRIDXAI_CLI_APP_H_
