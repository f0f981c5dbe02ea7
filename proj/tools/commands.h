// Copyright 2026 The Deontic Toolkit Authors.
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

#ifndef DEONTIC_TOOLS_COMMANDS_H_
#define DEONTIC_TOOLS_COMMANDS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace CLI {
class App;
}

namespace deontic::tools {

struct GlobalOptions {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
};

// Registers every subcommand on `app`. The selected command's action is
// stored in `action` and run by the caller after parsing.
void RegisterCommands(CLI::App &app, const GlobalOptions &global,
                      std::function<void()> &action);

// Parses argv and runs the selected command. Returns the process exit code.
int Main(int argc, char **argv);

}  // namespace deontic::tools

#endif  // DEONTIC_TOOLS_COMMANDS_H_
