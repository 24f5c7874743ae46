// Copyright 2026 The Swapnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWAPNET_CLI_H
#define SWAPNET_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace swapnet {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,  // invariant violation, oracle mismatch, numeric failure
    kExitUsage = 2,
    kExitInconclusive = 3,
};

/// Runs one command. args[0] is the program name. Output goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace swapnet

#endif
