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

#ifndef SWAPNET_INVARIANTS_H
#define SWAPNET_INVARIANTS_H

// Self-check suite behind `swapnet check`: every module's properties run
// against their independent oracles.

#include <cstdint>
#include <string>
#include <vector>

namespace swapnet {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteOptions {
    uint64_t max_order = 12;
    uint64_t max_index = 2000;
    /// Composite dimensions up to this bound get direct-vs-LCM detection.
    /// d = 10 alone costs ~1.7e9 steps, so the default stops at 9.
    uint64_t composition_bound = 9;
};

std::vector<CheckResult> run_invariant_suite(const SuiteOptions &options = {});

}  // namespace swapnet

#endif
