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

#ifndef SWAPNET_SERIALIZE_H
#define SWAPNET_SERIALIZE_H

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "swapnet/cycle.h"
#include "swapnet/genfun.h"
#include "swapnet/network.h"
#include "swapnet/seqcore.h"

namespace swapnet {

using Json = nlohmann::ordered_json;

/// 10 significant digits, shortest form.
std::string format_real(double x);
/// "re+imi" / "re-imi" with 10 significant digits; purely real values print
/// without an imaginary part.
std::string format_complex(Complex z);

/// Exact integers as decimal strings (they outgrow 64 bits quickly).
Json sequence_to_json(const std::vector<BigInt> &terms);
Json sequence_to_json(const std::vector<Residue> &terms);

/// A number when it fits in uint64, else a decimal string.
Json bigint_to_json(const BigInt &value);

Json to_json(const CycleReport &report);
Json to_json(const ScanEntry &entry);
Json to_json(const ClosedForm &cf);
Json to_json(const SwapVerdict &verdict);

/// Header "d,cycle_length,factor_lengths,shift,method,conjecture" and one
/// row per entry; inconclusive rows leave the length empty.
std::string scan_to_csv(const std::vector<ScanEntry> &entries);

}  // namespace swapnet

#endif
