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

#ifndef SWAPNET_CYCLE_H
#define SWAPNET_CYCLE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swapnet/kernels.h"
#include "swapnet/seqcore.h"

namespace swapnet {

struct PrimePower {
    uint64_t p;
    uint64_t exponent;
    uint64_t value() const;
    bool operator==(const PrimePower &) const = default;
};

/// n = prod p^exponent, primes strictly increasing.
struct Factorization {
    uint64_t n;
    std::vector<PrimePower> factors;

    bool is_prime_power() const {
        return factors.size() == 1;
    }
};

/// Trial division. n >= 2.
Factorization factorize(uint64_t n);

enum class CycleMethod { direct, composed, predicted_and_verified };

std::string_view to_string(CycleMethod method);

struct FactorCycle {
    uint64_t prime_power;
    uint64_t length;
};

struct CycleReport {
    uint64_t d = 0;
    /// Cycle length of (a_j) mod d. Arbitrary precision: the LCM of several
    /// per-factor lengths can exceed 64 bits.
    BigInt length;
    std::vector<FactorCycle> per_factor;
    /// length mod d.
    uint64_t shift = 0;
    /// Input state e_i ends up on system permutation[i] = (i + shift) mod d.
    std::vector<uint64_t> permutation;
    CycleMethod method = CycleMethod::direct;
    /// Set for prime powers: whether the detected length matches
    /// p^(m-1) (p^(2m) - 1).
    std::optional<bool> conjecture_holds;
};

inline constexpr uint64_t kFallbackBudget = 100'000'000;

/// First return of the d-term window of (a_j mod m) to all ones, plus
/// whether it was preceded by d-1 zeros (a_{P-d+1} .. a_{P-1} = 0, a_P = 1).
struct WindowReturn {
    uint64_t period;
    bool zero_tail;
};

/// Searches candidate periods P = 1 .. budget. Throws Inconclusive carrying
/// the number of candidates examined when none returns.
WindowReturn find_window_return(uint64_t d, uint64_t m, uint64_t budget);

/// Cycle length of the order-d recurrence mod m by direct window detection.
uint64_t cycle_length_direct(uint64_t d, uint64_t m, uint64_t budget);

/// Independently re-streams the sequence with SequenceWindow and checks
/// a_P = 1 and a_{P-1} = ... = a_{P-d+1} = 0.
bool tail_shape_holds(uint64_t d, uint64_t m, uint64_t period);

/// p^(m-1) (p^(2m) - 1); equals p^2 - 1 for m = 1.
uint64_t predicted_cycle(uint64_t p, uint64_t m);

/// 2 * predicted_cycle when modulus == d == p^m, otherwise kFallbackBudget.
uint64_t default_budget(uint64_t d, uint64_t modulus);

/// Factorises d, detects the cycle mod each prime-power factor and takes
/// the LCM. Cross-checks d^2 - 1 for prime d (InvariantViolation on
/// mismatch) and annotates the prime-power prediction.
CycleReport cycle_length(uint64_t d, std::optional<uint64_t> budget = std::nullopt);

/// True iff the detected cycle mod p^m equals predicted_cycle(p, m) and the
/// zero-tail condition holds at that length.
bool verify_conjecture(uint64_t p, uint64_t m, std::optional<uint64_t> budget = std::nullopt);

struct InducedShift {
    uint64_t shift;
    std::vector<uint64_t> permutation;
};

InducedShift induced_shift(uint64_t d, std::optional<uint64_t> budget = std::nullopt);

struct ScanEntry {
    uint64_t d;
    std::optional<CycleReport> report;
    /// Non-empty when the budget ran out for this dimension.
    std::string inconclusive;
};

/// Reports for every 2 <= d <= max_n, in dimension order. Dimensions are
/// independent jobs; Exec::parallel spreads them over OpenMP threads.
std::vector<ScanEntry> scan(uint64_t max_n, std::optional<uint64_t> budget = std::nullopt,
                            Exec exec = Exec::parallel, int jobs = 0);

}  // namespace swapnet

#endif
