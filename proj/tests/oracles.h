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

#ifndef SWAPNET_TESTS_ORACLES_H
#define SWAPNET_TESTS_ORACLES_H

// Brute-force references used only by the tests. Each one deliberately
// takes a different route from the library code it checks.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(uint64_t n) {
    BigInt r = 1;
    for (uint64_t i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

/// n! / (k! (n-k)!).
inline BigInt binom(int64_t n, int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    return factorial(static_cast<uint64_t>(n)) /
           (factorial(static_cast<uint64_t>(k)) * factorial(static_cast<uint64_t>(n - k)));
}

/// a_0 .. a_{count-1} mod m by unrolling the recurrence in a flat vector.
inline std::vector<uint64_t> unrolled(uint64_t d, uint64_t m, uint64_t count) {
    std::vector<uint64_t> a;
    for (uint64_t j = 0; j < count; ++j) {
        a.push_back(j < d ? 1 % m : (a[j - 1] + a[j - d]) % m);
    }
    return a;
}

/// Smallest P >= 1 with a_P .. a_{P+d-1} all equal to a_0 .. a_{d-1}, found
/// by comparing stored windows. Returns 0 if none below `limit`.
inline uint64_t stored_period(uint64_t d, uint64_t m, uint64_t limit) {
    const auto a = unrolled(d, m, limit + d);
    for (uint64_t p = 1; p < limit; ++p) {
        bool same = true;
        for (uint64_t i = 0; i < d && same; ++i) {
            same = a[p + i] == a[i];
        }
        if (same) {
            return p;
        }
    }
    return 0;
}

/// Applies the gates to explicit digit vectors.
template <class Gates>
std::vector<uint64_t> run_digits(std::vector<uint64_t> digits, const Gates &gates, uint64_t d) {
    for (const auto &g : gates) {
        digits[g.target] = (digits[g.target] + digits[g.control]) % d;
    }
    return digits;
}

}  // namespace oracle

#endif
