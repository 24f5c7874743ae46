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

#include "swapnet/cycle.h"

#include <gtest/gtest.h>

#include <numeric>

#include "oracles.h"
#include "swapnet/errors.h"

using namespace swapnet;

TEST(factorize, basic) {
    const auto f = factorize(360);
    ASSERT_EQ(f.factors.size(), 3u);
    EXPECT_EQ(f.factors[0], (PrimePower{2, 3}));
    EXPECT_EQ(f.factors[1], (PrimePower{3, 2}));
    EXPECT_EQ(f.factors[2], (PrimePower{5, 1}));
    EXPECT_TRUE(factorize(243).is_prime_power());
    EXPECT_FALSE(factorize(12).is_prime_power());
    EXPECT_THROW(factorize(1), InvalidArgument);
}

TEST(factorize, product_round_trip) {
    for (uint64_t n = 2; n < 2000; ++n) {
        uint64_t prod = 1;
        for (const auto &pp : factorize(n).factors) {
            ASSERT_TRUE(is_prime(pp.p));
            prod *= pp.value();
        }
        ASSERT_EQ(prod, n);
    }
}

TEST(method_names, stable) {
    EXPECT_EQ(to_string(CycleMethod::direct), "direct");
    EXPECT_EQ(to_string(CycleMethod::composed), "composed");
    EXPECT_EQ(to_string(CycleMethod::predicted_and_verified), "predicted-and-verified");
}

TEST(cycle_length_direct, matches_stored_windows) {
    for (uint64_t d = 2; d <= 8; ++d) {
        for (uint64_t m = 2; m <= 9; ++m) {
            const uint64_t want = oracle::stored_period(d, m, 20000);
            if (want == 0) {
                continue;
            }
            ASSERT_EQ(cycle_length_direct(d, m, 20000), want) << d << " " << m;
        }
    }
}

TEST(cycle_length_direct, budget_exhaustion) {
    EXPECT_THROW(cycle_length_direct(7, 7, 47), Inconclusive);
    EXPECT_EQ(cycle_length_direct(7, 7, 48), 48u);
    try {
        cycle_length_direct(5, 5, 10);
        FAIL();
    } catch (const Inconclusive &ex) {
        EXPECT_GE(ex.steps_taken(), 10u);
    }
}

TEST(find_window_return, zero_tail_for_matching_modulus) {
    for (uint64_t d : {2, 3, 4, 5, 7, 8, 9}) {
        const auto w = find_window_return(d, d, 10000);
        EXPECT_TRUE(w.zero_tail) << d;
        EXPECT_TRUE(tail_shape_holds(d, d, w.period)) << d;
    }
}

TEST(table_one, cycle_lengths) {
    const std::vector<uint64_t> want = {3, 8, 30, 24, 6552, 48, 252, 240};
    for (uint64_t d = 2; d <= 9; ++d) {
        EXPECT_EQ(cycle_length(d).length, want[d - 2]) << d;
    }
}

TEST(cycle_length, prime_squares_minus_one) {
    for (uint64_t p : {2, 3, 5, 7, 11, 13}) {
        const auto r = cycle_length(p);
        EXPECT_EQ(r.length, p * p - 1);
        EXPECT_EQ(r.method, CycleMethod::predicted_and_verified);
        ASSERT_TRUE(r.conjecture_holds.has_value());
        EXPECT_TRUE(*r.conjecture_holds);
    }
}

TEST(cycle_length, composite_uses_lcm) {
    const auto r = cycle_length(10);
    EXPECT_EQ(r.method, CycleMethod::composed);
    ASSERT_EQ(r.per_factor.size(), 2u);
    EXPECT_EQ(r.per_factor[0].prime_power, 2u);
    EXPECT_EQ(r.per_factor[0].length, 889u);
    EXPECT_EQ(r.per_factor[1].prime_power, 5u);
    EXPECT_EQ(r.per_factor[1].length, 1953124u);
    EXPECT_EQ(r.length, 1736327236);
    EXPECT_EQ(r.shift, 6u);
    EXPECT_FALSE(r.conjecture_holds.has_value());

    const auto twelve = cycle_length(12);
    EXPECT_EQ(twelve.length, 4270560);
    EXPECT_EQ(twelve.shift, 0u);
}

TEST(cycle_length, composite_lcm_is_true_period) {
    // The composed period must also be the direct period mod d.
    for (uint64_t d : {6, 10}) {
        const auto r = cycle_length(d);
        if (r.length > 100000) {
            continue;
        }
        EXPECT_EQ(BigInt(cycle_length_direct(d, d, 100000)), r.length);
    }
    EXPECT_EQ(cycle_length_direct(6, 6, 10000), 6552u);
}

TEST(cycle_length, permutation_is_rotation) {
    for (uint64_t d = 2; d <= 9; ++d) {
        const auto r = cycle_length(d);
        ASSERT_EQ(r.permutation.size(), d);
        for (uint64_t i = 0; i < d; ++i) {
            EXPECT_EQ(r.permutation[i], (i + r.shift) % d);
        }
        EXPECT_EQ(BigInt(r.shift), r.length % d);
    }
}

TEST(cycle_length, small_budget_is_inconclusive) {
    EXPECT_THROW(cycle_length(9, 100), Inconclusive);
    EXPECT_THROW(cycle_length(1), InvalidArgument);
}

TEST(conjecture, small_prime_powers) {
    EXPECT_EQ(predicted_cycle(2, 2), 30u);
    EXPECT_EQ(predicted_cycle(3, 2), 240u);
    EXPECT_EQ(predicted_cycle(5, 1), 24u);
    EXPECT_THROW(predicted_cycle(6, 1), InvalidArgument);
    EXPECT_THROW(predicted_cycle(2, 0), InvalidArgument);
    EXPECT_THROW(predicted_cycle(2, 40), InvalidArgument);
    for (auto [p, m] : std::vector<std::pair<uint64_t, uint64_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
        EXPECT_TRUE(verify_conjecture(p, m)) << p << "^" << m;
    }
}

TEST(induced_shift, small_dimensions) {
    EXPECT_EQ(induced_shift(3).shift, 2u);
    EXPECT_EQ(induced_shift(4).shift, 2u);
    EXPECT_EQ(induced_shift(5).shift, 4u);
    EXPECT_EQ(induced_shift(6).shift, 0u);
    EXPECT_EQ(induced_shift(7).shift, 6u);
    EXPECT_EQ(induced_shift(8).shift, 4u);
    EXPECT_EQ(induced_shift(9).shift, 6u);
}

TEST(induced_shift, primes_always_swap) {
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        EXPECT_EQ(induced_shift(p).shift, p - 1);
    }
}

TEST(scan, serial_matches_parallel) {
    const auto a = scan(12, std::nullopt, Exec::serial);
    const auto b = scan(12, std::nullopt, Exec::parallel, 2);
    ASSERT_EQ(a.size(), 11u);
    ASSERT_EQ(b.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].d, i + 2);
        ASSERT_TRUE(a[i].report && b[i].report);
        EXPECT_EQ(a[i].report->length, b[i].report->length);
        EXPECT_EQ(a[i].report->shift, b[i].report->shift);
    }
}

TEST(scan, budget_misses_are_recorded) {
    const auto entries = scan(9, 100, Exec::serial);
    bool saw_inconclusive = false;
    for (const auto &e : entries) {
        if (!e.report) {
            saw_inconclusive = true;
            EXPECT_FALSE(e.inconclusive.empty());
        }
    }
    EXPECT_TRUE(saw_inconclusive);
    EXPECT_TRUE(entries[0].report.has_value());
    EXPECT_THROW(scan(1), InvalidArgument);
}
