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

#include <gtest/gtest.h>

#include <random>

#include "swapnet/cycle.h"
#include "swapnet/genfun.h"
#include "swapnet/invariants.h"
#include "swapnet/network.h"
#include "swapnet/seqcore.h"

using namespace swapnet;

// Paths that cross module boundaries: sequence -> cycle -> network -> state.

TEST(integration, cycle_length_drives_swap_network) {
    for (uint64_t p : {2, 3, 5, 7}) {
        const CycleReport r = cycle_length(p);
        const auto gates = static_cast<uint64_t>(r.length);
        const Circuit c = build_cyclic_network(p, gates);
        const auto perm = linear_map(c).as_permutation();
        ASSERT_TRUE(perm.has_value());
        EXPECT_EQ(*perm, r.permutation);
    }
}

TEST(integration, one_cycle_less_is_not_a_permutation) {
    // Minimality seen from the network side.
    for (uint64_t d : {3, 4, 5}) {
        const auto len = static_cast<uint64_t>(cycle_length(d).length);
        for (uint64_t g = 1; g < len; ++g) {
            ASSERT_FALSE(cyclic_network_map(d, g).as_permutation().has_value()) << d << " " << g;
        }
    }
}

TEST(integration, state_vector_follows_linear_map) {
    const Circuit c = build_cyclic_network(4, 30);
    const LinearMapZd m = linear_map(c);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<uint64_t> digits(4);
        for (auto &x : digits) {
            x = rng() % 4;
        }
        const auto out = simulate(c, StateVector::basis(4, digits));
        EXPECT_EQ(out[basis_index(4, m.apply(digits))], StateVector::Amplitude(1));
    }
}

TEST(integration, trace_rows_are_reduced_sequence) {
    const uint64_t d = 5;
    const TraceArray tr = trace_array(d, 100);
    const ExactSeq s(d, 101);
    for (int64_t t = 0; t <= 100; ++t) {
        EXPECT_EQ(BigInt(tr.entry(0, t)), s[static_cast<std::size_t>(t)] % d);
    }
}

TEST(integration, closed_form_agrees_with_mod_sequence) {
    const ClosedForm cf = closed_form(6);
    for (uint64_t j = 0; j < 40; ++j) {
        const ClosedValue v = eval_closed(cf, j);
        EXPECT_EQ(static_cast<uint64_t>(v.rounded) % 7, a_mod(j, 6, 7).value());
    }
}

TEST(integration, invariant_suite_passes) {
    SuiteOptions opts;
    opts.max_order = 8;
    opts.max_index = 400;
    opts.composition_bound = 8;
    for (const CheckResult &r : run_invariant_suite(opts)) {
        EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    }
}
