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

#include "swapnet/kernels.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "swapnet/network.h"

using namespace swapnet;
using kernels::Amplitude;

namespace {

std::vector<Amplitude> random_amplitudes(std::size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Amplitude> v(n);
    for (auto &a : v) {
        a = {g(rng), g(rng)};
    }
    return v;
}

}  // namespace

TEST(kernels, cnot_serial_equals_parallel) {
    for (uint64_t d : {2, 3, 5}) {
        const uint64_t n = 4;
        const uint64_t size = state_space_size(d, n, kMaxBasisSize);
        const auto in = random_amplitudes(size, d);
        for (uint32_t c = 0; c < n; ++c) {
            for (uint32_t t = 0; t < n; ++t) {
                if (c == t) {
                    continue;
                }
                std::vector<Amplitude> a(size), b(size);
                kernels::serial::apply_cnot(in, a, d, n, Gate{c, t});
                kernels::omp::apply_cnot(in, b, d, n, Gate{c, t});
                ASSERT_EQ(a, b);
            }
        }
    }
}

TEST(kernels, cnot_moves_basis_state) {
    // |1 2> -> |1 0> for d = 3, control 0, target 1.
    std::vector<Amplitude> in(9), out(9);
    in[1 * 3 + 2] = 1;
    kernels::serial::apply_cnot(in, out, 3, 2, Gate{0, 1});
    EXPECT_EQ(out[1 * 3 + 0], Amplitude(1));
}

TEST(kernels, basis_images_serial_equals_parallel) {
    const Circuit c = build_cyclic_network(3, 17);
    std::vector<uint64_t> a(27), b(27);
    kernels::serial::basis_images(c.gates(), 3, 3, a);
    kernels::omp::basis_images(c.gates(), 3, 3, b);
    EXPECT_EQ(a, b);
}
