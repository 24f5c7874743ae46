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

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swapnet {

bool openmp_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace kernels {

namespace {

uint64_t weight(uint64_t d, uint64_t n, uint64_t digit) {
    uint64_t w = 1;
    for (uint64_t i = digit + 1; i < n; ++i) {
        w *= d;
    }
    return w;
}

inline uint64_t cnot_image(uint64_t x, uint64_t d, uint64_t wc, uint64_t wt) {
    const uint64_t c = (x / wc) % d;
    const uint64_t t = (x / wt) % d;
    uint64_t nt = t + c;
    if (nt >= d) {
        nt -= d;
    }
    return x + nt * wt - t * wt;
}

inline uint64_t run_gates(uint64_t x, std::span<const Gate> gates, uint64_t d,
                          std::span<const uint64_t> weights) {
    for (const Gate &g : gates) {
        x = cnot_image(x, d, weights[g.control], weights[g.target]);
    }
    return x;
}

std::vector<uint64_t> all_weights(uint64_t d, uint64_t n) {
    std::vector<uint64_t> w(n);
    for (uint64_t i = 0; i < n; ++i) {
        w[i] = weight(d, n, i);
    }
    return w;
}

}  // namespace

namespace serial {

void apply_cnot(std::span<const Amplitude> in, std::span<Amplitude> out, uint64_t d, uint64_t n,
                Gate gate) {
    const uint64_t wc = weight(d, n, gate.control);
    const uint64_t wt = weight(d, n, gate.target);
    for (uint64_t x = 0; x < in.size(); ++x) {
        out[cnot_image(x, d, wc, wt)] = in[x];
    }
}

void basis_images(std::span<const Gate> gates, uint64_t d, uint64_t n, std::span<uint64_t> images) {
    const auto w = all_weights(d, n);
    for (uint64_t x = 0; x < images.size(); ++x) {
        images[x] = run_gates(x, gates, d, w);
    }
}

}  // namespace serial

namespace omp {

void apply_cnot(std::span<const Amplitude> in, std::span<Amplitude> out, uint64_t d, uint64_t n,
                Gate gate) {
    const uint64_t wc = weight(d, n, gate.control);
    const uint64_t wt = weight(d, n, gate.target);
    const auto size = static_cast<int64_t>(in.size());
#pragma omp parallel for schedule(static)
    for (int64_t x = 0; x < size; ++x) {
        out[cnot_image(static_cast<uint64_t>(x), d, wc, wt)] = in[x];
    }
}

void basis_images(std::span<const Gate> gates, uint64_t d, uint64_t n, std::span<uint64_t> images) {
    const auto w = all_weights(d, n);
    const auto size = static_cast<int64_t>(images.size());
#pragma omp parallel for schedule(static)
    for (int64_t x = 0; x < size; ++x) {
        images[x] = run_gates(static_cast<uint64_t>(x), gates, d, w);
    }
}

}  // namespace omp

}  // namespace kernels
}  // namespace swapnet
