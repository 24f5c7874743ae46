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

#ifndef SWAPNET_KERNELS_H
#define SWAPNET_KERNELS_H

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP twin in kernels::omp with identical
// results; the OpenMP versions fall back to a plain loop when the library
// is built without OpenMP.

#include <complex>
#include <cstdint>
#include <span>

namespace swapnet {

enum class Exec { serial, parallel };

bool openmp_available();

/// Generalised CNOT: |c>|t> -> |c>|t + c mod d>.
struct Gate {
    uint32_t control;
    uint32_t target;
    bool operator==(const Gate &) const = default;
};

namespace kernels {

using Amplitude = std::complex<double>;

/// Basis indices are big-endian: digit i carries weight d^(n-1-i).
namespace serial {

/// out[image(x)] = in[x] for one gate.
void apply_cnot(std::span<const Amplitude> in, std::span<Amplitude> out, uint64_t d, uint64_t n,
                Gate gate);

/// images[x] = basis index reached from x after all gates, in order.
void basis_images(std::span<const Gate> gates, uint64_t d, uint64_t n, std::span<uint64_t> images);

}  // namespace serial

namespace omp {

void apply_cnot(std::span<const Amplitude> in, std::span<Amplitude> out, uint64_t d, uint64_t n,
                Gate gate);

void basis_images(std::span<const Gate> gates, uint64_t d, uint64_t n, std::span<uint64_t> images);

}  // namespace omp

}  // namespace kernels
}  // namespace swapnet

#endif
