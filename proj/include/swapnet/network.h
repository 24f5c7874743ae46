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

#ifndef SWAPNET_NETWORK_H
#define SWAPNET_NETWORK_H

// The cyclic CNOT network. System A_j controls A_{j+1 mod d}; gate k
// (0-based) fires at time t = k + 1 and targets system (k + 1) mod d.
// Every gate is a classical reversible map on basis labels, so operators
// are kept as basis permutations or as matrices over Z_d acting on the
// vector of input labels, never as dense complex matrices.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swapnet/kernels.h"
#include "swapnet/seqcore.h"

namespace swapnet {

class Circuit {
   public:
    /// Throws InvalidArgument for d < 2, n_systems < 2, out-of-range or
    /// self-targeting gates.
    Circuit(uint64_t d, uint64_t n_systems, std::vector<Gate> gates = {});

    uint64_t d() const {
        return d_;
    }
    uint64_t n_systems() const {
        return n_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    void add(Gate gate);

    bool operator==(const Circuit &) const = default;

   private:
    uint64_t d_;
    uint64_t n_;
    std::vector<Gate> gates_;
};

/// gates[k] = CNOT(k mod d -> (k+1) mod d), d systems of dimension d.
Circuit build_cyclic_network(uint64_t d, uint64_t gate_count);

/// n x n matrix over Z_d acting on the vector of basis labels. Column i is
/// the image of the i-th unit vector; row s is the combination of inputs
/// that system s holds.
class LinearMapZd {
   public:
    static LinearMapZd identity(uint64_t d, uint64_t n);

    uint64_t modulus() const {
        return d_;
    }
    uint64_t size() const {
        return n_;
    }
    uint64_t at(uint64_t row, uint64_t col) const {
        return entries_[row * n_ + col];
    }

    /// Left-multiplies by the elementary matrix of CNOT(control -> target).
    void apply_gate(Gate gate);

    /// (*this) * rhs: rhs acts first.
    LinearMapZd operator*(const LinearMapZd &rhs) const;
    LinearMapZd pow(uint64_t exponent) const;

    std::vector<uint64_t> apply(std::span<const uint64_t> labels) const;

    /// perm[i] = s when the map sends unit vector i to unit vector s;
    /// nullopt if the matrix is not a permutation matrix.
    std::optional<std::vector<uint64_t>> as_permutation() const;

    bool operator==(const LinearMapZd &) const = default;

   private:
    LinearMapZd(uint64_t d, uint64_t n) : d_(d), n_(n), entries_(n * n, 0) {
    }

    uint64_t d_;
    uint64_t n_;
    std::vector<uint64_t> entries_;
};

/// Gate-by-gate composition; identity for the empty circuit.
LinearMapZd linear_map(const Circuit &circuit);

/// Map of build_cyclic_network(d, gate_count) by binary powering of one
/// d-gate round; equal to linear_map of that circuit.
LinearMapZd cyclic_network_map(uint64_t d, uint64_t gate_count);

/// The b_{it} array: column t (t = -(d-1) .. T) holds the coefficients of
/// the input labels e_0 .. e_{d-1} in the state written at time t, i.e. the
/// state of system (t mod d) after its latest update.
class TraceArray {
   public:
    TraceArray(uint64_t d, uint64_t last_time);

    uint64_t d() const {
        return d_;
    }
    int64_t first_time() const {
        return -static_cast<int64_t>(d_) + 1;
    }
    int64_t last_time() const {
        return first_time() + static_cast<int64_t>(columns_.size()) - 1;
    }
    const std::vector<uint64_t> &column(int64_t t) const;
    uint64_t entry(uint64_t i, int64_t t) const {
        return column(t)[i];
    }
    /// b_{i,t} for t = first_time() .. last_time().
    std::vector<uint64_t> row(uint64_t i) const;
    /// System whose state is recorded at time t.
    uint64_t system_at(int64_t t) const;
    /// a_t = sum_i e_i b_{it} mod d for concrete input labels.
    uint64_t dot(int64_t t, std::span<const uint64_t> inputs) const;

   private:
    uint64_t d_;
    std::vector<std::vector<uint64_t>> columns_;
};

TraceArray trace_array(uint64_t d, uint64_t last_time);

uint64_t basis_index(uint64_t d, std::span<const uint64_t> digits);
std::vector<uint64_t> basis_digits(uint64_t d, uint64_t n, uint64_t index);

/// d^n with overflow and memory checks.
uint64_t state_space_size(uint64_t d, uint64_t n, uint64_t max_size);

class StateVector {
   public:
    using Amplitude = std::complex<double>;
    static constexpr double kNormTolerance = 1e-12;

    /// Throws InvalidArgument unless amplitudes.size() == d^n and the
    /// 2-norm is 1 within kNormTolerance.
    StateVector(uint64_t d, uint64_t n, std::vector<Amplitude> amplitudes);

    static StateVector basis(uint64_t d, std::span<const uint64_t> digits);
    /// Tensor product of single-qudit states, each normalised first.
    static StateVector product(uint64_t d, const std::vector<std::vector<Amplitude>> &factors);
    /// Normalised Gaussian amplitudes from a seeded generator.
    static StateVector random(uint64_t d, uint64_t n, uint64_t seed);
    /// Random single-qudit factors combined with product().
    static StateVector random_product(uint64_t d, uint64_t n, uint64_t seed);

    uint64_t d() const {
        return d_;
    }
    uint64_t n() const {
        return n_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    Amplitude operator[](uint64_t index) const {
        return amplitudes_[index];
    }
    double norm() const;

   private:
    uint64_t d_ = 0;
    uint64_t n_ = 0;
    std::vector<Amplitude> amplitudes_;
};

inline constexpr uint64_t kMaxBasisSize = 1'000'000;

StateVector simulate(const Circuit &circuit, const StateVector &input, Exec exec = Exec::parallel);

/// The whole circuit as a permutation of basis indices: perm[x] = image of x.
/// Throws SizeBudgetExceeded when d^n > max_size.
std::vector<uint64_t> full_operator(const Circuit &circuit, uint64_t max_size = kMaxBasisSize,
                                    Exec exec = Exec::parallel);

/// 0/1 matrix rows, U[out][in] = 1 iff perm[in] == out.
std::string render_dense(std::span<const uint64_t> perm);

enum class SwapKind { swap, grouped, identity, other };

std::string_view to_string(SwapKind kind);

struct SwapVerdict {
    SwapKind kind = SwapKind::other;
    uint64_t shift = 0;
    uint64_t gate_count = 0;
    /// perm[i] = system holding input e_i; empty if the map is not a
    /// permutation of systems.
    std::vector<uint64_t> permutation;
};

/// Classifies a d x d map: rotation by -1 is a swap, rotation by a
/// non-zero multiple of p^(m-1) for d = p^m (m > 1) is grouped, no
/// rotation is the identity, anything else is other.
SwapVerdict classify_map(const LinearMapZd &map);

/// Builds the network with as many gates as the cycle length of (a_j) mod d
/// and classifies its action.
SwapVerdict verify_swap(uint64_t d, std::optional<uint64_t> budget = std::nullopt);

enum class CircuitFormat { json, gatelist };

/// gatelist: "DIM <d> SYSTEMS <n>" then one "CNOT <control> <target>" per
/// gate, LF-separated, no trailing newline.
std::string export_circuit(const Circuit &circuit, CircuitFormat format);

/// Accepts either export format (JSON when the first non-blank byte is '{').
Circuit parse_circuit(std::string_view text);

}  // namespace swapnet

#endif
