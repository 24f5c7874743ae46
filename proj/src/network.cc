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

#include "swapnet/network.h"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "swapnet/cycle.h"
#include "swapnet/errors.h"

namespace swapnet {

Circuit::Circuit(uint64_t d, uint64_t n_systems, std::vector<Gate> gates) : d_(d), n_(n_systems) {
    if (d < 2) {
        throw InvalidArgument("qudit dimension must be >= 2, got " + std::to_string(d));
    }
    if (n_systems < 2) {
        throw InvalidArgument("a CNOT circuit needs at least 2 systems");
    }
    gates_.reserve(gates.size());
    for (Gate g : gates) {
        add(g);
    }
}

void Circuit::add(Gate gate) {
    if (gate.control >= n_ || gate.target >= n_) {
        throw InvalidArgument("gate index out of range: CNOT " + std::to_string(gate.control) + " " +
                              std::to_string(gate.target));
    }
    if (gate.control == gate.target) {
        throw InvalidArgument("gate control equals target: " + std::to_string(gate.control));
    }
    gates_.push_back(gate);
}

Circuit build_cyclic_network(uint64_t d, uint64_t gate_count) {
    std::vector<Gate> gates;
    gates.reserve(gate_count);
    for (uint64_t k = 0; k < gate_count; ++k) {
        gates.push_back(Gate{static_cast<uint32_t>(k % d), static_cast<uint32_t>((k + 1) % d)});
    }
    return Circuit(d, d, std::move(gates));
}

LinearMapZd LinearMapZd::identity(uint64_t d, uint64_t n) {
    LinearMapZd m(d, n);
    for (uint64_t i = 0; i < n; ++i) {
        m.entries_[i * n + i] = 1 % d;
    }
    return m;
}

void LinearMapZd::apply_gate(Gate gate) {
    uint64_t *target = entries_.data() + gate.target * n_;
    const uint64_t *control = entries_.data() + gate.control * n_;
    for (uint64_t c = 0; c < n_; ++c) {
        uint64_t v = target[c] + control[c];
        target[c] = v >= d_ ? v - d_ : v;
    }
}

LinearMapZd LinearMapZd::operator*(const LinearMapZd &rhs) const {
    if (rhs.d_ != d_ || rhs.n_ != n_) {
        throw InvalidArgument("composing maps of different shapes");
    }
    LinearMapZd out(d_, n_);
    for (uint64_t r = 0; r < n_; ++r) {
        for (uint64_t k = 0; k < n_; ++k) {
            const uint64_t a = at(r, k);
            if (a == 0) {
                continue;
            }
            for (uint64_t c = 0; c < n_; ++c) {
                out.entries_[r * n_ + c] = (out.entries_[r * n_ + c] + a * rhs.at(k, c)) % d_;
            }
        }
    }
    return out;
}

LinearMapZd LinearMapZd::pow(uint64_t exponent) const {
    LinearMapZd result = identity(d_, n_);
    LinearMapZd base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

std::vector<uint64_t> LinearMapZd::apply(std::span<const uint64_t> labels) const {
    if (labels.size() != n_) {
        throw InvalidArgument("label vector has wrong length");
    }
    std::vector<uint64_t> out(n_, 0);
    for (uint64_t r = 0; r < n_; ++r) {
        uint64_t acc = 0;
        for (uint64_t c = 0; c < n_; ++c) {
            acc = (acc + at(r, c) * (labels[c] % d_)) % d_;
        }
        out[r] = acc;
    }
    return out;
}

std::optional<std::vector<uint64_t>> LinearMapZd::as_permutation() const {
    std::vector<uint64_t> perm(n_, n_);
    std::vector<bool> row_used(n_, false);
    for (uint64_t c = 0; c < n_; ++c) {
        for (uint64_t r = 0; r < n_; ++r) {
            uint64_t v = at(r, c);
            if (v == 0) {
                continue;
            }
            if (v != 1 || perm[c] != n_ || row_used[r]) {
                return std::nullopt;
            }
            perm[c] = r;
            row_used[r] = true;
        }
        if (perm[c] == n_) {
            return std::nullopt;
        }
    }
    return perm;
}

LinearMapZd linear_map(const Circuit &circuit) {
    LinearMapZd m = LinearMapZd::identity(circuit.d(), circuit.n_systems());
    for (const Gate &g : circuit.gates()) {
        m.apply_gate(g);
    }
    return m;
}

LinearMapZd cyclic_network_map(uint64_t d, uint64_t gate_count) {
    const LinearMapZd round = linear_map(build_cyclic_network(d, d));
    const LinearMapZd tail = linear_map(build_cyclic_network(d, gate_count % d));
    return tail * round.pow(gate_count / d);
}

TraceArray::TraceArray(uint64_t d, uint64_t last_time) : d_(d) {
    if (d < 2) {
        throw InvalidArgument("dimension must be >= 2");
    }
    columns_.reserve(d + last_time);
    // t = -(d-1) .. 0 carries the untouched input of system t mod d.
    for (int64_t t = first_time(); t <= 0; ++t) {
        std::vector<uint64_t> col(d, 0);
        col[system_at(t)] = 1;
        columns_.push_back(std::move(col));
    }
    // The gate firing at time t adds the control's column (t-1) into the
    // target's previous column (t-d).
    for (uint64_t t = 1; t <= last_time; ++t) {
        const auto &prev = columns_[columns_.size() - 1];
        const auto &self = columns_[columns_.size() - d];
        std::vector<uint64_t> col(d);
        for (uint64_t i = 0; i < d; ++i) {
            col[i] = (prev[i] + self[i]) % d;
        }
        columns_.push_back(std::move(col));
    }
}

const std::vector<uint64_t> &TraceArray::column(int64_t t) const {
    if (t < first_time() || t > last_time()) {
        throw InvalidArgument("time " + std::to_string(t) + " outside trace");
    }
    return columns_[static_cast<std::size_t>(t - first_time())];
}

std::vector<uint64_t> TraceArray::row(uint64_t i) const {
    std::vector<uint64_t> out;
    out.reserve(columns_.size());
    for (const auto &col : columns_) {
        out.push_back(col.at(i));
    }
    return out;
}

uint64_t TraceArray::system_at(int64_t t) const {
    const auto sd = static_cast<int64_t>(d_);
    return static_cast<uint64_t>(((t % sd) + sd) % sd);
}

uint64_t TraceArray::dot(int64_t t, std::span<const uint64_t> inputs) const {
    if (inputs.size() != d_) {
        throw InvalidArgument("expected " + std::to_string(d_) + " input labels");
    }
    const auto &col = column(t);
    uint64_t acc = 0;
    for (uint64_t i = 0; i < d_; ++i) {
        acc = (acc + col[i] * (inputs[i] % d_)) % d_;
    }
    return acc;
}

TraceArray trace_array(uint64_t d, uint64_t last_time) {
    return TraceArray(d, last_time);
}

uint64_t basis_index(uint64_t d, std::span<const uint64_t> digits) {
    uint64_t x = 0;
    for (uint64_t digit : digits) {
        if (digit >= d) {
            throw InvalidArgument("basis digit " + std::to_string(digit) + " not below " +
                                  std::to_string(d));
        }
        x = x * d + digit;
    }
    return x;
}

std::vector<uint64_t> basis_digits(uint64_t d, uint64_t n, uint64_t index) {
    std::vector<uint64_t> digits(n);
    for (uint64_t i = n; i-- > 0;) {
        digits[i] = index % d;
        index /= d;
    }
    if (index != 0) {
        throw InvalidArgument("basis index too large for " + std::to_string(n) + " systems");
    }
    return digits;
}

uint64_t state_space_size(uint64_t d, uint64_t n, uint64_t max_size) {
    uint64_t size = 1;
    for (uint64_t i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(size, d, &size) || size > max_size) {
            throw SizeBudgetExceeded(std::to_string(d) + "^" + std::to_string(n) +
                                     " basis states exceed the limit of " +
                                     std::to_string(max_size));
        }
    }
    return size;
}

StateVector::StateVector(uint64_t d, uint64_t n, std::vector<Amplitude> amplitudes)
    : d_(d), n_(n), amplitudes_(std::move(amplitudes)) {
    if (d < 2 || n < 1) {
        throw InvalidArgument("state needs d >= 2 and at least one system");
    }
    if (amplitudes_.size() != state_space_size(d, n, UINT64_MAX)) {
        throw InvalidArgument("amplitude count " + std::to_string(amplitudes_.size()) +
                              " is not " + std::to_string(d) + "^" + std::to_string(n));
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
        throw InvalidArgument("state is not normalised");
    }
}

StateVector StateVector::basis(uint64_t d, std::span<const uint64_t> digits) {
    const uint64_t n = digits.size();
    std::vector<Amplitude> amps(state_space_size(d, n, kMaxBasisSize), 0.0);
    amps[basis_index(d, digits)] = 1.0;
    return StateVector(d, n, std::move(amps));
}

StateVector StateVector::product(uint64_t d, const std::vector<std::vector<Amplitude>> &factors) {
    std::vector<Amplitude> amps{1.0};
    for (const auto &f : factors) {
        if (f.size() != d) {
            throw InvalidArgument("single-qudit factor must have " + std::to_string(d) +
                                  " amplitudes");
        }
        double nrm = 0;
        for (auto a : f) {
            nrm += std::norm(a);
        }
        nrm = std::sqrt(nrm);
        if (nrm == 0) {
            throw InvalidArgument("zero single-qudit factor");
        }
        std::vector<Amplitude> next;
        next.reserve(amps.size() * d);
        for (auto a : amps) {
            for (auto b : f) {
                next.push_back(a * (b / nrm));
            }
        }
        amps = std::move(next);
    }
    // Renormalise to absorb rounding from the products.
    double nrm = 0;
    for (auto a : amps) {
        nrm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(nrm);
    }
    return StateVector(d, factors.size(), std::move(amps));
}

StateVector StateVector::random(uint64_t d, uint64_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<Amplitude> amps(state_space_size(d, n, kMaxBasisSize));
    double nrm = 0;
    for (auto &a : amps) {
        a = Amplitude(gauss(rng), gauss(rng));
        nrm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(nrm);
    }
    return StateVector(d, n, std::move(amps));
}

StateVector StateVector::random_product(uint64_t d, uint64_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<std::vector<Amplitude>> factors(n, std::vector<Amplitude>(d));
    for (auto &f : factors) {
        for (auto &a : f) {
            a = Amplitude(gauss(rng), gauss(rng));
        }
    }
    return product(d, factors);
}

double StateVector::norm() const {
    double s = 0;
    for (auto a : amplitudes_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

StateVector simulate(const Circuit &circuit, const StateVector &input, Exec exec) {
    if (input.d() != circuit.d() || input.n() != circuit.n_systems()) {
        throw InvalidArgument("state of " + std::to_string(input.n()) + " qudits (d=" +
                              std::to_string(input.d()) + ") does not match circuit on " +
                              std::to_string(circuit.n_systems()) + " (d=" +
                              std::to_string(circuit.d()) + ")");
    }
    std::vector<StateVector::Amplitude> cur(input.amplitudes().begin(), input.amplitudes().end());
    std::vector<StateVector::Amplitude> next(cur.size());
    for (const Gate &g : circuit.gates()) {
        if (exec == Exec::parallel) {
            kernels::omp::apply_cnot(cur, next, circuit.d(), circuit.n_systems(), g);
        } else {
            kernels::serial::apply_cnot(cur, next, circuit.d(), circuit.n_systems(), g);
        }
        cur.swap(next);
    }
    return StateVector(input.d(), input.n(), std::move(cur));
}

std::vector<uint64_t> full_operator(const Circuit &circuit, uint64_t max_size, Exec exec) {
    const uint64_t size = state_space_size(circuit.d(), circuit.n_systems(), max_size);
    std::vector<uint64_t> images(size);
    if (exec == Exec::parallel) {
        kernels::omp::basis_images(circuit.gates(), circuit.d(), circuit.n_systems(), images);
    } else {
        kernels::serial::basis_images(circuit.gates(), circuit.d(), circuit.n_systems(), images);
    }
    return images;
}

std::string render_dense(std::span<const uint64_t> perm) {
    const std::size_t n = perm.size();
    std::vector<std::size_t> source(n, n);
    for (std::size_t in = 0; in < n; ++in) {
        source.at(perm[in]) = in;
    }
    std::string out;
    out.reserve(n * n * 2);
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < n; ++col) {
            if (col > 0) {
                out += ' ';
            }
            out += source[row] == col ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::string_view to_string(SwapKind kind) {
    switch (kind) {
        case SwapKind::swap:
            return "swap";
        case SwapKind::grouped:
            return "grouped";
        case SwapKind::identity:
            return "identity";
        case SwapKind::other:
            return "other";
    }
    return "other";
}

SwapVerdict classify_map(const LinearMapZd &map) {
    SwapVerdict v;
    const uint64_t d = map.size();
    auto perm = map.as_permutation();
    if (!perm) {
        return v;
    }
    v.permutation = *perm;
    v.shift = (*perm)[0];
    for (uint64_t i = 0; i < d; ++i) {
        if ((*perm)[i] != (i + v.shift) % d) {
            return v;
        }
    }
    if (v.shift == 0) {
        v.kind = SwapKind::identity;
    } else if (v.shift == d - 1) {
        v.kind = SwapKind::swap;
    } else {
        Factorization f = factorize(d);
        if (f.is_prime_power() && f.factors[0].exponent > 1) {
            uint64_t group_stride = f.factors[0].value() / f.factors[0].p;
            if (v.shift % group_stride == 0) {
                v.kind = SwapKind::grouped;
            }
        }
    }
    return v;
}

SwapVerdict verify_swap(uint64_t d, std::optional<uint64_t> budget) {
    const CycleReport report = cycle_length(d, budget);
    if (report.length > std::numeric_limits<uint64_t>::max()) {
        throw SizeBudgetExceeded("cycle length of dimension " + std::to_string(d) +
                                 " exceeds 64 bits");
    }
    const auto gates = static_cast<uint64_t>(report.length);
    SwapVerdict v = classify_map(cyclic_network_map(d, gates));
    v.gate_count = gates;
    return v;
}

std::string export_circuit(const Circuit &circuit, CircuitFormat format) {
    if (format == CircuitFormat::json) {
        nlohmann::ordered_json j;
        j["d"] = circuit.d();
        j["systems"] = circuit.n_systems();
        j["gates"] = nlohmann::ordered_json::array();
        for (const Gate &g : circuit.gates()) {
            j["gates"].push_back({g.control, g.target});
        }
        return j.dump();
    }
    std::string out =
        "DIM " + std::to_string(circuit.d()) + " SYSTEMS " + std::to_string(circuit.n_systems());
    for (const Gate &g : circuit.gates()) {
        out += "\nCNOT " + std::to_string(g.control) + " " + std::to_string(g.target);
    }
    return out;
}

namespace {

Circuit parse_json_circuit(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        Circuit c(j.at("d").get<uint64_t>(), j.at("systems").get<uint64_t>());
        for (const auto &g : j.at("gates")) {
            if (!g.is_array() || g.size() != 2) {
                throw InvalidArgument("gate entries must be [control, target]");
            }
            c.add(Gate{g[0].get<uint32_t>(), g[1].get<uint32_t>()});
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw InvalidArgument(std::string("bad circuit JSON: ") + e.what());
    }
}

Circuit parse_gatelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) {
        throw InvalidArgument("empty circuit text");
    }
    std::istringstream header(line);
    std::string dim_kw, sys_kw;
    uint64_t d = 0, n = 0;
    if (!(header >> dim_kw >> d >> sys_kw >> n) || dim_kw != "DIM" || sys_kw != "SYSTEMS") {
        throw InvalidArgument("expected header 'DIM <d> SYSTEMS <n>', got '" + line + "'");
    }
    Circuit c(d, n);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream gl(line);
        std::string kw, rest;
        uint32_t control = 0, target = 0;
        if (!(gl >> kw >> control >> target) || kw != "CNOT" || (gl >> rest)) {
            throw InvalidArgument("bad gate line '" + line + "'");
        }
        c.add(Gate{control, target});
    }
    return c;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_json_circuit(text);
    }
    return parse_gatelist(text);
}

}  // namespace swapnet
