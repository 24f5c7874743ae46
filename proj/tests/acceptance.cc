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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.
// Pass --long to extend the prime-power instances up to 3125.

#include <chrono>
#include <cmath>
#include <cstring>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "swapnet/cycle.h"
#include "swapnet/genfun.h"
#include "swapnet/network.h"
#include "swapnet/seqcore.h"

using namespace swapnet;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

void fail(Outcome &o, const std::string &why) {
    if (o.passed) {
        o.detail = why;
    }
    o.passed = false;
}

const std::vector<uint64_t> kOrderFour = {1,   1,   1,   1,   2,   3,   4,   5,   7,
                                          10,  14,  19,  26,  36,  50,  69,  95,  131,
                                          181, 250, 345, 476, 657, 907, 1252, 1728};
const std::vector<uint64_t> kOrderEight = {1, 1, 1, 1, 1, 1,  1,  1,  2,  3,  4,  5,  6,
                                           7, 8, 9, 11, 14, 18, 23, 29, 36, 44, 53, 64, 78};

Outcome table_lengths() {
    Outcome o;
    const std::vector<uint64_t> want = {3, 8, 30, 24, 6552, 48, 252, 240};
    for (uint64_t d = 2; d <= 9; ++d) {
        const BigInt got = cycle_length(d).length;
        if (got != want[d - 2]) {
            fail(o, "d=" + std::to_string(d) + " gave " + got.str());
        }
    }
    return o;
}

Outcome prime_lengths() {
    Outcome o;
    for (uint64_t p = 2; p <= 31; ++p) {
        if (!is_prime(p)) {
            continue;
        }
        const uint64_t got = cycle_length_direct(p, p, 10 * p * p);
        if (got != p * p - 1) {
            fail(o, "p=" + std::to_string(p) + " gave " + std::to_string(got));
        }
    }
    return o;
}

Outcome prime_power_lengths(bool long_run) {
    Outcome o;
    std::vector<PrimePower> cases = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 5},
                                     {7, 2}, {2, 6}, {3, 4}, {5, 3}, {2, 7}, {3, 5}, {2, 8}};
    if (long_run) {
        cases.push_back({5, 5});
    }
    for (const PrimePower &pp : cases) {
        const uint64_t want = predicted_cycle(pp.p, pp.exponent);
        const uint64_t got = cycle_length_direct(pp.value(), pp.value(), 2 * want);
        if (got != want) {
            fail(o, "d=" + std::to_string(pp.value()) + " gave " + std::to_string(got));
        }
    }
    return o;
}

Outcome sequence_routes() {
    Outcome o;
    double worst = 0;
    for (auto [n, printed] : {std::pair{uint64_t{4}, &kOrderFour}, std::pair{uint64_t{8}, &kOrderEight}}) {
        const ExactSeq rec(n, printed->size());
        const ClosedForm cf = closed_form(n);
        for (uint64_t j = 0; j < printed->size(); ++j) {
            const BigInt want = (*printed)[j];
            const ClosedValue cv = eval_closed(cf, j);
            worst = std::max(worst, std::abs(cv.approx - static_cast<double>((*printed)[j])));
            if (a_exact(j, n) != want || rec[j] != want || BigInt(cv.rounded) != want) {
                fail(o, "n=" + std::to_string(n) + " j=" + std::to_string(j));
            }
        }
    }
    if (worst >= 1e-6) {
        fail(o, "closed-form residual " + std::to_string(worst));
    }
    std::ostringstream s;
    s << "max residual " << std::scientific << std::setprecision(2) << worst;
    if (o.passed) {
        o.detail = s.str();
    }
    return o;
}

Outcome roots_and_weights() {
    Outcome o;
    struct Want {
        uint64_t n;
        double alpha;
        double beta;
    };
    for (const Want &w : {Want{4, 1.380277569, 0.5474879784}, Want{8, 1.232054631, 0.4313256714}}) {
        const ClosedForm cf = closed_form(w.n);
        // The dominant root is real and sorts last.
        const Complex a = cf.alphas.back();
        const Complex b = cf.betas.back();
        if (std::abs(a.real() - w.alpha) >= 1e-6 || std::abs(a.imag()) >= 1e-6 ||
            std::abs(b.real() - w.beta) >= 1e-6 || std::abs(b.imag()) >= 1e-6) {
            fail(o, "n=" + std::to_string(w.n) + " alpha " + std::to_string(a.real()) + " beta " +
                        std::to_string(b.real()));
        }
    }
    return o;
}

std::vector<Complex> random_qutrit(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(3);
    double norm = 0;
    for (auto &x : v) {
        x = {g(rng), g(rng)};
        norm += std::norm(x);
    }
    for (auto &x : v) {
        x /= std::sqrt(norm);
    }
    return v;
}

Outcome qutrit_swap() {
    Outcome o;
    const Circuit c = build_cyclic_network(3, 8);
    std::mt19937_64 rng(2026);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_qutrit(rng);
        const auto b = random_qutrit(rng);
        const auto cc = random_qutrit(rng);
        const StateVector out = simulate(c, StateVector::product(3, {a, b, cc}));
        const StateVector want = StateVector::product(3, {b, cc, a});
        for (uint64_t x = 0; x < 27; ++x) {
            worst = std::max(worst, std::abs(out[x] - want[x]));
        }
    }
    if (worst >= 1e-12) {
        fail(o, "amplitude error " + std::to_string(worst));
    }
    const auto perm = full_operator(c);
    for (uint64_t a = 0; a < 3; ++a) {
        for (uint64_t b = 0; b < 3; ++b) {
            for (uint64_t x = 0; x < 3; ++x) {
                if (perm[9 * a + 3 * b + x] != 9 * b + 3 * x + a) {
                    fail(o, "operator differs at index " + std::to_string(9 * a + 3 * b + x));
                }
            }
        }
    }
    return o;
}

Outcome classification() {
    Outcome o;
    struct Want {
        uint64_t d;
        uint64_t gates;
        SwapKind kind;
        std::vector<uint64_t> perm;
    };
    const std::vector<Want> cases = {{4, 30, SwapKind::grouped, {2, 3, 0, 1}},
                                     {6, 6552, SwapKind::identity, {0, 1, 2, 3, 4, 5}},
                                     {5, 24, SwapKind::swap, {4, 0, 1, 2, 3}}};
    for (const Want &w : cases) {
        const SwapVerdict v = verify_swap(w.d);
        const auto direct = cyclic_network_map(w.d, w.gates).as_permutation();
        if (v.kind != w.kind || v.gate_count != w.gates || v.permutation != w.perm || !direct ||
            *direct != w.perm) {
            fail(o, "d=" + std::to_string(w.d) + " classified as " + std::string(to_string(v.kind)));
        }
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const uint64_t max_j = 2000;
    for (uint64_t d = 2; d <= 12; ++d) {
        const ExactSeq rec(d, max_j + 1);
        std::vector<BigInt> direct(max_j + 1);
        for (uint64_t j = 0; j <= max_j; ++j) {
            direct[j] = a_exact(j, d);
            if (direct[j] != rec[j]) {
                fail(o, "exact routes differ at d=" + std::to_string(d) + " j=" + std::to_string(j));
            }
        }
        for (uint64_t m = 2; m <= d; ++m) {
            if (d % m != 0) {
                continue;
            }
            const auto stream = seq_stream(d, m, max_j + 1);
            const PascalTable table(m, max_j);
            for (uint64_t j = 0; j <= max_j; ++j) {
                const uint64_t want = static_cast<uint64_t>(direct[j] % m);
                bool ok = stream[j].value() == want && a_mod(j, d, table).value() == want;
                if (j % 97 == 0) {
                    ok = ok && a_mod(j, d, m).value() == want;
                }
                if (!ok) {
                    fail(o, "d=" + std::to_string(d) + " m=" + std::to_string(m) +
                                " j=" + std::to_string(j));
                }
            }
        }
    }
    for (uint64_t m : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}) {
        if (!PascalTable(m, 50).satisfies_pascal_rule()) {
            fail(o, "Pascal rule mod " + std::to_string(m));
        }
    }
    for (uint64_t j = 0; j <= 50; ++j) {
        for (uint64_t k = 0; k <= 50; ++k) {
            if (!hockey_stick_check(j, k)) {
                fail(o, "hockey stick j=" + std::to_string(j) + " k=" + std::to_string(k));
            }
        }
    }
    for (uint64_t p : {2, 3, 5}) {
        for (uint64_t a = 1; a <= 3; ++a) {
            for (uint64_t k = 1; k <= 10; ++k) {
                const uint64_t want = predicted_binomial_period(p, a, k);
                if (binomial_column_period(p, a, k, 4 * want) != want) {
                    fail(o, "column period p=" + std::to_string(p) + " a=" + std::to_string(a) +
                                " k=" + std::to_string(k));
                }
            }
        }
    }
    return o;
}

Outcome shift_consistency() {
    Outcome o;
    for (uint64_t d = 2; d <= 9; ++d) {
        const InducedShift predicted = induced_shift(d);
        const SwapVerdict measured = verify_swap(d);
        // Push labels 0..d-1 through the network; label i must land on system perm[i].
        std::vector<uint64_t> labels(d);
        for (uint64_t i = 0; i < d; ++i) {
            labels[i] = i;
        }
        const auto out = cyclic_network_map(d, measured.gate_count).apply(labels);
        bool moved = true;
        for (uint64_t i = 0; i < d; ++i) {
            moved = moved && out[predicted.permutation[i]] == i;
        }
        if (measured.shift != predicted.shift || !moved ||
            measured.permutation != predicted.permutation) {
            fail(o, "d=" + std::to_string(d) + " measured " + std::to_string(measured.shift) +
                        " predicted " + std::to_string(predicted.shift));
        }
    }
    return o;
}

}  // namespace

int main(int argc, char **argv) {
    bool long_run = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long") == 0) {
            long_run = true;
        } else {
            std::cerr << "usage: " << argv[0] << " [--long]\n";
            return 2;
        }
    }

    struct Criterion {
        int id;
        std::string name;
        double time_limit;  // seconds, 0 = none
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "cycle lengths d=2..9", 1, table_lengths},
        {2, "prime cycle length p^2-1 for p<=31", 10, prime_lengths},
        {3, long_run ? "prime-power cycle lengths up to 3125" : "prime-power cycle lengths up to 256",
         long_run ? 0.0 : 60.0, [long_run] { return prime_power_lengths(long_run); }},
        {4, "first 26 terms for n=4 and n=8 by three routes", 0, sequence_routes},
        {5, "dominant roots and weights for n=4 and n=8", 0, roots_and_weights},
        {6, "qutrit SWAP on product states and full operator", 0, qutrit_swap},
        {7, "permutation classification for d=4,6,5", 0, classification},
        {8, "oracle-equivalence property suite", 0, oracle_equivalence},
        {9, "network shift equals predicted shift for d<=9", 0, shift_consistency},
    };

    int failures = 0;
    for (const Criterion &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &ex) {
            fail(o, std::string("exception: ") + ex.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.passed && c.time_limit > 0 && secs >= c.time_limit) {
            fail(o, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit));
        }
        std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " ("
                  << std::fixed << std::setprecision(3) << secs << " s)";
        if (!o.detail.empty()) {
            std::cout << " - " << o.detail;
        }
        std::cout << std::endl;
        failures += o.passed ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
