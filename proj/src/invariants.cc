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

#include "swapnet/invariants.h"

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include <boost/integer/common_factor.hpp>

#include "swapnet/cycle.h"
#include "swapnet/errors.h"
#include "swapnet/genfun.h"
#include "swapnet/network.h"
#include "swapnet/seqcore.h"

namespace swapnet {

namespace {

using Failure = std::optional<std::string>;

Failure oracle_equivalence(const SuiteOptions &opt) {
    std::string failure;
    const auto orders = static_cast<int64_t>(opt.max_order);
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t sd = 2; sd <= orders; ++sd) {
        const auto d = static_cast<uint64_t>(sd);
        std::set<uint64_t> moduli{2, 3, 4, 5, 7, 8, 9, d};
        std::vector<BigInt> exact;
        exact.reserve(opt.max_index + 1);
        for (uint64_t j = 0; j <= opt.max_index; ++j) {
            exact.push_back(a_exact(j, d));
        }
        ExactSeq recurrence(d, opt.max_index + 1);
        std::string local;
        for (uint64_t j = 0; j <= opt.max_index && local.empty(); ++j) {
            if (exact[j] != recurrence[j]) {
                local = "binomial sum != recurrence at d=" + std::to_string(d) +
                        " j=" + std::to_string(j);
            }
        }
        for (uint64_t m : moduli) {
            if (!local.empty()) {
                break;
            }
            PascalTable table(m, opt.max_index);
            auto stream = seq_stream(d, m, opt.max_index + 1);
            for (uint64_t j = 0; j <= opt.max_index; ++j) {
                uint64_t via_sum = a_mod(j, d, table).value();
                uint64_t via_exact = static_cast<uint64_t>(exact[j] % m);
                if (via_sum != via_exact || via_sum != stream[j].value()) {
                    local = "a_mod/a_exact/seq_stream disagree at d=" + std::to_string(d) +
                            " m=" + std::to_string(m) + " j=" + std::to_string(j);
                    break;
                }
            }
        }
        if (!local.empty()) {
#pragma omp critical
            failure = failure.empty() ? local : failure;
        }
    }
    return failure.empty() ? Failure{} : Failure{failure};
}

Failure pascal_identity() {
    for (uint64_t m : {2, 3, 4, 6, 7, 9, 10}) {
        PascalTable t(m, 50);
        if (!t.satisfies_pascal_rule()) {
            return "Pascal rule broken mod " + std::to_string(m);
        }
        for (uint64_t n = 0; n <= 50; ++n) {
            for (uint64_t k = 0; k <= n + 1; ++k) {
                BigInt e = binom_exact(static_cast<int64_t>(n), static_cast<int64_t>(k));
                if (t.value(n, k) != static_cast<uint64_t>(e % m)) {
                    return "table mod " + std::to_string(m) + " differs from exact C(" +
                           std::to_string(n) + "," + std::to_string(k) + ")";
                }
            }
        }
    }
    return {};
}

Failure hockey_stick() {
    for (uint64_t j = 0; j <= 50; ++j) {
        for (uint64_t k = 0; k <= 50; ++k) {
            if (!hockey_stick_check(j, k)) {
                return "hockey stick fails at j=" + std::to_string(j) + " k=" + std::to_string(k);
            }
        }
    }
    return {};
}

Failure exact_growth(const SuiteOptions &opt) {
    for (uint64_t d = 2; d <= opt.max_order; ++d) {
        ExactSeq s(d, 400);
        for (uint64_t j = d; j < s.size(); ++j) {
            if (!(s[j] > s[j - 1])) {
                return "not strictly increasing at d=" + std::to_string(d) + " j=" +
                       std::to_string(j);
            }
        }
    }
    return {};
}

Failure binomial_periods() {
    for (uint64_t p : {2, 3, 5}) {
        for (uint64_t a = 1; a <= 3; ++a) {
            for (uint64_t k = 1; k <= 10; ++k) {
                uint64_t expected = predicted_binomial_period(p, a, k);
                uint64_t got = binomial_column_period(p, a, k, 3 * expected + 10);
                if (got != expected) {
                    return "period of C(j," + std::to_string(k) + ") mod " + std::to_string(p) +
                           "^" + std::to_string(a) + " is " + std::to_string(got);
                }
            }
        }
    }
    return {};
}

Failure top_column() {
    for (uint64_t p = 2; p <= 31; ++p) {
        if (!is_prime(p)) {
            continue;
        }
        for (int64_t j = -1; j <= static_cast<int64_t>(3 * p); ++j) {
            binom_top_column_check(p, j);  // throws on violation
        }
    }
    return {};
}

Failure prime_theorem() {
    for (uint64_t p = 2; p <= 31; ++p) {
        if (is_prime(p) && cycle_length_direct(p, p, p * p) != p * p - 1) {
            return "prime " + std::to_string(p) + " cycle is not p^2-1";
        }
    }
    return {};
}

Failure tail_and_minimality() {
    for (uint64_t d = 2; d <= 9; ++d) {
        const uint64_t period = cycle_length_direct(d, d, kFallbackBudget);
        if (!tail_shape_holds(d, d, period)) {
            return "tail shape fails for d=" + std::to_string(d);
        }
        // No earlier index may carry the all-ones window.
        SequenceWindow w(d, d);
        while (w.index() < period + d - 1) {
            w.advance();
            uint64_t start = w.index() - d + 1;
            if (w.is_all_ones() && start != period) {
                return "early window return at " + std::to_string(start) + " for d=" +
                       std::to_string(d);
            }
        }
    }
    return {};
}

Failure composition(const SuiteOptions &opt) {
    for (uint64_t d = 4; d <= opt.composition_bound; ++d) {
        if (is_prime(d)) {
            continue;
        }
        CycleReport r = cycle_length(d);
        BigInt lcm = 1;
        for (const auto &f : r.per_factor) {
            lcm = boost::integer::lcm(lcm, BigInt(f.length));
        }
        const uint64_t direct = cycle_length_direct(d, d, static_cast<uint64_t>(lcm) + 1);
        if (BigInt(direct) != lcm || r.length != lcm) {
            return "composition mismatch for d=" + std::to_string(d);
        }
    }
    return {};
}

Failure table_values() {
    const uint64_t expected[] = {3, 8, 30, 24, 6552, 48, 252, 240};
    for (uint64_t d = 2; d <= 9; ++d) {
        if (cycle_length(d).length != expected[d - 2]) {
            return "cycle length of d=" + std::to_string(d);
        }
    }
    return {};
}

Failure map_vs_simulation() {
    std::mt19937_64 rng(7);
    for (uint64_t d = 2; d <= 5; ++d) {
        const uint64_t gates = cycle_length(d).length.convert_to<uint64_t>();
        for (uint64_t g : {uint64_t{0}, uint64_t{1}, d + 1, gates}) {
            Circuit c = build_cyclic_network(d, g);
            LinearMapZd m = linear_map(c);
            const auto op = full_operator(c, kMaxBasisSize, Exec::serial);
            const uint64_t size = op.size();
            const uint64_t samples = d <= 4 ? size : 200;
            for (uint64_t s = 0; s < samples; ++s) {
                uint64_t x = d <= 4 ? s : rng() % size;
                auto digits = basis_digits(d, d, x);
                uint64_t via_map = basis_index(d, m.apply(digits));
                StateVector out = simulate(c, StateVector::basis(d, digits), Exec::serial);
                if (op[x] != via_map || std::abs(out[via_map] - 1.0) > 1e-12) {
                    return "d=" + std::to_string(d) + " gates=" + std::to_string(g) +
                           " basis " + std::to_string(x);
                }
            }
        }
    }
    return {};
}

Failure trace_vs_sequence() {
    for (uint64_t d = 2; d <= 9; ++d) {
        const uint64_t steps = 3 * d * d;
        TraceArray tr = trace_array(d, steps);
        auto seq = seq_stream(d, d, steps + 1);
        for (uint64_t t = 0; t <= steps; ++t) {
            if (tr.entry(0, static_cast<int64_t>(t)) != seq[t].value()) {
                return "row 0 differs from the sequence at d=" + std::to_string(d);
            }
        }
        for (uint64_t i = 0; i + 1 < d; ++i) {
            for (int64_t t = tr.first_time() + 1; t <= tr.last_time(); ++t) {
                if (tr.entry(i + 1, t) != tr.entry(i, t - 1)) {
                    return "rows are not translates at d=" + std::to_string(d);
                }
            }
        }
        // Column t equals what the gate-level map says system (t mod d) holds.
        for (uint64_t t = 1; t <= 2 * d; ++t) {
            LinearMapZd m = linear_map(build_cyclic_network(d, t));
            uint64_t sys = tr.system_at(static_cast<int64_t>(t));
            for (uint64_t i = 0; i < d; ++i) {
                if (m.at(sys, i) != tr.entry(i, static_cast<int64_t>(t))) {
                    return "trace column disagrees with gate map at d=" + std::to_string(d);
                }
            }
        }
    }
    return {};
}

Failure shift_consistency() {
    for (uint64_t d = 2; d <= 9; ++d) {
        if (verify_swap(d).shift != induced_shift(d).shift) {
            return "shift mismatch at d=" + std::to_string(d);
        }
    }
    return {};
}

Failure unitarity_and_norm() {
    for (uint64_t d = 2; d <= 5; ++d) {
        Circuit c = build_cyclic_network(d, 3 * d + 1);
        auto op = full_operator(c);
        std::vector<bool> hit(op.size(), false);
        for (uint64_t y : op) {
            if (y >= op.size() || hit[y]) {
                return "operator is not a bijection at d=" + std::to_string(d);
            }
            hit[y] = true;
        }
        for (uint64_t seed = 0; seed < 5; ++seed) {
            StateVector out = simulate(c, StateVector::random(d, d, seed));
            if (std::abs(out.norm() - 1.0) > 1e-12) {
                return "norm drift at d=" + std::to_string(d);
            }
        }
    }
    return {};
}

Failure qutrit_swap() {
    Circuit c = build_cyclic_network(3, 8);
    auto op = full_operator(c);
    for (uint64_t a = 0; a < 3; ++a) {
        for (uint64_t b = 0; b < 3; ++b) {
            for (uint64_t cc = 0; cc < 3; ++cc) {
                if (op[9 * a + 3 * b + cc] != 9 * b + 3 * cc + a) {
                    return std::string("operator is not 9a+3b+c -> 9b+3c+a");
                }
            }
        }
    }
    return {};
}

Failure closed_form_properties() {
    for (uint64_t n : {2, 3, 4, 5, 8, 9, 16}) {
        ClosedForm cf = closed_form(n);
        Complex sum_beta = 0, sum_beta_alpha = 0;
        for (std::size_t l = 0; l < cf.alphas.size(); ++l) {
            const Complex z = 1.0 / cf.alphas[l];
            if (std::abs(1.0 - z - std::pow(z, static_cast<double>(n))) > 1e-10) {
                return "root residual for n=" + std::to_string(n);
            }
            sum_beta += cf.betas[l];
            sum_beta_alpha += cf.betas[l] * cf.alphas[l];
            bool has_conjugate = false;
            for (std::size_t k = 0; k < cf.alphas.size(); ++k) {
                has_conjugate |= std::abs(cf.alphas[k] - std::conj(cf.alphas[l])) < 1e-12 &&
                                 std::abs(cf.betas[k] - std::conj(cf.betas[l])) < 1e-12;
            }
            if (!has_conjugate) {
                return "conjugate symmetry for n=" + std::to_string(n);
            }
        }
        if (std::abs(sum_beta - 1.0) > 1e-9 || std::abs(sum_beta_alpha - 1.0) > 1e-9) {
            return "weights do not reproduce a_0 = a_1 = 1 for n=" + std::to_string(n);
        }
        if (!distinct_roots_check(n)) {
            return "roots not distinct for n=" + std::to_string(n);
        }
        compare_closed_vs_exact(n, 30, 1e-6);
    }
    ExactSeq s(4, 51);
    const double ratio = s[50].convert_to<double>() / s[49].convert_to<double>();
    if (std::abs(ratio / 1.380277569 - 1.0) > 0.01) {
        return std::string("growth ratio does not approach the dominant root");
    }
    return {};
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const SuiteOptions &options) {
    const std::vector<std::pair<std::string, std::function<Failure()>>> checks = {
        {"oracle-equivalence", [&] { return oracle_equivalence(options); }},
        {"pascal-identity", pascal_identity},
        {"hockey-stick", hockey_stick},
        {"exact-growth", [&] { return exact_growth(options); }},
        {"binomial-column-periods", binomial_periods},
        {"binomial-top-column", top_column},
        {"prime-cycle-theorem", prime_theorem},
        {"tail-shape-and-minimality", tail_and_minimality},
        {"composition", [&] { return composition(options); }},
        {"cycle-table", table_values},
        {"map-vs-simulation", map_vs_simulation},
        {"trace-vs-sequence", trace_vs_sequence},
        {"shift-consistency", shift_consistency},
        {"unitarity-and-norm", unitarity_and_norm},
        {"qutrit-swap", qutrit_swap},
        {"closed-form", closed_form_properties},
    };
    std::vector<CheckResult> results;
    for (const auto &[name, fn] : checks) {
        CheckResult r;
        r.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            Failure f = fn();
            r.passed = !f.has_value();
            r.detail = f.value_or("");
        } catch (const std::exception &e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace swapnet
