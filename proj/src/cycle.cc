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

#include <exception>

#include <boost/integer/common_factor.hpp>

#include "swapnet/errors.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swapnet {

uint64_t PrimePower::value() const {
    uint64_t v = 1;
    for (uint64_t i = 0; i < exponent; ++i) {
        v *= p;
    }
    return v;
}

Factorization factorize(uint64_t n) {
    if (n < 2) {
        throw InvalidArgument("cannot factorise " + std::to_string(n));
    }
    Factorization f{n, {}};
    uint64_t rest = n;
    for (uint64_t p = 2; p <= rest / p; ++p) {
        if (rest % p != 0) {
            continue;
        }
        PrimePower pp{p, 0};
        while (rest % p == 0) {
            rest /= p;
            ++pp.exponent;
        }
        f.factors.push_back(pp);
    }
    if (rest > 1) {
        f.factors.push_back(PrimePower{rest, 1});
    }
    return f;
}

std::string_view to_string(CycleMethod method) {
    switch (method) {
        case CycleMethod::direct:
            return "direct";
        case CycleMethod::composed:
            return "composed";
        case CycleMethod::predicted_and_verified:
            return "predicted-and-verified";
    }
    return "direct";
}

WindowReturn find_window_return(uint64_t d, uint64_t m, uint64_t budget) {
    if (d < 2) {
        throw InvalidArgument("recurrence order must be >= 2");
    }
    require_modulus(m);
    if (budget < 1) {
        throw InvalidArgument("budget must be >= 1");
    }
    // The recurrence is reversible (trailing coefficient 1 is a unit), so
    // the sequence is purely periodic and the first return of the all-ones
    // window is the minimal period.
    std::vector<uint64_t> ring(d, 1 % m);
    std::size_t oldest = 0;
    uint64_t newest = 1 % m;
    uint64_t ones_run = d;
    uint64_t zeros_run = 0;
    uint64_t zeros_before_ones = 0;
    for (uint64_t t = d; t - d + 1 <= budget; ++t) {
        uint64_t next = newest + ring[oldest];
        if (next >= m) {
            next -= m;
        }
        ring[oldest] = next;
        oldest = oldest + 1 == d ? 0 : oldest + 1;
        newest = next;
        if (next == 1) {
            if (ones_run == 0) {
                zeros_before_ones = zeros_run;
            }
            ++ones_run;
            zeros_run = 0;
            if (ones_run >= d) {
                return WindowReturn{t - d + 1, zeros_before_ones >= d - 1};
            }
        } else {
            ones_run = 0;
            zeros_run = next == 0 ? zeros_run + 1 : 0;
        }
    }
    throw Inconclusive("no return of the initial window mod " + std::to_string(m) + " for order " +
                           std::to_string(d) + " within " + std::to_string(budget) + " steps",
                       budget);
}

uint64_t cycle_length_direct(uint64_t d, uint64_t m, uint64_t budget) {
    return find_window_return(d, m, budget).period;
}

bool tail_shape_holds(uint64_t d, uint64_t m, uint64_t period) {
    if (period < d) {
        return false;
    }
    SequenceWindow w(d, m);
    while (w.index() < period) {
        w.advance();
    }
    // Window now holds a_{P-d+1} .. a_P.
    for (uint64_t i = 0; i + 1 < d; ++i) {
        if (w.term(i).value() != 0) {
            return false;
        }
    }
    return w.newest().value() == 1;
}

uint64_t predicted_cycle(uint64_t p, uint64_t m) {
    if (!is_prime(p) || m < 1) {
        throw InvalidArgument("prediction needs a prime and exponent >= 1");
    }
    uint64_t lead = 1;
    uint64_t square = 1;
    bool overflow = false;
    for (uint64_t i = 0; i + 1 < m; ++i) {
        overflow |= __builtin_mul_overflow(lead, p, &lead);
    }
    for (uint64_t i = 0; i < 2 * m; ++i) {
        overflow |= __builtin_mul_overflow(square, p, &square);
    }
    uint64_t out = 0;
    overflow |= __builtin_mul_overflow(lead, square - 1, &out);
    if (overflow) {
        throw InvalidArgument("predicted cycle overflows 64 bits");
    }
    return out;
}

uint64_t default_budget(uint64_t d, uint64_t modulus) {
    if (d == modulus) {
        Factorization f = factorize(d);
        if (f.is_prime_power()) {
            return 2 * predicted_cycle(f.factors[0].p, f.factors[0].exponent);
        }
    }
    return kFallbackBudget;
}

CycleReport cycle_length(uint64_t d, std::optional<uint64_t> budget) {
    const Factorization f = factorize(d);
    CycleReport r;
    r.d = d;
    BigInt lcm = 1;
    for (const PrimePower &pp : f.factors) {
        const uint64_t modulus = pp.value();
        const uint64_t len =
            cycle_length_direct(d, modulus, budget.value_or(default_budget(d, modulus)));
        r.per_factor.push_back(FactorCycle{modulus, len});
        lcm = boost::integer::lcm(lcm, BigInt(len));
    }
    r.length = lcm;
    r.shift = static_cast<uint64_t>(lcm % d);
    r.permutation.resize(d);
    for (uint64_t i = 0; i < d; ++i) {
        r.permutation[i] = (i + r.shift) % d;
    }
    if (f.is_prime_power()) {
        const PrimePower pp = f.factors[0];
        const bool match = r.length == predicted_cycle(pp.p, pp.exponent);
        if (pp.exponent == 1 && !match) {
            throw InvariantViolation("prime dimension " + std::to_string(d) +
                                     " has cycle length " + r.length.str() + ", not d^2-1");
        }
        r.conjecture_holds = match;
        r.method = match ? CycleMethod::predicted_and_verified : CycleMethod::direct;
    } else {
        r.method = CycleMethod::composed;
    }
    return r;
}

bool verify_conjecture(uint64_t p, uint64_t m, std::optional<uint64_t> budget) {
    const uint64_t predicted = predicted_cycle(p, m);
    const uint64_t d = PrimePower{p, m}.value();
    const WindowReturn w = find_window_return(d, d, budget.value_or(2 * predicted));
    return w.period == predicted && w.zero_tail;
}

InducedShift induced_shift(uint64_t d, std::optional<uint64_t> budget) {
    CycleReport r = cycle_length(d, budget);
    return InducedShift{r.shift, std::move(r.permutation)};
}

std::vector<ScanEntry> scan(uint64_t max_n, std::optional<uint64_t> budget, Exec exec, int jobs) {
    if (max_n < 2) {
        throw InvalidArgument("scan needs a largest dimension >= 2");
    }
    std::vector<ScanEntry> out;
    for (uint64_t d = 2; d <= max_n; ++d) {
        out.push_back(ScanEntry{d, std::nullopt, {}});
    }
    // Exceptions must not cross the parallel region; anything other than a
    // budget miss is rethrown after the loop.
    std::vector<std::exception_ptr> failures(out.size());
    auto run_one = [&](std::size_t i) {
        try {
            out[i].report = cycle_length(out[i].d, budget);
        } catch (const Inconclusive &ex) {
            out[i].inconclusive = ex.what();
        } catch (...) {
            failures[i] = std::current_exception();
        }
    };
    auto rethrow_first = [&] {
        for (auto &f : failures) {
            if (f) {
                std::rethrow_exception(f);
            }
        }
    };
    const auto count = static_cast<int64_t>(out.size());
    if (exec == Exec::serial) {
        for (int64_t i = 0; i < count; ++i) {
            run_one(static_cast<std::size_t>(i));
        }
        rethrow_first();
        return out;
    }
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#else
    (void)jobs;
#endif
    for (int64_t i = 0; i < count; ++i) {
        run_one(static_cast<std::size_t>(i));
    }
    rethrow_first();
    return out;
}

}  // namespace swapnet
