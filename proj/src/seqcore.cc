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

#include "swapnet/seqcore.h"

#include <string>

#include "swapnet/errors.h"

namespace swapnet {

namespace {

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b;
    return s >= m ? s - m : s;
}

uint64_t checked_pow(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) {
            throw InvalidArgument("power " + std::to_string(base) + "^" + std::to_string(exp) +
                                  " overflows 64 bits");
        }
    }
    return r;
}

void require_order(uint64_t d) {
    if (d < 2) {
        throw InvalidArgument("recurrence order must be >= 2, got " + std::to_string(d));
    }
}

}  // namespace

void require_modulus(uint64_t m) {
    if (m < 2) {
        throw InvalidArgument("modulus must be >= 2, got " + std::to_string(m));
    }
}

Residue::Residue(uint64_t value, uint64_t modulus) : value_(0), modulus_(modulus) {
    require_modulus(modulus);
    value_ = value % modulus;
}

Residue Residue::operator+(const Residue &other) const {
    if (other.modulus_ != modulus_) {
        throw InvalidArgument("adding residues with different moduli");
    }
    return Residue(add_mod(value_, other.value_, modulus_), modulus_);
}

bool is_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t f = 2; f <= n / f; ++f) {
        if (n % f == 0) {
            return false;
        }
    }
    return true;
}

PascalTable::PascalTable(uint64_t modulus, std::size_t max_n) : modulus_(modulus), max_n_(max_n) {
    require_modulus(modulus);
    entries_.resize(offset(max_n + 1));
    for (std::size_t n = 0; n <= max_n; ++n) {
        uint64_t *row = entries_.data() + offset(n);
        row[0] = 1 % modulus;
        row[n] = 1 % modulus;
        if (n < 2) {
            continue;
        }
        const uint64_t *prev = entries_.data() + offset(n - 1);
        for (std::size_t k = 1; k < n; ++k) {
            row[k] = add_mod(prev[k - 1], prev[k], modulus);
        }
    }
}

uint64_t PascalTable::value(std::size_t n, std::size_t k) const {
    if (n > max_n_) {
        throw InvalidArgument("row " + std::to_string(n) + " beyond table size " +
                              std::to_string(max_n_));
    }
    if (k > n) {
        return 0;
    }
    return entries_[offset(n) + k];
}

bool PascalTable::satisfies_pascal_rule() const {
    for (std::size_t n = 0; n <= max_n_; ++n) {
        if (value(n, 0) != 1 || value(n, n) != 1) {
            return false;
        }
        for (std::size_t k = 1; k < n; ++k) {
            if (value(n, k) != add_mod(value(n - 1, k - 1), value(n - 1, k), modulus_)) {
                return false;
            }
        }
    }
    return true;
}

Residue binom_mod(uint64_t n, uint64_t k, uint64_t m) {
    require_modulus(m);
    if (k > n) {
        return Residue(0, m);
    }
    // row[r] = C(row_n, r) for r <= k
    std::vector<uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (uint64_t row_n = 1; row_n <= n; ++row_n) {
        uint64_t top = row_n < k ? row_n : k;
        for (uint64_t r = top; r >= 1; --r) {
            row[r] = add_mod(row[r], row[r - 1], m);
        }
    }
    return Residue(row[k], m);
}

BigInt binom_exact(int64_t n, int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt r = 1;
    for (int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt a_exact(uint64_t j, uint64_t d) {
    require_order(d);
    // T_i = C(n_i, i) with n_i = j - (d-1) i. Consecutive terms are related by
    //   T_{i+1} = T_i * prod_{r<d} (n_i - i - r) / ((i+1) * prod_{r<d-1} (n_i - r)),
    // and every factor is positive while i + 1 <= floor(j/d).
    const uint64_t top = j / d;
    BigInt term = 1;
    BigInt sum = 1;
    for (uint64_t i = 0; i < top; ++i) {
        const uint64_t n = j - (d - 1) * i;
        BigInt num = term;
        for (uint64_t r = 0; r < d; ++r) {
            num *= n - i - r;
        }
        BigInt den = i + 1;
        for (uint64_t r = 0; r + 1 < d; ++r) {
            den *= n - r;
        }
        term = num / den;
        sum += term;
    }
    return sum;
}

Residue a_mod(uint64_t j, uint64_t d, uint64_t m) {
    require_order(d);
    require_modulus(m);
    const uint64_t top = j / d;
    const uint64_t lowest_n = j - (d - 1) * top;
    std::vector<uint64_t> row(top + 1, 0);
    row[0] = 1 % m;
    uint64_t sum = 0;
    for (uint64_t n = 0; n <= j; ++n) {
        if (n > 0) {
            uint64_t hi = n < top ? n : top;
            for (uint64_t r = hi; r >= 1; --r) {
                row[r] = add_mod(row[r], row[r - 1], m);
            }
        }
        if (n >= lowest_n && (j - n) % (d - 1) == 0) {
            uint64_t i = (j - n) / (d - 1);
            sum = add_mod(sum, row[i], m);
        }
    }
    return Residue(sum, m);
}

Residue a_mod(uint64_t j, uint64_t d, const PascalTable &table) {
    require_order(d);
    uint64_t sum = 0;
    for (uint64_t i = 0; i <= j / d; ++i) {
        sum = add_mod(sum, table.value(j - (d - 1) * i, i), table.modulus());
    }
    return Residue(sum, table.modulus());
}

SequenceWindow::SequenceWindow(uint64_t order, uint64_t modulus)
    : order_(order), modulus_(modulus), t_(order - 1) {
    require_order(order);
    require_modulus(modulus);
    ring_.assign(order, 1);
}

Residue SequenceWindow::newest() const {
    return term(order_ - 1);
}

Residue SequenceWindow::term(uint64_t i) const {
    if (i >= order_) {
        throw InvalidArgument("window offset " + std::to_string(i) + " outside order " +
                              std::to_string(order_));
    }
    return Residue(ring_[(head_ + i) % order_], modulus_);
}

bool SequenceWindow::is_all_ones() const {
    for (uint64_t v : ring_) {
        if (v != 1) {
            return false;
        }
    }
    return true;
}

Residue SequenceWindow::advance() {
    const std::size_t newest = head_ == 0 ? order_ - 1 : head_ - 1;
    uint64_t next = add_mod(ring_[newest], ring_[head_], modulus_);
    ring_[head_] = next;
    head_ = head_ + 1 == order_ ? 0 : head_ + 1;
    ++t_;
    return Residue(next, modulus_);
}

std::vector<Residue> seq_stream(uint64_t d, uint64_t m, uint64_t count) {
    SequenceWindow window(d, m);
    std::vector<Residue> out;
    out.reserve(count);
    for (uint64_t j = 0; j < count && j < d; ++j) {
        out.push_back(window.term(j));
    }
    while (out.size() < count) {
        out.push_back(window.advance());
    }
    return out;
}

ExactSeq::ExactSeq(uint64_t order, std::size_t count) : order_(order) {
    require_order(order);
    extend_to(count);
}

void ExactSeq::extend_to(std::size_t count) {
    terms_.reserve(count);
    while (terms_.size() < count) {
        std::size_t j = terms_.size();
        if (j < order_) {
            terms_.emplace_back(1);
        } else {
            terms_.push_back(terms_[j - 1] + terms_[j - order_]);
        }
    }
}

bool hockey_stick_check(uint64_t j, uint64_t k) {
    BigInt lhs = 0;
    for (uint64_t i = 0; i <= k; ++i) {
        lhs += binom_exact(static_cast<int64_t>(j + i), static_cast<int64_t>(i));
    }
    return lhs == binom_exact(static_cast<int64_t>(j + k + 1), static_cast<int64_t>(k));
}

Residue binom_top_column_check(uint64_t p, int64_t j) {
    if (!is_prime(p)) {
        throw InvalidArgument(std::to_string(p) + " is not prime");
    }
    if (j < -1) {
        throw InvalidArgument("index must be >= -1, got " + std::to_string(j));
    }
    const auto sp = static_cast<int64_t>(p);
    Residue r = binom_mod(static_cast<uint64_t>(sp + j), p - 1, p);
    const uint64_t expected = ((j % sp) + sp) % sp == sp - 1 ? 1 : 0;
    if (r.value() != expected) {
        throw InvariantViolation("C(p+j, p-1) mod p = " + std::to_string(r.value()) + " for p=" +
                                 std::to_string(p) + ", j=" + std::to_string(j) + "; expected " +
                                 std::to_string(expected));
    }
    return r;
}

uint64_t predicted_binomial_period(uint64_t p, uint64_t a, uint64_t k) {
    if (!is_prime(p)) {
        throw InvalidArgument(std::to_string(p) + " is not prime");
    }
    if (a < 1 || k < 1) {
        throw InvalidArgument("exponent and column must be >= 1");
    }
    uint64_t e = 0;
    for (uint64_t q = p; q <= k; q *= p) {
        ++e;
    }
    return checked_pow(p, a + e);
}

uint64_t binomial_column_period(uint64_t p, uint64_t a, uint64_t k, uint64_t horizon) {
    const uint64_t predicted = predicted_binomial_period(p, a, k);
    const uint64_t m = checked_pow(p, a);
    if (horizon / 3 < predicted) {
        throw Inconclusive("horizon " + std::to_string(horizon) + " shorter than 3 periods", 0);
    }
    std::vector<uint64_t> values;
    values.reserve(horizon);
    std::vector<uint64_t> row(k + 1, 0);
    row[0] = 1 % m;
    for (uint64_t n = 1; values.size() < horizon; ++n) {
        uint64_t hi = n < k ? n : k;
        for (uint64_t r = hi; r >= 1; --r) {
            row[r] = add_mod(row[r], row[r - 1], m);
        }
        if (n >= k) {
            values.push_back(row[k]);
        }
    }
    for (uint64_t period = 1; period <= horizon / 2; ++period) {
        bool fits = true;
        for (uint64_t i = 0; i + period < horizon && fits; ++i) {
            fits = values[i] == values[i + period];
        }
        if (fits) {
            return period;
        }
    }
    throw Inconclusive("no period found within horizon", horizon);
}

}  // namespace swapnet
