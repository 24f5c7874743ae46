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

#ifndef SWAPNET_SEQCORE_H
#define SWAPNET_SEQCORE_H

// The binomial-summation sequence
//
//     a_j = sum_{i=0}^{floor(j/d)} C(j - (d-1) i, i)
//
// and its recurrence a_{j+d} = a_{j+d-1} + a_j with a_0 = ... = a_{d-1} = 1.
// Two independent routes are kept first-class: the direct binomial sum
// (exact, or mod m through Pascal rows) and the recurrence (ExactSeq,
// SequenceWindow). Each serves as the other's oracle.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace swapnet {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z_m, m >= 2.
class Residue {
   public:
    Residue(uint64_t value, uint64_t modulus);

    uint64_t value() const {
        return value_;
    }
    uint64_t modulus() const {
        return modulus_;
    }

    Residue operator+(const Residue &other) const;
    bool operator==(const Residue &other) const = default;

   private:
    uint64_t value_;
    uint64_t modulus_;
};

/// Throws InvalidArgument unless m >= 2.
void require_modulus(uint64_t m);

bool is_prime(uint64_t n);

/// Rows 0..max_n of Pascal's triangle reduced mod `modulus`, built by
/// Pascal's rule (valid over any commutative ring, so composite moduli are
/// fine).
class PascalTable {
   public:
    PascalTable(uint64_t modulus, std::size_t max_n);

    uint64_t modulus() const {
        return modulus_;
    }
    std::size_t max_n() const {
        return max_n_;
    }
    /// C(n, k) mod m; 0 when k > n. Requires n <= max_n.
    uint64_t value(std::size_t n, std::size_t k) const;
    Residue at(std::size_t n, std::size_t k) const {
        return Residue(value(n, k), modulus_);
    }
    /// Re-checks boundary ones and Pascal's rule on every stored entry.
    bool satisfies_pascal_rule() const;

   private:
    static std::size_t offset(std::size_t n) {
        return n * (n + 1) / 2;
    }

    uint64_t modulus_;
    std::size_t max_n_;
    std::vector<uint64_t> entries_;
};

/// C(n, k) mod m from a rolling Pascal row. C(n, k) = 0 for k > n.
Residue binom_mod(uint64_t n, uint64_t k, uint64_t m);

/// Exact C(n, k); 0 for k < 0 or k > n.
BigInt binom_exact(int64_t n, int64_t k);

/// a_j by the direct binomial sum, exactly.
BigInt a_exact(uint64_t j, uint64_t d);

/// a_j mod m by the direct binomial sum over a rolling Pascal row.
Residue a_mod(uint64_t j, uint64_t d, uint64_t m);

/// Same, reading binomials from a prebuilt table (table.max_n() >= j).
Residue a_mod(uint64_t j, uint64_t d, const PascalTable &table);

/// Rolling d-term window of the recurrence over Z_m. Starts at the all-ones
/// window (a_0 .. a_{d-1}) with index() == d - 1.
class SequenceWindow {
   public:
    SequenceWindow(uint64_t order, uint64_t modulus);

    uint64_t order() const {
        return order_;
    }
    uint64_t modulus() const {
        return modulus_;
    }
    /// Index t of the newest term.
    uint64_t index() const {
        return t_;
    }
    /// a_t.
    Residue newest() const;
    /// a_{t-d+1+i} for i in [0, d).
    Residue term(uint64_t i) const;
    bool is_all_ones() const;

    /// Moves to t + 1 and returns a_{t+1} = a_t + a_{t-d+1}.
    Residue advance();

   private:
    uint64_t order_;
    uint64_t modulus_;
    uint64_t t_;
    std::size_t head_ = 0;  // position of the oldest term
    std::vector<uint64_t> ring_;
};

/// a_0 .. a_{count-1} mod m via SequenceWindow.
std::vector<Residue> seq_stream(uint64_t d, uint64_t m, uint64_t count);

/// Exact terms of the recurrence, grown on demand.
class ExactSeq {
   public:
    explicit ExactSeq(uint64_t order, std::size_t count = 0);

    uint64_t order() const {
        return order_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    void extend_to(std::size_t count);
    const BigInt &operator[](std::size_t j) const {
        return terms_.at(j);
    }
    const std::vector<BigInt> &terms() const {
        return terms_;
    }

   private:
    uint64_t order_;
    std::vector<BigInt> terms_;
};

/// Hockey-stick identity: sum_{i=0}^{k} C(j+i, i) == C(j+k+1, k), exactly.
bool hockey_stick_check(uint64_t j, uint64_t k);

/// C(p+j, p-1) mod p for prime p and j >= -1. Throws InvariantViolation if
/// the value is not 1 when j = p-1 (mod p) and 0 otherwise; throws
/// InvalidArgument if p is not prime or j < -1.
Residue binom_top_column_check(uint64_t p, int64_t j);

/// p^(a + floor(log_p k)).
uint64_t predicted_binomial_period(uint64_t p, uint64_t a, uint64_t k);

/// Smallest period of j -> C(j, k) mod p^a observed over j in
/// [k, k + horizon). Throws Inconclusive if horizon < 3 * the predicted
/// period or no period fits the window.
uint64_t binomial_column_period(uint64_t p, uint64_t a, uint64_t k, uint64_t horizon);

}  // namespace swapnet

#endif
