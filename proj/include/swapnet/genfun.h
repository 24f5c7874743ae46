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

#ifndef SWAPNET_GENFUN_H
#define SWAPNET_GENFUN_H

// Closed form of the binomial-summation sequence from its generating
// function A(z) = 1 / B(z), B(z) = 1 - z - z^n. With alpha_l the reciprocals
// of the (distinct) roots of B,
//
//     a_j = sum_l beta_l alpha_l^j,   beta_l = -alpha_l / B'(1/alpha_l).

#include <complex>
#include <cstdint>
#include <vector>

namespace swapnet {

using Complex = std::complex<double>;

/// Real polynomial, constant term first. Leading coefficient non-zero.
class Polynomial {
   public:
    explicit Polynomial(std::vector<double> coefficients);

    std::size_t degree() const {
        return coefficients_.size() - 1;
    }
    const std::vector<double> &coefficients() const {
        return coefficients_;
    }
    Complex operator()(Complex z) const;
    Polynomial derivative() const;

   private:
    std::vector<double> coefficients_;
};

/// B(z) = 1 - z - z^n.
Polynomial sequence_denominator(uint64_t n);

inline constexpr double kRootTolerance = 1e-12;
inline constexpr int kRootMaxIterations = 2000;

/// All complex roots by Weierstrass (Durand-Kerner) simultaneous iteration
/// from the points (0.4 + 0.9i)^k, followed by a Newton polish. Every
/// returned root has |poly(root)| < tol. Throws NumericError with the best
/// residual seen when max_iter is exhausted.
std::vector<Complex> find_roots(const Polynomial &poly, double tol = kRootTolerance,
                                int max_iter = kRootMaxIterations);

struct ClosedForm {
    uint64_t n = 0;
    /// Sorted by real part, then imaginary part. Non-real values come in
    /// exact conjugate pairs.
    std::vector<Complex> alphas;
    std::vector<Complex> betas;
    /// max |sum beta alpha^j - a_j| over the validation range.
    double residual = 0;
};

/// Throws NumericError if the roots do not converge or two alphas are
/// closer than 1e-9.
ClosedForm closed_form(uint64_t n, uint64_t validate_count = 30);

struct ClosedValue {
    double approx;
    int64_t rounded;
};

/// Real part of sum beta alpha^j and its nearest integer. Throws
/// NumericError if the imaginary part exceeds 1e-6 * max(1, |value|).
ClosedValue eval_closed(const ClosedForm &cf, uint64_t j);

/// Numerical distinctness of the roots plus the analytic check that the
/// only repeated-root candidate z = n/(n-1) is not a zero of B'.
bool distinct_roots_check(uint64_t n);

/// max_j<count |eval_closed - a_exact(j, n)|. Throws Mismatch at the first
/// j whose rounded value differs or whose residual exceeds tol.
double compare_closed_vs_exact(uint64_t n, uint64_t count, double tol);

}  // namespace swapnet

#endif
