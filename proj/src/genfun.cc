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

#include "swapnet/genfun.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "swapnet/errors.h"
#include "swapnet/seqcore.h"

namespace swapnet {

namespace {

constexpr double kDistinctTolerance = 1e-9;
constexpr double kRealSnap = 1e-12;

double max_residual(const Polynomial &poly, const std::vector<Complex> &roots) {
    double worst = 0;
    for (const Complex &z : roots) {
        worst = std::max(worst, std::abs(poly(z)));
    }
    return worst;
}

// Force exact conjugate symmetry, which real coefficients guarantee.
void pair_conjugates(std::vector<Complex> &roots) {
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (std::abs(roots[i].imag()) < kRealSnap) {
            roots[i] = Complex(roots[i].real(), 0.0);
            used[i] = true;
        }
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i] || roots[i].imag() < 0) {
            continue;
        }
        std::size_t best = roots.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < roots.size(); ++k) {
            if (used[k] || k == i || roots[k].imag() > 0) {
                continue;
            }
            double dist = std::abs(roots[k] - std::conj(roots[i]));
            if (dist < best_dist) {
                best_dist = dist;
                best = k;
            }
        }
        if (best == roots.size()) {
            continue;
        }
        Complex mid = 0.5 * (roots[i] + std::conj(roots[best]));
        roots[i] = mid;
        roots[best] = std::conj(mid);
        used[i] = used[best] = true;
    }
}

Complex int_pow(Complex base, uint64_t e) {
    Complex r = 1.0;
    for (; e > 0; e >>= 1) {
        if (e & 1) {
            r *= base;
        }
        base *= base;
    }
    return r;
}

double min_pairwise_distance(const std::vector<Complex> &zs) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < zs.size(); ++i) {
        for (std::size_t k = i + 1; k < zs.size(); ++k) {
            best = std::min(best, std::abs(zs[i] - zs[k]));
        }
    }
    return best;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty() || coefficients_.back() == 0.0) {
        throw InvalidArgument("polynomial needs a non-zero leading coefficient");
    }
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) {
        throw InvalidArgument("derivative of a constant is not a valid polynomial here");
    }
    std::vector<double> c(degree());
    for (std::size_t i = 1; i < coefficients_.size(); ++i) {
        c[i - 1] = coefficients_[i] * static_cast<double>(i);
    }
    return Polynomial(std::move(c));
}

Polynomial sequence_denominator(uint64_t n) {
    if (n < 2) {
        throw InvalidArgument("order must be >= 2");
    }
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    c[1] = -1.0;
    c[n] = -1.0;
    return Polynomial(std::move(c));
}

std::vector<Complex> find_roots(const Polynomial &poly, double tol, int max_iter) {
    const std::size_t n = poly.degree();
    if (n < 1) {
        throw InvalidArgument("find_roots needs degree >= 1");
    }
    std::vector<double> monic = poly.coefficients();
    const double lead = monic.back();
    for (double &c : monic) {
        c /= lead;
    }
    const Polynomial p(monic);
    if (n == 1) {
        return {Complex(-monic[0], 0.0)};
    }

    std::vector<Complex> roots(n);
    const Complex seed(0.4, 0.9);
    Complex z = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        roots[k] = z;
        z *= seed;
    }

    double best = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < max_iter; ++iter) {
        double largest_step = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex denom = 1.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) {
                    denom *= roots[i] - roots[k];
                }
            }
            if (denom == Complex(0.0)) {
                denom = Complex(std::numeric_limits<double>::epsilon());
            }
            Complex step = p(roots[i]) / denom;
            roots[i] -= step;
            largest_step = std::max(largest_step, std::abs(step));
        }
        // Residuals are judged against the caller's polynomial, not the
        // monic rescaling.
        const double current = max_residual(poly, roots);
        best = std::min(best, current);
        if (current < tol && largest_step < 1e-12) {
            break;
        }
        if (iter + 1 == max_iter && best >= tol) {
            throw NumericError("root iteration did not converge; best residual " +
                                   std::to_string(best),
                               best);
        }
    }

    const Polynomial dp = poly.derivative();
    for (Complex &r : roots) {
        for (int k = 0; k < 3; ++k) {
            Complex slope = dp(r);
            if (slope == Complex(0.0)) {
                break;
            }
            Complex next = r - poly(r) / slope;
            if (std::abs(poly(next)) >= std::abs(poly(r))) {
                break;
            }
            r = next;
        }
    }
    pair_conjugates(roots);
    const double final_residual = max_residual(poly, roots);
    if (final_residual >= tol) {
        throw NumericError("root residual " + std::to_string(final_residual) + " above tolerance",
                           final_residual);
    }
    return roots;
}

ClosedForm closed_form(uint64_t n, uint64_t validate_count) {
    const Polynomial b = sequence_denominator(n);
    const std::vector<Complex> roots = find_roots(b);

    ClosedForm cf;
    cf.n = n;
    for (const Complex &r : roots) {
        cf.alphas.push_back(1.0 / r);
    }
    pair_conjugates(cf.alphas);
    std::sort(cf.alphas.begin(), cf.alphas.end(), [](const Complex &x, const Complex &y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    const double spread = min_pairwise_distance(cf.alphas);
    if (spread <= kDistinctTolerance) {
        throw NumericError("characteristic roots are not distinct", spread);
    }

    const auto nd = static_cast<double>(n);
    for (const Complex &a : cf.alphas) {
        // B'(z) = -1 - n z^(n-1) at z = 1/alpha.
        Complex derivative = -1.0 - nd * int_pow(1.0 / a, n - 1);
        cf.betas.push_back(-a / derivative);
    }
    // Real alphas have real weights and conjugate alphas conjugate weights;
    // drop the rounding noise so the sum is exactly real.
    for (std::size_t l = 0; l < cf.alphas.size(); ++l) {
        if (cf.alphas[l].imag() == 0.0) {
            cf.betas[l] = Complex(cf.betas[l].real(), 0.0);
        } else if (cf.alphas[l].imag() < 0.0) {
            for (std::size_t k = 0; k < cf.alphas.size(); ++k) {
                if (cf.alphas[k] == std::conj(cf.alphas[l])) {
                    cf.betas[k] = std::conj(cf.betas[l]);
                }
            }
        }
    }

    ExactSeq exact(n, validate_count);
    for (uint64_t j = 0; j < validate_count; ++j) {
        double value = eval_closed(cf, j).approx;
        cf.residual = std::max(cf.residual, std::abs(value - exact[j].convert_to<double>()));
    }
    return cf;
}

ClosedValue eval_closed(const ClosedForm &cf, uint64_t j) {
    Complex sum = 0;
    for (std::size_t l = 0; l < cf.alphas.size(); ++l) {
        sum += cf.betas[l] * int_pow(cf.alphas[l], j);
    }
    if (std::abs(sum.imag()) >= 1e-6 * std::max(1.0, std::abs(sum.real()))) {
        throw NumericError("closed form has imaginary residue at j=" + std::to_string(j),
                           std::abs(sum.imag()));
    }
    return ClosedValue{sum.real(), std::llround(sum.real())};
}

bool distinct_roots_check(uint64_t n) {
    const Polynomial b = sequence_denominator(n);
    const std::vector<Complex> roots = find_roots(b);
    if (min_pairwise_distance(roots) <= kDistinctTolerance) {
        return false;
    }
    // A repeated root must solve B = B' = 0, which forces z = n/(n-1);
    // it is a repeated root only if B' vanishes there too.
    const auto nd = static_cast<double>(n);
    const Complex candidate(nd / (nd - 1.0), 0.0);
    return std::abs(b.derivative()(candidate)) > kDistinctTolerance;
}

double compare_closed_vs_exact(uint64_t n, uint64_t count, double tol) {
    const ClosedForm cf = closed_form(n, 0);
    double worst = 0;
    for (uint64_t j = 0; j < count; ++j) {
        const ClosedValue v = eval_closed(cf, j);
        const BigInt expected = a_exact(j, n);
        const double residual = std::abs(v.approx - expected.convert_to<double>());
        worst = std::max(worst, residual);
        if (BigInt(v.rounded) != expected || residual > tol) {
            throw Mismatch("closed form disagrees with the exact sequence at j=" +
                               std::to_string(j) + " (residual " + std::to_string(residual) + ")",
                           j);
        }
    }
    return worst;
}

}  // namespace swapnet
