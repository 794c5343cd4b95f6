#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "tpminors/errors.hpp"
#include "tpminors/matrix.hpp"
#include "tpminors/rational.hpp"

namespace tpm {

/// n x n matrix with A_ij = (b_i + a_j)^(k-1), for a strictly increasing and
/// b strictly decreasing positive sequences. Every k x k minor is positive.
inline RatMatrix power_sum_matrix(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t k) {
    const std::size_t n = a.size();
    if (b.size() != n) throw PreconditionError("power_sum_matrix: |a| != |b|");
    if (n < 2) throw PreconditionError("power_sum_matrix: need n >= 2");
    if (k < 2) throw PreconditionError("power_sum_matrix: need k >= 2");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].sign() <= 0 || b[i].sign() <= 0) throw PreconditionError("power_sum_matrix: entries must be positive");
        if (i > 0 && !(a[i - 1] < a[i])) throw PreconditionError("power_sum_matrix: a must be strictly increasing");
        if (i > 0 && !(b[i - 1] > b[i])) throw PreconditionError("power_sum_matrix: b must be strictly decreasing");
    }
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = pow(b[i] + a[j], static_cast<unsigned>(k - 1));
    return m;
}

/// prod_{i=0}^{k-1} C(k-1, i) * prod_{t<l} (a_l - a_t) * prod_{w<u} (b_w - b_u).
/// Ordering of a and b is not checked here.
inline Rational power_sum_det_closed_form(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                          std::size_t k) {
    if (a.size() != k || b.size() != k)
        throw DimensionError("closed form needs |a| = |b| = k (got " + std::to_string(a.size()) + ", " +
                             std::to_string(b.size()) + ", k=" + std::to_string(k) + ")");
    if (k < 2) throw PreconditionError("closed form needs k >= 2");
    mpz_class binom_prod = 1;
    for (unsigned long i = 0; i < k; ++i) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k - 1), i);
        binom_prod *= c;
    }
    Rational r{binom_prod};
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t l = t + 1; l < k; ++l) r *= a[l] - a[t];
    for (std::size_t w = 0; w < k; ++w)
        for (std::size_t u = w + 1; u < k; ++u) r *= b[w] - b[u];
    return r;
}

/// n x n TP_2 grid matrix A_ij = (n - i + 1) + j (1-based). Rows run in
/// decreasing order of the row offset, so the 2x2 minor on rows i < j and
/// columns k < l equals (l - k)(j - i): the area of an axis-parallel grid
/// rectangle.
inline RatMatrix grid_matrix(std::size_t n) {
    if (n < 2) throw PreconditionError("grid_matrix needs n >= 2");
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>((n - i) + (j + 1)));
    return m;
}

}  // namespace tpm
