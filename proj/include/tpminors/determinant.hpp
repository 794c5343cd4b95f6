#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tpminors/errors.hpp"
#include "tpminors/matrix.hpp"
#include "tpminors/rational.hpp"

namespace tpm {

namespace detail {

// Largest order handled by cofactor expansion; larger orders go through
// fraction-free elimination.
inline constexpr std::size_t kCofactorMaxOrder = 4;

// Laplace expansion along the first selected row. Indices are 0-based.
inline Rational cofactor_det(const RatMatrix& a, std::span<const std::size_t> rows,
                             std::span<const std::size_t> cols) {
    const std::size_t k = rows.size();
    if (k == 1) return a(rows[0], cols[0]);
    if (k == 2) return a(rows[0], cols[0]) * a(rows[1], cols[1]) - a(rows[0], cols[1]) * a(rows[1], cols[0]);
    std::array<std::size_t, kCofactorMaxOrder> sub{};
    Rational acc;
    for (std::size_t j = 0; j < k; ++j) {
        const Rational& e = a(rows[0], cols[j]);
        if (e.is_zero()) continue;
        std::size_t w = 0;
        for (std::size_t t = 0; t < k; ++t)
            if (t != j) sub[w++] = cols[t];
        Rational m = e * cofactor_det(a, rows.subspan(1), std::span<const std::size_t>(sub.data(), k - 1));
        if (j % 2 == 0)
            acc += m;
        else
            acc -= m;
    }
    return acc;
}

// Bareiss elimination on an integer matrix (row-major, n x n). Row swaps on a
// zero pivot; returns 0 when no pivot exists.
inline mpz_class bareiss_det(std::vector<mpz_class> m, std::size_t n) {
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
            sign = -sign;
        }
        const mpz_class& pivot = m[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = m[i * n + j] * pivot - m[i * n + k] * m[k * n + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i * n + j] = std::move(v);
            }
            m[i * n + k] = 0;
        }
        prev = pivot;
    }
    mpz_class d = m[n * n - 1];
    return sign < 0 ? mpz_class(-d) : d;
}

// Clears denominators row by row, then runs Bareiss over the integers.
inline Rational elimination_det(const RatMatrix& a, std::span<const std::size_t> rows,
                                std::span<const std::size_t> cols) {
    const std::size_t n = rows.size();
    std::vector<mpz_class> m(n * n);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& q = a(rows[i], cols[j]).value();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto& q = a(rows[i], cols[j]).value();
            mpz_class f = l / q.get_den();
            m[i * n + j] = q.get_num() * f;
        }
        scale *= l;
    }
    return Rational(bareiss_det(std::move(m), n), scale);
}

inline Rational det_unchecked(const RatMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    if (rows.size() <= kCofactorMaxOrder) return cofactor_det(a, rows, cols);
    return elimination_det(a, rows, cols);
}

}  // namespace detail

/// Exact determinant of a square matrix.
inline Rational det(const RatMatrix& m) {
    if (!m.square())
        throw DimensionError("determinant of non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " matrix");
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return detail::det_unchecked(m, idx, idx);
}

/// Minor Δ_{I,J} = det(A_{I,J}) for 1-based tuples.
inline Rational minor(const RatMatrix& a, const IndexTuple& I, const IndexTuple& J) {
    if (I.size() != J.size())
        throw DimensionError("row tuple " + I.to_string() + " and column tuple " + J.to_string() + " differ in size");
    if (I.back() > a.rows() || J.back() > a.cols())
        throw DimensionError("minor index out of range for " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " matrix");
    std::vector<std::size_t> r(I.size()), c(J.size());
    for (std::size_t i = 0; i < I.size(); ++i) {
        r[i] = I[i] - 1;
        c[i] = J[i] - 1;
    }
    return detail::det_unchecked(a, r, c);
}

}  // namespace tpm
