#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tpminors/determinant.hpp"
#include "tpminors/errors.hpp"
#include "tpminors/matrix.hpp"

namespace tpm {

struct TpWitness {
    std::size_t order;
    IndexTuple rows;
    IndexTuple cols;
    Rational value;
};

/// Outcome of a total-positivity check. When `ok` is false the witness holds
/// the first non-positive minor found.
struct TpVerdict {
    bool ok = true;
    std::optional<TpWitness> witness;

    std::string describe() const {
        if (ok) return "TP ok";
        const auto& w = *witness;
        return "not TP: order " + std::to_string(w.order) + " minor I=" + w.rows.to_string() +
               " J=" + w.cols.to_string() + " = " + w.value.to_string();
    }
};

namespace detail {

inline std::vector<std::size_t> to_zero_based(const std::vector<std::size_t>& c) {
    std::vector<std::size_t> z(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) z[i] = c[i] - 1;
    return z;
}

}  // namespace detail

/// Exhaustive check of every minor of order 1..max_order (default: all
/// orders). Scan order is lexicographic in (order, I, J), so the witness is
/// deterministic.
inline TpVerdict verify_tp(const RatMatrix& a, std::optional<std::size_t> max_order = std::nullopt) {
    const std::size_t full = std::min(a.rows(), a.cols());
    const std::size_t top = max_order ? std::min(*max_order, full) : full;
    if (max_order && *max_order == 0) throw DomainError("order-0 minors are not defined");
    for (std::size_t k = 1; k <= top; ++k) {
        auto I = first_combination(k);
        do {
            auto r = detail::to_zero_based(I);
            auto J = first_combination(k);
            do {
                auto c = detail::to_zero_based(J);
                Rational v = detail::det_unchecked(a, r, c);
                if (v.sign() <= 0) return {false, TpWitness{k, IndexTuple(I), IndexTuple(J), std::move(v)}};
            } while (next_combination(J, a.cols()));
        } while (next_combination(I, a.rows()));
    }
    return {};
}

/// Fast total-positivity test over solid minors only (consecutive rows and
/// consecutive columns). By Fekete's criterion this decides full TP with the
/// same verdict as verify_tp; the witness may differ.
inline TpVerdict verify_tp_contiguous(const RatMatrix& a) {
    const std::size_t full = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= full; ++k) {
        std::vector<std::size_t> r(k), c(k);
        for (std::size_t i = 0; i + k <= a.rows(); ++i) {
            for (std::size_t t = 0; t < k; ++t) r[t] = i + t;
            for (std::size_t j = 0; j + k <= a.cols(); ++j) {
                for (std::size_t t = 0; t < k; ++t) c[t] = j + t;
                Rational v = detail::det_unchecked(a, r, c);
                if (v.sign() <= 0)
                    return {false, TpWitness{k, IndexTuple::contiguous(i + 1, k), IndexTuple::contiguous(j + 1, k),
                                             std::move(v)}};
            }
        }
    }
    return {};
}

/// Multiplies row 1 by 1/Δ_{I0,J0} so the designated full-height minor
/// becomes 1. Every full-height minor scales by the same positive factor.
inline RatMatrix scale_to_unit(const RatMatrix& a, const IndexTuple& I0, const IndexTuple& J0) {
    if (I0.size() != a.rows())
        throw DimensionError("scale_to_unit needs a full-height minor (|I0| = " + std::to_string(a.rows()) + ")");
    Rational m = minor(a, I0, J0);
    if (m.sign() <= 0) throw DomainError("designated minor " + m.to_string() + " is not positive");
    RatMatrix out = a;
    for (std::size_t j = 0; j < a.cols(); ++j) out(0, j) /= m;
    return out;
}

}  // namespace tpm
