#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "tpminors/determinant.hpp"
#include "tpminors/errors.hpp"
#include "tpminors/geometry.hpp"
#include "tpminors/matrix.hpp"

namespace tpm {

struct FamilyMember {
    IndexTuple tuple;  // the (d-1) column indices fixed in the determinant
    Hyperplane plane;
};

/// Columns of A as points of R^rows.
inline std::vector<std::vector<Rational>> column_points(const RatMatrix& a) {
    std::vector<std::vector<Rational>> pts(a.cols(), std::vector<Rational>(a.rows()));
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) pts[j][i] = a(i, j);
    return pts;
}

namespace detail {

struct KeyHash {
    std::size_t operator()(const std::vector<Rational>& v) const {
        std::size_t h = v.size();
        for (const auto& r : v) h = h * 1099511628211ULL ^ r.hash();
        return h;
    }
};

}  // namespace detail

/// For every ascending (d-1)-tuple I of columns of the d x n matrix A, the
/// hyperplane det[A_{., I} | x] = t. Coefficients are the cofactors of the
/// last column, stored unnormalized. Column p_k with k outside I lies on the
/// member for I exactly when the d x d minor on columns I ∪ {k} equals t
/// (up to the column order of I ∪ {k}; for k > max(I) it is the minor
/// itself).
///
/// Throws PreconditionError if some d columns of A are linearly dependent or
/// if two members coincide.
inline std::vector<FamilyMember> hyperplane_family(const RatMatrix& a, const Rational& t) {
    const std::size_t d = a.rows();
    const std::size_t n = a.cols();
    if (d < 2) throw DimensionError("hyperplane family needs d >= 2 rows");
    if (n < d - 1) throw DimensionError("hyperplane family needs at least d-1 columns");
    if (t.is_zero()) throw DomainError("hyperplane family needs t != 0");

    const auto pts = column_points(a);
    std::vector<FamilyMember> out;
    std::unordered_set<std::vector<Rational>, detail::KeyHash> keys;
    std::vector<std::size_t> rows(d - 1);
    for_each_combination(n, d - 1, [&](const std::vector<std::size_t>& I) {
        std::vector<std::size_t> cols(I.size());
        for (std::size_t i = 0; i < I.size(); ++i) cols[i] = I[i] - 1;
        std::vector<Rational> coeffs(d);
        bool any = false;
        for (std::size_t j = 0; j < d; ++j) {
            std::size_t w = 0;
            for (std::size_t r = 0; r < d; ++r)
                if (r != j) rows[w++] = r;
            Rational c = detail::det_unchecked(a, rows, cols);
            // (-1)^{(j+1) + d} with 1-based row j+1
            if ((j + 1 + d) % 2 == 1) c = -c;
            any = any || !c.is_zero();
            coeffs[j] = std::move(c);
        }
        IndexTuple tuple{std::vector<std::size_t>(I)};
        if (!any) throw PreconditionError("TP violation: columns " + tuple.to_string() + " are linearly dependent");
        Hyperplane h(std::move(coeffs), t);
        for (std::size_t k = 1; k <= n; ++k) {
            if (tuple.contains(k)) continue;
            if (h.evaluate(pts[k - 1]).is_zero())
                throw PreconditionError("TP violation: columns " + tuple.to_string() + " and " + std::to_string(k) +
                                        " are linearly dependent");
        }
        if (!keys.insert(h.normalized_key()).second)
            throw PreconditionError("hyperplane for " + tuple.to_string() + " coincides with an earlier member");
        out.push_back({std::move(tuple), std::move(h)});
    });
    return out;
}

}  // namespace tpm
