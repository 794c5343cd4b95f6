#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tpminors/errors.hpp"
#include "tpminors/rational.hpp"

namespace tpm {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
    std::string to_string() const { return "(" + x.to_string() + "," + y.to_string() + ")"; }
};

/// det of the 2x2 matrix with columns p, q.
inline Rational det2(const Point2& p, const Point2& q) { return p.x * q.y - q.x * p.y; }

/// Non-vertical line y = m*x + c.
struct Line2 {
    Rational m;
    Rational c;

    bool contains(const Point2& p) const { return p.y == m * p.x + c; }
    friend bool operator==(const Line2&, const Line2&) = default;
    std::string to_string() const { return "y=" + m.to_string() + "x+" + c.to_string(); }
};

/// Hyperplane sum_j coeffs[j]*x_j = offset.
struct Hyperplane {
    std::vector<Rational> coeffs;
    Rational offset;

    Hyperplane() = default;
    Hyperplane(std::vector<Rational> c, Rational t) : coeffs(std::move(c)), offset(std::move(t)) {
        bool any = false;
        for (const auto& v : coeffs) any = any || !v.is_zero();
        if (!any) throw DomainError("hyperplane with all-zero coefficients");
    }

    std::size_t dim() const { return coeffs.size(); }

    Rational evaluate(const std::vector<Rational>& p) const {
        if (p.size() != coeffs.size())
            throw DimensionError("point of dimension " + std::to_string(p.size()) + " against hyperplane in R^" +
                                 std::to_string(coeffs.size()));
        Rational s;
        for (std::size_t j = 0; j < coeffs.size(); ++j) s += coeffs[j] * p[j];
        return s;
    }

    bool contains(const std::vector<Rational>& p) const { return evaluate(p) == offset; }

    /// Scaled so the first nonzero coefficient is 1; equal keys iff the two
    /// hyperplanes are the same point set.
    std::vector<Rational> normalized_key() const {
        std::size_t lead = 0;
        while (coeffs[lead].is_zero()) ++lead;
        std::vector<Rational> key;
        key.reserve(coeffs.size() + 1);
        for (const auto& v : coeffs) key.push_back(v / coeffs[lead]);
        key.push_back(offset / coeffs[lead]);
        return key;
    }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// True iff (coeffs, offset) of a and b are proportional, i.e. they describe
/// the same hyperplane.
inline bool proportional(const Hyperplane& a, const Hyperplane& b) {
    if (a.dim() != b.dim()) return false;
    return a.normalized_key() == b.normalized_key();
}

}  // namespace tpm
