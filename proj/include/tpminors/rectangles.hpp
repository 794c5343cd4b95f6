#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tpminors/errors.hpp"
#include "tpminors/geometry.hpp"
#include "tpminors/parallel.hpp"

namespace tpm {

enum class RectangleMode {
    diagonal,        // bottom-left / top-right pairs only
    both_diagonals,  // also top-left / bottom-right pairs
};

/// Number of point pairs spanning an axis-parallel rectangle of the given
/// area. In diagonal mode a pair (p, q) counts when q lies on the hyperbola
/// (x - p.x)(y - p.y) = area with q above and to the right of p. Each
/// unordered pair is counted at most once.
inline std::uint64_t unit_rectangles(const std::vector<Point2>& pts, const Rational& area, RectangleMode mode,
                                     std::size_t threads = 1) {
    if (area.sign() <= 0) throw DomainError("rectangle area must be positive");
    const std::size_t n = pts.size();
    std::vector<std::uint64_t> partial(std::max<std::size_t>(1, std::min(threads, std::max<std::size_t>(n, 1))));
    parallel_ranges(n, partial.size(), [&](std::size_t b, std::size_t e, std::size_t slot) {
        std::uint64_t c = 0;
        for (std::size_t i = b; i < e; ++i) {
            const auto& p = pts[i];
            for (std::size_t j = 0; j < n; ++j) {
                const auto& q = pts[j];
                if (!(q.x > p.x)) continue;
                Rational dy = q.y - p.y;
                if (dy.sign() > 0) {
                    if ((q.x - p.x) * dy == area) ++c;
                } else if (dy.sign() < 0 && mode == RectangleMode::both_diagonals) {
                    if ((q.x - p.x) * dy == -area) ++c;
                }
            }
        }
        partial[slot] = c;
    });
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

/// [1..n]^2 as a point list.
inline std::vector<Point2> integer_grid(std::size_t n) {
    std::vector<Point2> g;
    g.reserve(n * n);
    for (long i = 1; i <= static_cast<long>(n); ++i)
        for (long j = 1; j <= static_cast<long>(n); ++j) g.push_back({Rational(i), Rational(j)});
    return g;
}

}  // namespace tpm
