#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tpminors/errors.hpp"
#include "tpminors/geometry.hpp"
#include "tpminors/incidence_config.hpp"
#include "tpminors/matrix.hpp"
#include "tpminors/total_positivity.hpp"

namespace tpm {

/// The line {(x, y) : a*y - b*x = 1} for p = (a, b). A point q lies on it iff
/// det(p, q) = 1. Since a != 0 the line is never vertical and is returned as
/// y = (b/a)x + 1/a.
inline Line2 dual_line(const Point2& p) {
    if (p.x.is_zero() || p.y.is_zero())
        throw DomainError("dual line of " + p.to_string() + " needs both coordinates nonzero");
    return {p.y / p.x, Rational(1) / p.x};
}

/// Mate point of y = m*x + c (m, c > 0): the first-quadrant point at distance
/// 1/dist(origin, l) on the parallel through the origin. In closed form it is
/// (1/c, m/c), and det(mate, p) = 1 for every p on l.
inline Point2 mate_point(const Line2& l) {
    if (l.m.sign() <= 0 || l.c.sign() <= 0)
        throw PreconditionError("mate point needs positive slope and intercept, got " + l.to_string());
    return {Rational(1) / l.c, l.m / l.c};
}

/// Which input object produced a column of an assembled 2 x n matrix.
struct ColumnSource {
    bool is_mate;       // true: mate point of a line; false: an input point
    std::size_t index;  // 0-based index into cfg.points or cfg.lines
};

struct Assembly {
    RatMatrix matrix;
    std::vector<ColumnSource> sources;
};

/// Builds the 2 x |P ∪ P'| matrix whose columns are the input points together
/// with one mate point per line, sorted by strictly increasing slope through
/// the origin. Every incidence (p, l) of the configuration becomes a 2x2
/// minor equal to 1.
inline Assembly assemble_tp_2xn_detailed(const IncidenceConfig& cfg) {
    auto rep = check_constraints(cfg);
    if (!rep.empty()) throw PreconditionError("configuration not canonical (" + rep.summary() + ")");
    if (cfg.points.empty() && cfg.lines.empty()) throw PreconditionError("empty configuration");

    struct Col {
        Point2 q;
        ColumnSource src;
    };
    std::vector<Col> cols;
    cols.reserve(cfg.points.size() + cfg.lines.size());
    for (std::size_t i = 0; i < cfg.points.size(); ++i) cols.push_back({cfg.points[i], {false, i}});
    for (std::size_t i = 0; i < cfg.lines.size(); ++i) cols.push_back({mate_point(cfg.lines[i]), {true, i}});

    // All x > 0, so y1/x1 < y2/x2 iff y1*x2 < y2*x1.
    auto slope_less = [](const Col& a, const Col& b) { return a.q.y * b.q.x < b.q.y * a.q.x; };
    std::stable_sort(cols.begin(), cols.end(), slope_less);
    for (std::size_t i = 1; i < cols.size(); ++i)
        if (!slope_less(cols[i - 1], cols[i]))
            throw Error("assembly error: slope tie between " + cols[i - 1].q.to_string() + " and " +
                        cols[i].q.to_string());

    Assembly out{RatMatrix(2, cols.size()), {}};
    out.sources.reserve(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        out.matrix(0, j) = cols[j].q.x;
        out.matrix(1, j) = cols[j].q.y;
        out.sources.push_back(cols[j].src);
    }
    auto verdict = verify_tp_contiguous(out.matrix);
    if (!verdict.ok) throw Error("assembly error: result is not TP (" + verdict.describe() + ")");
    return out;
}

inline RatMatrix assemble_tp_2xn(const IncidenceConfig& cfg) { return assemble_tp_2xn_detailed(cfg).matrix; }

}  // namespace tpm
