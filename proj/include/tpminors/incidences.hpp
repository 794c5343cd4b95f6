#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpminors/errors.hpp"
#include "tpminors/geometry.hpp"
#include "tpminors/hyperplanes.hpp"
#include "tpminors/incidence_config.hpp"

namespace tpm {

/// I(P, L): number of (point, line) pairs with the point on the line.
inline std::uint64_t point_line_incidences(const IncidenceConfig& cfg,
                                           std::vector<std::pair<std::size_t, std::size_t>>* incidences = nullptr) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < cfg.points.size(); ++i)
        for (std::size_t l = 0; l < cfg.lines.size(); ++l)
            if (cfg.lines[l].contains(cfg.points[i])) {
                ++n;
                if (incidences) incidences->emplace_back(i, l);
            }
    return n;
}

inline void check_dims(const std::vector<std::vector<Rational>>& points, std::size_t d) {
    for (const auto& p : points)
        if (p.size() != d)
            throw DimensionError("point of dimension " + std::to_string(p.size()) + " among hyperplanes in R^" +
                                 std::to_string(d));
}

/// Number of (point, hyperplane) pairs with the point on the hyperplane.
inline std::uint64_t point_hyperplane_incidences(const std::vector<std::vector<Rational>>& points,
                                                 const std::vector<Hyperplane>& planes) {
    if (planes.empty()) return 0;
    check_dims(points, planes.front().dim());
    std::uint64_t n = 0;
    for (const auto& h : planes) {
        if (h.dim() != planes.front().dim()) throw DimensionError("hyperplanes of mixed dimension");
        for (const auto& p : points)
            if (h.contains(p)) ++n;
    }
    return n;
}

/// Ordered variant over a hyperplane family: point k (1-based) is only
/// tested against members whose tuple I has max(I) < k. Over the family for
/// t this equals the number of ascending column d-tuples with minor t.
inline std::uint64_t point_hyperplane_incidences_ordered(const std::vector<std::vector<Rational>>& points,
                                                         const std::vector<FamilyMember>& family) {
    if (family.empty()) return 0;
    check_dims(points, family.front().plane.dim());
    std::uint64_t n = 0;
    for (const auto& m : family)
        for (std::size_t k = m.tuple.back() + 1; k <= points.size(); ++k)
            if (m.plane.contains(points[k - 1])) ++n;
    return n;
}

struct Kd2Counterexample {
    std::vector<std::size_t> points;  // d point indices, 0-based
    std::pair<std::size_t, std::size_t> planes;
};

/// Checks that no d points (d = ambient dimension) lie on two members of the
/// plane list at once. Members are distinguished by list position, so a
/// repeated plane with d points on it is reported.
inline std::optional<Kd2Counterexample> find_Kd2(const std::vector<std::vector<Rational>>& points,
                                                 const std::vector<Hyperplane>& planes) {
    if (planes.empty()) return std::nullopt;
    const std::size_t d = planes.front().dim();
    check_dims(points, d);
    std::vector<std::vector<std::size_t>> on(planes.size());
    for (std::size_t h = 0; h < planes.size(); ++h)
        for (std::size_t p = 0; p < points.size(); ++p)
            if (planes[h].contains(points[p])) on[h].push_back(p);
    for (std::size_t a = 0; a < planes.size(); ++a) {
        if (on[a].size() < d) continue;
        for (std::size_t b = a + 1; b < planes.size(); ++b) {
            if (on[b].size() < d) continue;
            std::vector<std::size_t> common;
            std::size_t i = 0, j = 0;
            while (i < on[a].size() && j < on[b].size()) {
                if (on[a][i] < on[b][j])
                    ++i;
                else if (on[b][j] < on[a][i])
                    ++j;
                else {
                    common.push_back(on[a][i]);
                    ++i;
                    ++j;
                }
            }
            if (common.size() >= d) {
                common.resize(d);
                return Kd2Counterexample{std::move(common), {a, b}};
            }
        }
    }
    return std::nullopt;
}

inline bool verify_no_Kd2(const std::vector<std::vector<Rational>>& points, const std::vector<Hyperplane>& planes) {
    return !find_Kd2(points, planes).has_value();
}

inline std::vector<Hyperplane> planes_of(const std::vector<FamilyMember>& family) {
    std::vector<Hyperplane> out;
    out.reserve(family.size());
    for (const auto& m : family) out.push_back(m.plane);
    return out;
}

}  // namespace tpm
