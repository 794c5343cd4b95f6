#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tpminors/errors.hpp"
#include "tpminors/geometry.hpp"
#include "tpminors/rational.hpp"

namespace tpm {

struct IncidenceConfig {
    std::vector<Point2> points;
    std::vector<Line2> lines;
};

namespace detail {

struct PairHash {
    std::size_t operator()(const std::pair<Rational, Rational>& p) const {
        return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
    }
};

inline void require_distinct(const IncidenceConfig& cfg) {
    std::unordered_set<std::pair<Rational, Rational>, PairHash> seen;
    for (std::size_t i = 0; i < cfg.points.size(); ++i)
        if (!seen.insert({cfg.points[i].x, cfg.points[i].y}).second)
            throw PreconditionError("duplicate point " + cfg.points[i].to_string() + " at index " + std::to_string(i));
    seen.clear();
    for (std::size_t i = 0; i < cfg.lines.size(); ++i)
        if (!seen.insert({cfg.lines[i].m, cfg.lines[i].c}).second)
            throw PreconditionError("duplicate line " + cfg.lines[i].to_string() + " at index " + std::to_string(i));
}

}  // namespace detail

/// Elekes-type family: points [1..N] x [1..2N^2], lines y = a*x + b with
/// 1 <= a <= N, 1 <= b <= N^2. Each line meets exactly N points, N^4
/// incidences in total.
inline IncidenceConfig elekes_config(std::size_t N) {
    if (N == 0) throw DomainError("elekes_config needs N >= 1");
    IncidenceConfig cfg;
    const long n = static_cast<long>(N);
    cfg.points.reserve(2 * N * N * N);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= 2 * n * n; ++j) cfg.points.push_back({Rational(i), Rational(j)});
    cfg.lines.reserve(N * N * N);
    for (long a = 1; a <= n; ++a)
        for (long b = 1; b <= n * n; ++b) cfg.lines.push_back({Rational(a), Rational(b)});
    return cfg;
}

/// One failed placement constraint. Indices are 0-based into points/lines.
struct ConstraintViolation {
    int constraint;  // 1..6
    std::vector<std::size_t> lines;
    std::vector<std::size_t> points;
};

struct ConstraintReport {
    std::vector<ConstraintViolation> violations;

    bool empty() const { return violations.empty(); }
    bool has(int constraint) const {
        return std::any_of(violations.begin(), violations.end(),
                           [&](const auto& v) { return v.constraint == constraint; });
    }
    std::size_t count(int constraint) const {
        return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                      [&](const auto& v) { return v.constraint == constraint; }));
    }
    std::string summary() const {
        std::string s;
        for (int c = 1; c <= 6; ++c) {
            auto n = count(c);
            if (n) s += (s.empty() ? "" : ", ") + std::string("constraint ") + std::to_string(c) + ": " +
                        std::to_string(n);
        }
        return s.empty() ? "no violations" : s;
    }
};

/// Checks the six placement constraints needed to turn a point-line
/// configuration into a TP matrix:
///   1. no two lines parallel
///   2. every slope positive
///   3. every y-intercept positive
///   4. every two points linearly independent
///   5. no line's translate through the origin passes through a point
///   6. every point strictly inside the first quadrant
inline ConstraintReport check_constraints(const IncidenceConfig& cfg) {
    ConstraintReport rep;
    auto& out = rep.violations;

    std::unordered_map<Rational, std::vector<std::size_t>> by_slope;
    for (std::size_t i = 0; i < cfg.lines.size(); ++i) by_slope[cfg.lines[i].m].push_back(i);
    {
        std::vector<const std::vector<std::size_t>*> groups;
        for (const auto& [m, idx] : by_slope)
            if (idx.size() > 1) groups.push_back(&idx);
        std::sort(groups.begin(), groups.end(), [](auto* a, auto* b) { return a->front() < b->front(); });
        for (const auto* g : groups)
            for (std::size_t a = 0; a < g->size(); ++a)
                for (std::size_t b = a + 1; b < g->size(); ++b) out.push_back({1, {(*g)[a], (*g)[b]}, {}});
    }
    for (std::size_t i = 0; i < cfg.lines.size(); ++i)
        if (cfg.lines[i].m.sign() <= 0) out.push_back({2, {i}, {}});
    for (std::size_t i = 0; i < cfg.lines.size(); ++i)
        if (cfg.lines[i].c.sign() <= 0) out.push_back({3, {i}, {}});

    // Points grouped by direction from the origin; the origin itself is
    // dependent with everything.
    std::unordered_map<Rational, std::vector<std::size_t>> by_dir;
    std::vector<std::size_t> vertical, origin;
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
        const auto& p = cfg.points[i];
        if (p.x.is_zero())
            (p.y.is_zero() ? origin : vertical).push_back(i);
        else
            by_dir[p.y / p.x].push_back(i);
    }
    {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        auto add_group = [&](const std::vector<std::size_t>& g) {
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = a + 1; b < g.size(); ++b) pairs.emplace_back(g[a], g[b]);
        };
        for (const auto& [d, g] : by_dir) add_group(g);
        add_group(vertical);
        for (auto o : origin)
            for (std::size_t j = 0; j < cfg.points.size(); ++j)
                if (j != o) pairs.emplace_back(std::min(o, j), std::max(o, j));
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        for (auto [a, b] : pairs) out.push_back({4, {}, {a, b}});
    }

    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
        const auto& p = cfg.points[i];
        if (p.x.is_zero()) {
            if (p.y.is_zero())
                for (std::size_t l = 0; l < cfg.lines.size(); ++l) out.push_back({5, {l}, {i}});
            continue;
        }
        auto it = by_slope.find(p.y / p.x);
        if (it != by_slope.end())
            for (auto l : it->second) out.push_back({5, {l}, {i}});
    }
    for (std::size_t i = 0; i < cfg.points.size(); ++i)
        if (cfg.points[i].x.sign() <= 0 || cfg.points[i].y.sign() <= 0) out.push_back({6, {}, {i}});
    return rep;
}

/// Thrown when no transformation within the retry budget produced a
/// configuration satisfying all six constraints. Carries the input unchanged.
class CanonicalizationError : public Error {
   public:
    CanonicalizationError(const std::string& msg, IncidenceConfig original, ConstraintReport last)
        : Error("canonicalization failed: " + msg), original_(std::move(original)), last_(std::move(last)) {}
    const IncidenceConfig& original() const { return original_; }
    const ConstraintReport& last_report() const { return last_; }

   private:
    IncidenceConfig original_;
    ConstraintReport last_;
};

namespace detail {

// Small signed rational with denominator 97 and |numerator| in [1, span],
// drawn from the raw mt19937_64 stream so results do not depend on the
// standard library's distribution implementation.
inline Rational draw_rational(std::mt19937_64& rng, std::uint64_t span, bool allow_negative) {
    long v = static_cast<long>(rng() % span) + 1;
    if (allow_negative && (rng() & 1U)) v = -v;
    return Rational(v, 97L);
}

// Projective map (x, y) -> (x, y) / (u*x + v*y + s). Returns false if a
// point lands at infinity or a line becomes vertical.
inline bool apply_projective(const IncidenceConfig& in, const Rational& u, const Rational& v, const Rational& s,
                             IncidenceConfig& out) {
    out.points.clear();
    out.lines.clear();
    for (const auto& p : in.points) {
        Rational w = u * p.x + v * p.y + s;
        if (w.is_zero()) return false;
        out.points.push_back({p.x / w, p.y / w});
    }
    for (const auto& l : in.lines) {
        Rational den = s + l.c * v;
        if (den.is_zero()) return false;
        out.lines.push_back({(l.m * s - l.c * u) / den, l.c / den});
    }
    return true;
}

// Shear y -> y + k*x followed by translation (x, y) -> (x + tx, y + ty).
inline IncidenceConfig apply_affine(const IncidenceConfig& in, const Rational& k, const Rational& tx,
                                    const Rational& ty) {
    IncidenceConfig out;
    out.points.reserve(in.points.size());
    for (const auto& p : in.points) out.points.push_back({p.x + tx, p.y + k * p.x + ty});
    out.lines.reserve(in.lines.size());
    for (const auto& l : in.lines) {
        Rational m = l.m + k;
        out.lines.push_back({m, l.c + ty - m * tx});
    }
    return out;
}

}  // namespace detail

inline constexpr std::size_t kDefaultCanonicalizeBudget = 64;

/// Moves a configuration into a position satisfying all six constraints of
/// check_constraints while keeping its incidence graph. Point i and line j of
/// the output are the images of point i and line j of the input.
///
/// Each attempt applies a seeded rational projective map (which breaks
/// parallel classes by sending their common point at infinity to a finite
/// point), then a shear making every slope positive and a translation moving
/// points into the first quadrant and intercepts above zero, with a random
/// jitter on the vertical offset. The result is verified exactly; failed
/// attempts are retried with fresh parameters up to `budget` times.
inline IncidenceConfig canonicalize_config(const IncidenceConfig& cfg, std::uint64_t seed,
                                           std::size_t budget = kDefaultCanonicalizeBudget) {
    detail::require_distinct(cfg);
    ConstraintReport last = check_constraints(cfg);
    if (last.empty()) return cfg;

    std::mt19937_64 rng(seed);
    const bool negative_ok = std::any_of(cfg.points.begin(), cfg.points.end(),
                                         [](const Point2& p) { return p.x.sign() <= 0 || p.y.sign() <= 0; });
    IncidenceConfig proj;
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        Rational u = detail::draw_rational(rng, 50, negative_ok);
        Rational v = detail::draw_rational(rng, 50, negative_ok);
        Rational s(1);
        if (!detail::apply_projective(cfg, u, v, s, proj)) continue;

        Rational k;
        if (!proj.lines.empty()) {
            Rational min_m = proj.lines.front().m;
            for (const auto& l : proj.lines) min_m = std::min(min_m, l.m);
            if (min_m <= Rational(0)) k = Rational(1) - min_m;
        }
        Rational tx, ty;
        if (!proj.points.empty()) {
            Rational min_x = proj.points.front().x;
            for (const auto& p : proj.points) min_x = std::min(min_x, p.x);
            if (min_x <= Rational(0)) tx = Rational(1) - min_x;
            Rational min_y = proj.points.front().y + k * proj.points.front().x;
            for (const auto& p : proj.points) min_y = std::min(min_y, p.y + k * p.x);
            if (min_y <= Rational(0)) ty = Rational(1) - min_y;
        }
        for (const auto& l : proj.lines) {
            Rational c = l.c + ty - (l.m + k) * tx;
            if (c <= Rational(0)) ty += Rational(1) - c;
        }
        ty += Rational(static_cast<long>(rng() % 9973) + 1, 9973L);

        IncidenceConfig out = detail::apply_affine(proj, k, tx, ty);
        last = check_constraints(out);
        if (last.empty()) return out;
    }
    throw CanonicalizationError("retry budget of " + std::to_string(budget) + " exhausted (" + last.summary() + ")",
                                cfg, last);
}

// JSON: {"points": [["p/q","p/q"],...], "lines": [{"m":"p/q","c":"p/q"},...]}.
// Numbers are written as strings; integer JSON numbers are accepted on input.

namespace detail {

inline Rational json_rational(const nlohmann::json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw FormatError("expected rational string or integer, got " + j.dump());
}

}  // namespace detail

inline nlohmann::json to_json(const IncidenceConfig& cfg) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : cfg.points) pts.push_back({p.x.to_string(), p.y.to_string()});
    nlohmann::json lns = nlohmann::json::array();
    for (const auto& l : cfg.lines) lns.push_back({{"m", l.m.to_string()}, {"c", l.c.to_string()}});
    return {{"points", pts}, {"lines", lns}};
}

inline IncidenceConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw FormatError("configuration must be a JSON object");
    IncidenceConfig cfg;
    if (j.contains("points")) {
        if (!j["points"].is_array()) throw FormatError("\"points\" must be an array");
        for (const auto& p : j["points"]) {
            if (!p.is_array() || p.size() != 2) throw FormatError("point must be a 2-element array: " + p.dump());
            cfg.points.push_back({detail::json_rational(p[0]), detail::json_rational(p[1])});
        }
    }
    if (j.contains("lines")) {
        if (!j["lines"].is_array()) throw FormatError("\"lines\" must be an array");
        for (const auto& l : j["lines"]) {
            if (!l.is_object() || !l.contains("m") || !l.contains("c"))
                throw FormatError("line must be an object with \"m\" and \"c\": " + l.dump());
            cfg.lines.push_back({detail::json_rational(l["m"]), detail::json_rational(l["c"])});
        }
    }
    return cfg;
}

inline IncidenceConfig read_config(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return config_from_json(j);
}

}  // namespace tpm
