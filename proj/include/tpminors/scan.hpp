#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "tpminors/census.hpp"
#include "tpminors/divisors.hpp"
#include "tpminors/errors.hpp"
#include "tpminors/fit.hpp"
#include "tpminors/incidence_config.hpp"
#include "tpminors/incidences.hpp"
#include "tpminors/rectangles.hpp"
#include "tpminors/structured_matrices.hpp"
#include "tpminors/tp_assembly.hpp"

namespace tpm {

enum class Family { elekes_2xn, grid, power_sum, random_points };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::elekes_2xn: return "elekes-2xn";
        case Family::grid: return "grid";
        case Family::power_sum: return "power-sum";
        case Family::random_points: return "random-points";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    for (auto f : {Family::elekes_2xn, Family::grid, Family::power_sum, Family::random_points})
        if (family_name(f) == s) return f;
    throw PreconditionError("unknown family '" + s + "' (elekes-2xn, grid, power-sum, random-points)");
}

struct RunConfig {
    Family family = Family::elekes_2xn;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 0;
    std::size_t order = 2;  // minor order for power-sum
    std::size_t threads = 1;
    std::optional<std::filesystem::path> instance_dir;  // persist each instance here
};

struct ScanRow {
    std::uint64_t size = 0;
    std::uint64_t count = 0;
    std::vector<std::pair<std::string, std::uint64_t>> aux;
};

struct ScanReport {
    Family family = Family::elekes_2xn;
    std::vector<ScanRow> rows;
    double fitted_slope = std::numeric_limits<double>::quiet_NaN();
    double fitted_intercept = std::numeric_limits<double>::quiet_NaN();
    double bound_slope = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::string> warnings;
    bool complete = true;
    std::string error;
};

/// Reference exponent each family is compared against.
inline double bound_slope(Family f, std::size_t order) {
    switch (f) {
        case Family::elekes_2xn: return 4.0 / 3.0;
        case Family::grid: return 2.0;
        case Family::power_sum: return order == 2 ? 10.0 / 3.0 : 2.0 * static_cast<double>(order);
        case Family::random_points: return 4.0 / 3.0;
    }
    return 0.0;
}

/// n distinct points of the integer grid [1..g]^2 with g = ceil(sqrt(2n)) + 1,
/// chosen by a seeded partial Fisher-Yates shuffle.
inline std::vector<Point2> random_grid_points(std::size_t n, std::uint64_t seed) {
    const auto g = static_cast<std::size_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(n)))) + 1;
    std::vector<std::size_t> cells(g * g);
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = i;
    std::mt19937_64 rng(seed);
    std::vector<Point2> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (cells.size() - i));
        std::swap(cells[i], cells[j]);
        pts.push_back({Rational(static_cast<long>(cells[i] / g + 1)), Rational(static_cast<long>(cells[i] % g + 1))});
    }
    return pts;
}

/// Concrete object built for one scan size.
using ScanInstance = std::variant<RatMatrix, std::vector<Point2>>;

inline void write_instance(const std::filesystem::path& file, const ScanInstance& inst) {
    std::ofstream out(file);
    if (!out) throw FormatError("cannot write instance file " + file.string());
    if (const auto* m = std::get_if<RatMatrix>(&inst)) {
        write_matrix(out, *m);
    } else {
        IncidenceConfig cfg{std::get<std::vector<Point2>>(inst), {}};
        out << to_json(cfg).dump() << '\n';
    }
}

/// Builds the family instance for one size and runs its counter.
///   elekes-2xn:    size N -> 2 x 3N^3 TP matrix, count = unit 2x2 minors
///   grid:          size n -> max over k <= n/2 of grid_area_k_count(n, k)
///   power-sum:     size n -> a = (1..n), b = (n..1), count = most repeated
///                  order-k minor multiplicity
///   random-points: size n -> n random grid points, count = unit rectangles
inline std::pair<ScanRow, std::optional<ScanInstance>> scan_one(const RunConfig& cfg, std::size_t size) {
    ScanRow row;
    CensusOptions opt{cfg.threads, false};
    switch (cfg.family) {
        case Family::elekes_2xn: {
            auto raw = elekes_config(size);
            auto canon = canonicalize_config(raw, cfg.seed + size);
            auto m = assemble_tp_2xn(canon);
            row.size = m.cols();
            row.count = count_minors_equal(m, 2, Rational(1), MinorScope::columns_only, opt);
            row.aux = {{"N", size}, {"incidences", point_line_incidences(canon)}};
            return {row, ScanInstance{std::move(m)}};
        }
        case Family::grid: {
            if (size < 2) throw PreconditionError("grid scan needs n >= 2");
            std::uint64_t best = 0, arg = 1;
            for (std::uint64_t k = 1; k <= size / 2; ++k) {
                auto c = grid_area_k_count(size, k);
                if (c > best) best = c, arg = k;
            }
            row.size = size;
            row.count = best;
            row.aux = {{"k", arg}, {"div_k", divisor_count(arg)}};
            return {row, std::nullopt};
        }
        case Family::power_sum: {
            std::vector<Rational> a, b;
            for (std::size_t i = 1; i <= size; ++i) {
                a.emplace_back(static_cast<long>(i));
                b.emplace_back(static_cast<long>(size + 1 - i));
            }
            auto m = power_sum_matrix(a, b, cfg.order);
            auto [v, c] = max_repeated_minor(m, cfg.order, MinorScope::all_pairs, opt);
            row.size = size;
            row.count = c;
            row.aux = {{"order", cfg.order}};
            return {row, ScanInstance{std::move(m)}};
        }
        case Family::random_points: {
            auto pts = random_grid_points(size, cfg.seed + size);
            row.size = size;
            row.count = unit_rectangles(pts, Rational(1), RectangleMode::diagonal, cfg.threads);
            return {row, ScanInstance{std::move(pts)}};
        }
    }
    return {row, std::nullopt};
}

/// Runs every size, then fits ln(count) against ln(size). A failing size
/// stops the scan; rows gathered so far are kept and the report is marked
/// incomplete.
inline ScanReport scan_exponent(const RunConfig& cfg) {
    if (cfg.sizes.size() < 3) throw PreconditionError("scan needs at least 3 sizes");
    for (std::size_t i = 1; i < cfg.sizes.size(); ++i)
        if (cfg.sizes[i] <= cfg.sizes[i - 1]) throw PreconditionError("scan sizes must be strictly increasing");

    ScanReport rep;
    rep.family = cfg.family;
    rep.bound_slope = bound_slope(cfg.family, cfg.order);
    if (cfg.instance_dir) std::filesystem::create_directories(*cfg.instance_dir);
    for (auto size : cfg.sizes) {
        try {
            auto [row, inst] = scan_one(cfg, size);
            if (cfg.instance_dir && inst)
                write_instance(*cfg.instance_dir / (family_name(cfg.family) + "_" + std::to_string(size) +
                                                    (std::holds_alternative<RatMatrix>(*inst) ? ".txt" : ".json")),
                               *inst);
            rep.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            rep.complete = false;
            rep.error = "size " + std::to_string(size) + ": " + e.what();
            break;
        }
    }

    std::vector<double> xs, ys;
    for (const auto& r : rep.rows) {
        if (r.count == 0) {
            rep.warnings.push_back("size " + std::to_string(r.size) + " has count 0; dropped from fit");
            continue;
        }
        xs.push_back(static_cast<double>(r.size));
        ys.push_back(static_cast<double>(r.count));
    }
    if (xs.size() >= 3) {
        auto f = fit_loglog(xs, ys);
        rep.fitted_slope = f.slope;
        rep.fitted_intercept = f.intercept;
    } else {
        rep.warnings.push_back("fewer than 3 usable rows; no fit");
    }
    return rep;
}

namespace detail {

inline std::string fixed9(double v) {
    if (std::isnan(v)) return "nan";
    std::ostringstream s;
    s << std::fixed << std::setprecision(9) << v;
    return s.str();
}

}  // namespace detail

/// CSV: `size,count[,aux...]`, then `# warning:` / `# error:` lines, then the
/// trailer `# slope=<s> intercept=<b> bound=<s0>`.
inline void write_report_csv(std::ostream& out, const ScanReport& rep) {
    out << "size,count";
    if (!rep.rows.empty())
        for (const auto& [name, v] : rep.rows.front().aux) out << ',' << name;
    out << '\n';
    for (const auto& r : rep.rows) {
        out << r.size << ',' << r.count;
        for (const auto& [name, v] : r.aux) out << ',' << v;
        out << '\n';
    }
    for (const auto& w : rep.warnings) out << "# warning: " << w << '\n';
    if (!rep.complete) out << "# error: " << rep.error << '\n';
    out << "# slope=" << detail::fixed9(rep.fitted_slope) << " intercept=" << detail::fixed9(rep.fitted_intercept)
        << " bound=" << detail::fixed9(rep.bound_slope) << '\n';
}

inline nlohmann::json report_to_json(const ScanReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        nlohmann::json aux = nlohmann::json::object();
        for (const auto& [name, v] : r.aux) aux[name] = v;
        rows.push_back({{"size", r.size}, {"count", r.count}, {"aux", aux}});
    }
    return {{"family", family_name(rep.family)},
            {"rows", rows},
            {"slope", detail::fixed9(rep.fitted_slope)},
            {"intercept", detail::fixed9(rep.fitted_intercept)},
            {"bound", detail::fixed9(rep.bound_slope)},
            {"warnings", rep.warnings},
            {"complete", rep.complete},
            {"error", rep.error}};
}

}  // namespace tpm
