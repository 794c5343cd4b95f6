// tpminors-cli: batch front end for the tpminors library.
//
// Matrices use the text format "rows cols" followed by one line per row;
// point/line configurations use JSON. Input comes from --in (default stdin),
// output goes to --out (default stdout).
//
// Exit codes: 0 success, 1 precondition or verification failure, 2 I/O or
// format error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tpminors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitFormat = 2;

struct Globals {
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::string in = "-";
    std::string out = "-";
    std::string format = "csv";
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw tpm::FormatError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string slurp(const std::string& path) {
    std::ostringstream s;
    if (path == "-") {
        s << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw tpm::FormatError("cannot open input file " + path);
        s << f.rdbuf();
    }
    return s.str();
}

tpm::RatMatrix load_matrix(const Globals& g) { return tpm::parse_matrix(slurp(g.in)); }

tpm::IncidenceConfig load_config(const Globals& g) {
    std::istringstream s(slurp(g.in));
    return tpm::read_config(s);
}

std::vector<tpm::Rational> parse_list(const std::vector<std::string>& items) {
    std::vector<tpm::Rational> v;
    for (const auto& s : items) v.push_back(tpm::Rational::parse(s));
    return v;
}

tpm::MinorScope parse_scope(const std::string& s) {
    return s == "columns" ? tpm::MinorScope::columns_only : tpm::MinorScope::all_pairs;
}

void emit_scalar(const Globals& g, const std::string& key, const nlohmann::json& value, const std::string& text) {
    Output out(g.out);
    if (g.format == "json")
        out.stream() << nlohmann::json{{key, value}}.dump() << '\n';
    else
        out.stream() << text << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact total-positivity, minor census and incidence tools"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--in", g.in, "input file (- for stdin)");
    app.add_option("--out", g.out, "output file (- for stdout)");
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"csv", "json"}));

    // construct
    auto* construct = app.add_subcommand("construct", "build a matrix or configuration");
    construct->require_subcommand(1);
    construct->fallthrough();
    std::size_t grid_n = 0;
    auto* c_grid = construct->add_subcommand("grid", "n x n grid matrix");
    c_grid->add_option("--n", grid_n)->required();

    std::size_t ps_n = 0, ps_k = 2;
    std::vector<std::string> ps_a, ps_b;
    auto* c_ps = construct->add_subcommand("power-sum", "(b_i + a_j)^(k-1); default a = 1..n, b = n..1");
    c_ps->add_option("--n", ps_n);
    c_ps->add_option("--a", ps_a)->delimiter(',');
    c_ps->add_option("--b", ps_b)->delimiter(',');
    c_ps->add_option("--k", ps_k)->capture_default_str();

    std::size_t el_N = 0;
    bool el_canonical = false;
    auto* c_el = construct->add_subcommand("elekes", "grid point set with its rich lines (JSON)");
    c_el->add_option("--N", el_N)->required();
    c_el->add_flag("--canonical", el_canonical, "apply the canonicalizing transform (uses --seed)");

    std::size_t tp_N = 0;
    auto* c_tp = construct->add_subcommand("tp2xn", "2 x 3N^3 TP matrix with many unit minors");
    c_tp->add_option("--N", tp_N)->required();

    // verify
    std::optional<std::size_t> vf_max;
    bool vf_contiguous = false;
    auto* verify = app.add_subcommand("verify", "check total positivity of a matrix");
    verify->add_option("--max-order", vf_max);
    verify->add_flag("--contiguous", vf_contiguous, "contiguous-minor test only");

    // census / count-equal
    std::size_t cs_order = 2;
    std::string cs_scope = "all";
    auto* census = app.add_subcommand("census", "multiplicity of every minor value");
    census->add_option("--order", cs_order)->capture_default_str();
    census->add_option("--scope", cs_scope)->check(CLI::IsMember({"all", "columns"}))->capture_default_str();

    std::string ce_value = "1";
    auto* count_eq = app.add_subcommand("count-equal", "number of minors equal to a value");
    count_eq->add_option("--order", cs_order)->capture_default_str();
    count_eq->add_option("--value", ce_value)->capture_default_str();
    count_eq->add_option("--scope", cs_scope)->check(CLI::IsMember({"all", "columns"}))->capture_default_str();

    // rects
    std::string rc_area = "1";
    std::string rc_mode = "diagonal";
    auto* rects = app.add_subcommand("rects", "axis-parallel rectangles of a given area spanned by point pairs");
    rects->add_option("--area", rc_area)->capture_default_str();
    rects->add_option("--mode", rc_mode)->check(CLI::IsMember({"diagonal", "both"}))->capture_default_str();

    // mu
    std::vector<std::string> mu_a, mu_b;
    bool mu_nonzero_only = false;
    auto* mu = app.add_subcommand("mu", "max multiplicity in (A-A)(B-B)");
    mu->add_option("--a", mu_a)->delimiter(',')->required();
    mu->add_option("--b", mu_b)->delimiter(',');
    mu->add_flag("--nonzero", mu_nonzero_only, "ignore the value 0");

    // scan
    std::string sc_family;
    std::vector<std::size_t> sc_sizes;
    std::size_t sc_order = 2;
    std::string sc_instances;
    auto* scan = app.add_subcommand("scan", "count across sizes and fit a log-log slope");
    scan->add_option("--family", sc_family)
        ->required()
        ->check(CLI::IsMember({"elekes-2xn", "grid", "power-sum", "random-points"}));
    scan->add_option("--sizes", sc_sizes)->delimiter(',')->required();
    scan->add_option("--order", sc_order)->capture_default_str();
    scan->add_option("--instances", sc_instances, "directory to persist each instance");

    // check-st
    std::string st_constant = "5/2";
    auto* check_st = app.add_subcommand("check-st", "incidence bound sanity check on a configuration");
    check_st->add_option("--constant", st_constant)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitFormat;
    }

    try {
        tpm::CensusOptions opt{g.threads, false};

        if (construct->parsed()) {
            Output out(g.out);
            if (c_grid->parsed()) {
                tpm::write_matrix(out.stream(), tpm::grid_matrix(grid_n));
            } else if (c_ps->parsed()) {
                std::vector<tpm::Rational> a = parse_list(ps_a), b = parse_list(ps_b);
                if (a.empty() && b.empty()) {
                    for (std::size_t i = 1; i <= ps_n; ++i) {
                        a.emplace_back(static_cast<long>(i));
                        b.emplace_back(static_cast<long>(ps_n + 1 - i));
                    }
                }
                tpm::write_matrix(out.stream(), tpm::power_sum_matrix(a, b, ps_k));
            } else if (c_el->parsed()) {
                auto cfg = tpm::elekes_config(el_N);
                if (el_canonical) cfg = tpm::canonicalize_config(cfg, g.seed);
                out.stream() << tpm::to_json(cfg).dump() << '\n';
            } else if (c_tp->parsed()) {
                auto cfg = tpm::canonicalize_config(tpm::elekes_config(tp_N), g.seed);
                tpm::write_matrix(out.stream(), tpm::assemble_tp_2xn(cfg));
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            auto m = load_matrix(g);
            auto v = vf_contiguous ? tpm::verify_tp_contiguous(m) : tpm::verify_tp(m, vf_max);
            emit_scalar(g, "verdict", v.describe(), v.describe());
            return v.ok ? kExitOk : kExitFailure;
        }

        if (census->parsed()) {
            auto c = tpm::minor_census(load_matrix(g), cs_order, parse_scope(cs_scope), opt);
            Output out(g.out);
            if (g.format == "json")
                out.stream() << tpm::census_to_json(c).dump() << '\n';
            else
                tpm::write_census_csv(out.stream(), c);
            return kExitOk;
        }

        if (count_eq->parsed()) {
            auto n = tpm::count_minors_equal(load_matrix(g), cs_order, tpm::Rational::parse(ce_value),
                                             parse_scope(cs_scope), opt);
            emit_scalar(g, "count", n, std::to_string(n));
            return kExitOk;
        }

        if (rects->parsed()) {
            auto cfg = load_config(g);
            auto mode = rc_mode == "both" ? tpm::RectangleMode::both_diagonals : tpm::RectangleMode::diagonal;
            auto n = tpm::unit_rectangles(cfg.points, tpm::Rational::parse(rc_area), mode, g.threads);
            emit_scalar(g, "count", n, std::to_string(n));
            return kExitOk;
        }

        if (mu->parsed()) {
            auto a = parse_list(mu_a);
            auto b = mu_b.empty() ? a : parse_list(mu_b);
            auto s = tpm::difference_product(a, b);
            auto n = mu_nonzero_only ? tpm::mu_nonzero(s) : tpm::mu(s);
            emit_scalar(g, "mu", n, std::to_string(n));
            return kExitOk;
        }

        if (scan->parsed()) {
            tpm::RunConfig rc;
            rc.family = tpm::parse_family(sc_family);
            rc.sizes = sc_sizes;
            rc.seed = g.seed;
            rc.order = sc_order;
            rc.threads = g.threads;
            if (!sc_instances.empty()) rc.instance_dir = sc_instances;
            auto rep = tpm::scan_exponent(rc);
            Output out(g.out);
            if (g.format == "json")
                out.stream() << tpm::report_to_json(rep).dump(2) << '\n';
            else
                tpm::write_report_csv(out.stream(), rep);
            if (!rep.complete) std::cerr << "error: " << rep.error << '\n';
            return rep.complete ? kExitOk : kExitFailure;
        }

        if (check_st->parsed()) {
            auto cfg = load_config(g);
            auto inc = tpm::point_line_incidences(cfg);
            bool ok = tpm::st_bound_check(cfg.points.size(), cfg.lines.size(), inc, tpm::Rational::parse(st_constant));
            std::string text = "m=" + std::to_string(cfg.points.size()) + " n=" + std::to_string(cfg.lines.size()) +
                               " incidences=" + std::to_string(inc) + (ok ? " ok" : " violated");
            Output out(g.out);
            if (g.format == "json")
                out.stream() << nlohmann::json{{"m", cfg.points.size()},
                                               {"n", cfg.lines.size()},
                                               {"incidences", inc},
                                               {"ok", ok}}
                                    .dump()
                             << '\n';
            else
                out.stream() << text << '\n';
            return ok ? kExitOk : kExitFailure;
        }
    } catch (const tpm::FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const tpm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
