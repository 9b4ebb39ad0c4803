#include "CLI11.hpp"

#include "bohr/lower.hpp"
#include "bohr/series.hpp"
#include "bohr/table.hpp"
#include "bohr/upper.hpp"
#include "bohr/verify.hpp"
#include "bohr/wiener.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Raised for unreadable or unwritable files so main can map them to the
// I/O exit code ahead of the generic runtime_error handler.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct BoundsArgs {
    int n_min = 1;
    int n_max = 1;
    double tol = 1e-12;
    std::optional<int> search_m;
    int trials = 64;
    std::uint64_t seed = 0;
    int grid_divisor = 64;
    std::string out;
    bool gnuplot = false;
};

int cmd_bounds(const BoundsArgs& args) {
    bohr::BoundsOptions opt;
    opt.tol = args.tol;
    opt.search_m = args.search_m;
    opt.trials = args.trials;
    opt.seed = args.seed;
    opt.grid_divisor = args.grid_divisor;
    const std::vector<bohr::BoundsRow> rows = bohr::compute_bounds(args.n_min, args.n_max, opt);

    std::ofstream out(args.out);
    if (!out) throw IoError("cannot open '" + args.out + "' for writing");
    bohr::write_csv(out, rows);
    out.flush();
    if (!out) throw IoError("failed writing '" + args.out + "'");

    if (args.gnuplot) {
        const std::string gp_path = args.out + ".gp";
        std::ofstream gp(gp_path);
        if (!gp) throw IoError("cannot open '" + gp_path + "' for writing");
        gp << bohr::gnuplot_script(args.out);
        gp.flush();
        if (!gp) throw IoError("failed writing '" + gp_path + "'");
    }

    std::cout << "rows " << rows.size() << "\n";
    std::cout << "csv " << args.out << "\n";
    if (args.gnuplot) std::cout << "gnuplot " << args.out << ".gp\n";
    return 0;
}

int cmd_verify(const std::string& suite) {
    const std::vector<bohr::CheckResult> results = bohr::run_suite(suite);
    return bohr::print_report(std::cout, results) ? 0 : 1;
}

struct SearchArgs {
    int n = 2;
    int degree = 2;
    int trials = 64;
    std::uint64_t seed = 0;
    int grid_divisor = 64;
    std::string witness;
};

int cmd_search_upper(const SearchArgs& args) {
    if (args.grid_divisor < 1)
        throw std::invalid_argument("search-upper: need grid divisor >= 1");
    const double h = kTwoPi / (static_cast<double>(args.grid_divisor) * args.degree * args.n);
    const bohr::SearchResult res =
        bohr::search_upper(args.n, args.degree, args.trials, args.seed, h);

    std::cout << "n " << args.n << "\n"
              << "degree " << args.degree << "\n"
              << "trials " << args.trials << "\n"
              << "seed " << args.seed << "\n"
              << "certified " << (res.certified ? 1 : 0) << "\n"
              << "grid_points " << res.cert.grid_points << "\n"
              << "sup_lo " << fmt(res.cert.enclosure.lo) << "\n"
              << "sup_hi " << fmt(res.cert.enclosure.hi) << "\n"
              << "bound " << fmt(res.bound) << "\n";

    if (!args.witness.empty()) {
        std::ofstream out(args.witness);
        if (!out) throw IoError("cannot open '" + args.witness + "' for writing");
        bohr::write_witness(out, res.best);
        out.flush();
        if (!out) throw IoError("failed writing '" + args.witness + "'");
        std::cout << "witness " << args.witness << "\n";
    }
    return 0;
}

int cmd_extremal(double a, int cap) {
    if (cap < 1) throw std::invalid_argument("extremal: need cap >= 1");
    const double radius = bohr::mobius_bohr_radius(a);
    const bohr::TruncatedSeries f = bohr::mobius_series(a, cap);
    const double at_radius = bohr::majorant(f, {radius});
    std::cout << "a " << fmt(a) << "\n"
              << "bohr_radius " << fmt(radius) << "\n"
              << "majorant_at_radius " << fmt(at_radius) << "\n"
              << "residual " << fmt(std::abs(at_radius - 1.0)) << "\n";
    return 0;
}

int cmd_series_info(const std::string& path, double radius) {
    if (!(radius >= 0.0)) throw std::invalid_argument("series-info: need radius >= 0");
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    bohr::TruncatedSeries f = [&] {
        try {
            return bohr::read_series(in);
        } catch (const std::runtime_error& e) {
            throw IoError("unreadable series in '" + path + "': " + e.what());
        }
    }();

    double max_coeff = 0.0;
    for (const auto& [alpha, c] : f.coeffs()) max_coeff = std::max(max_coeff, std::abs(c));
    std::cout << "dim " << f.dim() << "\n"
              << "cap " << f.cap() << "\n"
              << "terms " << f.coeffs().size() << "\n"
              << "constant_modulus " << fmt(std::abs(f.constant_term())) << "\n"
              << "max_coefficient " << fmt(max_coeff) << "\n"
              << "majorant_radius " << fmt(radius) << "\n"
              << "majorant " << fmt(bohr::majorant(f, std::vector<double>(f.dim(), radius)))
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-sided bounds for the polydisc Bohr radius"};
    app.require_subcommand(1);

    BoundsArgs bounds;
    CLI::App* sub_bounds = app.add_subcommand(
        "bounds", "Tabulate lower and upper bounds over a range of dimensions");
    sub_bounds->add_option("--n-min", bounds.n_min, "smallest dimension")->required();
    sub_bounds->add_option("--n-max", bounds.n_max, "largest dimension")->required();
    sub_bounds->add_option("--tol", bounds.tol, "enclosure width target");
    sub_bounds->add_option("--search-m", bounds.search_m,
                           "degree for the random sign search column");
    sub_bounds->add_option("--trials", bounds.trials, "sign draws per dimension");
    sub_bounds->add_option("--seed", bounds.seed, "search seed");
    sub_bounds->add_option("--grid-divisor", bounds.grid_divisor,
                           "grid spacing 2 pi / (divisor * degree * n)");
    sub_bounds->add_option("--out", bounds.out, "output CSV path")->required();
    sub_bounds->add_flag("--gnuplot", bounds.gnuplot, "also write a gnuplot script");

    std::string suite = "all";
    CLI::App* sub_verify =
        app.add_subcommand("verify", "Run the self-checking suites and report margins");
    sub_verify->add_option("suite", suite,
                           "combinatorics, wiener, lower, upper, or all (default)");

    SearchArgs search;
    CLI::App* sub_search = app.add_subcommand(
        "search-upper", "Randomized search for a certified upper bound in one dimension count");
    sub_search->add_option("--n", search.n, "dimension")->required();
    sub_search->add_option("--degree", search.degree, "homogeneous degree")->required();
    sub_search->add_option("--trials", search.trials, "sign draws");
    sub_search->add_option("--seed", search.seed, "search seed");
    sub_search->add_option("--grid-divisor", search.grid_divisor,
                           "grid spacing 2 pi / (divisor * degree * n)");
    sub_search->add_option("--witness", search.witness, "write the best draw to this file");

    double extremal_a = 0.0;
    int extremal_cap = 60;
    CLI::App* sub_extremal = app.add_subcommand(
        "extremal", "One-dimensional disc automorphism family and its exact radius");
    sub_extremal->add_option("--a", extremal_a, "parameter in (0,1)")->required();
    sub_extremal->add_option("--cap", extremal_cap, "series truncation order");

    std::string series_path;
    double series_radius = 1.0;
    CLI::App* sub_info =
        app.add_subcommand("series-info", "Inspect a series file and its majorant");
    sub_info->add_option("--series-file", series_path, "series text file")->required();
    sub_info->add_option("--radius", series_radius, "majorant evaluation radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(sub_bounds)) return cmd_bounds(bounds);
        if (app.got_subcommand(sub_verify)) return cmd_verify(suite);
        if (app.got_subcommand(sub_search)) return cmd_search_upper(search);
        if (app.got_subcommand(sub_extremal)) return cmd_extremal(extremal_a, extremal_cap);
        if (app.got_subcommand(sub_info)) return cmd_series_info(series_path, series_radius);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
