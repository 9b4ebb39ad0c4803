#include "bohr/table.hpp"

#include "bohr/upper.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bohr {

namespace {

constexpr char kHeader[] =
    "n,lower_naive,lower_refined_lo,lower_refined_hi,upper_search,upper_theory";

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& cell, int line_no) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(cell, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("csv line " + std::to_string(line_no) +
                                 ": bad numeric cell '" + cell + "'");
    }
    if (pos != cell.size())
        throw std::runtime_error("csv line " + std::to_string(line_no) +
                                 ": trailing junk in cell '" + cell + "'");
    return v;
}

} // namespace

void validate_row(const BoundsRow& row) {
    const Enclosure& e = row.lower_refined;
    if (!(e.lo <= e.hi))
        throw std::logic_error("bounds row: refined enclosure is not ordered");
    if (row.n >= 2) {
        if (!(row.lower_naive < e.lo))
            throw std::logic_error("bounds row: refined bound must exceed 1/(3 sqrt n)");
    } else {
        // In dimension one both bounds equal 1/3; the enclosure must cover it.
        if (!(e.lo <= row.lower_naive && row.lower_naive <= e.hi))
            throw std::logic_error("bounds row: dimension-one enclosure must contain 1/3");
    }
    if (row.upper_search && !(e.hi < *row.upper_search))
        throw std::logic_error("bounds row: search upper bound at or below the lower bound");
    if (row.upper_theory && !(e.hi < *row.upper_theory))
        throw std::logic_error("bounds row: explicit upper bound at or below the lower bound");
}

std::vector<BoundsRow> compute_bounds(int n_min, int n_max, const BoundsOptions& opt) {
    if (n_min < 1 || n_max < n_min)
        throw std::invalid_argument("compute_bounds: need 1 <= n_min <= n_max");
    if (opt.search_m && *opt.search_m < 1)
        throw std::invalid_argument("compute_bounds: search degree must be >= 1");
    if (opt.trials < 1) throw std::invalid_argument("compute_bounds: need trials >= 1");
    if (opt.grid_divisor < 1)
        throw std::invalid_argument("compute_bounds: need grid divisor >= 1");

    std::vector<BoundsRow> rows;
    rows.reserve(n_max - n_min + 1);
    for (int n = n_min; n <= n_max; ++n) {
        BoundsRow row;
        row.n = n;
        row.lower_naive = naive_lower(n);
        row.lower_refined = refined_lower(n, opt.tol);
        if (opt.search_m && n <= kCertifiedMaxDim) {
            const int M = *opt.search_m;
            const double h = kTwoPi / (static_cast<double>(opt.grid_divisor) * M * n);
            row.upper_search = search_upper(n, M, opt.trials, opt.seed, h).bound;
        }
        if (n >= 189) row.upper_theory = theoretical_upper(n);
        validate_row(row);
        rows.push_back(row);
    }
    return rows;
}

void write_csv(std::ostream& os, const std::vector<BoundsRow>& rows) {
    os << kHeader << '\n';
    for (const BoundsRow& row : rows) {
        os << row.n << ',' << format_double(row.lower_naive) << ','
           << format_double(row.lower_refined.lo) << ','
           << format_double(row.lower_refined.hi) << ',';
        if (row.upper_search) os << format_double(*row.upper_search);
        os << ',';
        if (row.upper_theory) os << format_double(*row.upper_theory);
        os << '\n';
    }
}

std::vector<BoundsRow> parse_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader) throw std::runtime_error("csv: unexpected header '" + line + "'");

    std::vector<BoundsRow> rows;
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                cells.push_back(line.substr(start));
                break;
            }
            cells.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        if (cells.size() != 6)
            throw std::runtime_error("csv line " + std::to_string(line_no) +
                                     ": expected 6 cells, got " + std::to_string(cells.size()));

        BoundsRow row;
        try {
            std::size_t pos = 0;
            row.n = std::stoi(cells[0], &pos);
            if (pos != cells[0].size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw std::runtime_error("csv line " + std::to_string(line_no) +
                                     ": bad dimension cell '" + cells[0] + "'");
        }
        row.lower_naive = parse_double(cells[1], line_no);
        row.lower_refined.lo = parse_double(cells[2], line_no);
        row.lower_refined.hi = parse_double(cells[3], line_no);
        if (!cells[4].empty()) row.upper_search = parse_double(cells[4], line_no);
        if (!cells[5].empty()) row.upper_theory = parse_double(cells[5], line_no);
        rows.push_back(row);
    }
    return rows;
}

std::string gnuplot_script(const std::string& csv_path) {
    std::ostringstream os;
    os << "set datafile separator ','\n"
       << "set datafile missing ''\n"
       << "set xlabel 'n'\n"
       << "set ylabel 'bound'\n"
       << "set key top right\n"
       << "plot '" << csv_path << "' every ::1 using 1:2 with lines title 'lower naive', \\\n"
       << "     '" << csv_path << "' every ::1 using 1:3 with lines title 'lower refined', \\\n"
       << "     '" << csv_path << "' every ::1 using 1:5 with points title 'upper search', \\\n"
       << "     '" << csv_path << "' every ::1 using 1:6 with points title 'upper theory'\n";
    return os.str();
}

} // namespace bohr
