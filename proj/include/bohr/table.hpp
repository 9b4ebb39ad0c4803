#pragma once

#include "bohr/lower.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bohr {

// One row of the bounds table for a fixed dimension.
struct BoundsRow {
    int n = 0;
    double lower_naive = 0.0;
    Enclosure lower_refined{0.0, 0.0};
    std::optional<double> upper_search; // certified random-poly search
    std::optional<double> upper_theory; // explicit chain, defined for n >= 189
};

struct BoundsOptions {
    double tol = 1e-12;
    std::optional<int> search_m; // degree for the sign search; absent = skip
    int trials = 64;
    std::uint64_t seed = 0;
    int grid_divisor = 64;       // grid spacing 2 pi / (divisor * M * n)
};

// Sanity of one row: the refined enclosure must be ordered, sit strictly
// above the closed-form lower bound (they coincide only in dimension one,
// where equality up to the enclosure width is allowed), and stay strictly
// below every present upper bound. Throws std::logic_error on violation.
void validate_row(const BoundsRow& row);

// Rows for n_min..n_max inclusive. The sign search column is filled only
// when a degree is requested and the dimension admits a certified grid
// (n <= kCertifiedMaxDim); the explicit chain column only from n = 189 on.
// Every produced row passes validate_row.
std::vector<BoundsRow> compute_bounds(int n_min, int n_max, const BoundsOptions& opt);

// CSV with header n,lower_naive,lower_refined_lo,lower_refined_hi,
// upper_search,upper_theory; 17 significant digits, absent cells empty.
void write_csv(std::ostream& os, const std::vector<BoundsRow>& rows);

// Inverse of write_csv (format errors throw std::runtime_error).
std::vector<BoundsRow> parse_csv(std::istream& is);

// Gnuplot commands plotting the numeric columns of a CSV produced by
// write_csv, tolerant of its empty cells.
std::string gnuplot_script(const std::string& csv_path);

} // namespace bohr
