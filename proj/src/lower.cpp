#include "bohr/lower.hpp"

#include <cmath>
#include <stdexcept>

namespace bohr {

double naive_lower(int n) {
    if (n < 1) throw std::invalid_argument("naive_lower: dimension must be >= 1");
    return 1.0 / (3.0 * std::sqrt(static_cast<double>(n)));
}

double est_bound(double c0_mod, double s) {
    if (!(c0_mod >= 0.0 && c0_mod <= 1.0)) {
        throw std::invalid_argument("est_bound: requires 0 <= c0_mod <= 1");
    }
    if (!(s >= 0.0)) throw std::invalid_argument("est_bound: requires s >= 0");
    if (!(s < 1.0)) throw std::invalid_argument("est_bound: requires s < 1");
    const double q = std::sqrt(s);
    return c0_mod + (1.0 - c0_mod * c0_mod) * q / (1.0 - q);
}

std::pair<double, double> refined_equation_bounds(double r, int n) {
    if (n < 1) throw std::invalid_argument("refined_equation_bounds: dimension must be >= 1");
    if (!(r >= 0.0)) throw std::invalid_argument("refined_equation_bounds: requires r >= 0");
    const double nd = static_cast<double>(n);
    constexpr int kMaxTerms = 400;
    constexpr double kTermFloor = 0x1p-80;

    double t = r;          // k = 1 summand
    double sum = t;
    int terms = 1;
    t = r * r * std::sqrt(0.5 * nd * (nd + 1.0)); // k = 2 summand
    sum += t;
    ++terms;
    int k = 2;
    double ratio = r * std::sqrt((nd + k) / (k + 1.0));
    while (k < kMaxTerms && !(ratio < 0.5 && t <= kTermFloor)) {
        t *= ratio;
        ++k;
        sum += t;
        ++terms;
        ratio = r * std::sqrt((nd + k) / (k + 1.0));
    }
    // the ratio is non-increasing in k, so a geometric tail bound applies
    if (!(ratio < 1.0)) {
        throw std::runtime_error("refined_equation_bounds: tail ratio >= 1, cannot certify");
    }
    const double tail = t * ratio / (1.0 - ratio);
    const double slack = (terms + 2) * 0x1p-50;
    return {sum * (1.0 - slack) - 0.5, sum * (1.0 + slack) + tail - 0.5};
}

Enclosure refined_lower(int n, double tol) {
    if (n < 1) throw std::invalid_argument("refined_lower: dimension must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("refined_lower: tolerance must be positive");
    double lo = naive_lower(n); // F(lo) < 0: the proven bound lies left of the root
    double hi = (n == 1) ? 0.49 : 1.0 / std::sqrt(static_cast<double>(n)); // F(hi) > 0
    while (hi - lo > tol) {
        const double m = 0.5 * (lo + hi);
        if (!(m > lo && m < hi)) break; // interval below representable resolution
        const auto [f_lo, f_hi] = refined_equation_bounds(m, n);
        if (f_hi < 0.0) {
            lo = m;
        } else if (f_lo > 0.0) {
            hi = m;
        } else {
            // m is inside the rounding band around the root; certify a
            // width-tol interval directly
            const double a = m - 0.5 * tol;
            const double b = m + 0.5 * tol;
            const double fa_hi = refined_equation_bounds(a, n).second;
            const double fb_lo = refined_equation_bounds(b, n).first;
            if (fa_hi < 0.0 && fb_lo > 0.0) return {a, b};
            throw std::runtime_error("refined_lower: cannot certify a sign change at this tolerance");
        }
    }
    return {lo, hi};
}

std::optional<int> refined_lower_scaled_threshold(int limit) {
    if (limit < 2) throw std::invalid_argument("refined_lower_scaled_threshold: requires limit >= 2");
    for (int n = 2; n <= limit; ++n) {
        const Enclosure e = refined_lower(n);
        if (e.lo * std::sqrt(static_cast<double>(n)) > 0.5) return n;
    }
    return std::nullopt;
}

} // namespace bohr
