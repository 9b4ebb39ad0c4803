#pragma once

#include <optional>
#include <utility>

namespace bohr {

// A closed interval certified to contain the true value of the quantity the
// producing operation names.
struct Enclosure {
    double lo;
    double hi;
    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
};

// The proven dimension-n lower bound 1/(3 sqrt n) on the polydisc Bohr
// radius. Requires n >= 1.
double naive_lower(int n);

// Closed form of the term-modulus estimate at |c_0| = c0_mod when the
// squared coordinate moduli sum to s:
//   c0_mod + (1 - c0_mod^2) * sqrt(s)/(1 - sqrt(s)).
// At s = 1/9 this is c0_mod + (1 - c0_mod^2)/2, which never exceeds 1.
// Requires 0 <= c0_mod <= 1 and 0 <= s < 1.
double est_bound(double c0_mod, double s);

// Certified under/over estimates of
//   F(r) = r + sum_{k>=2} r^k binom(n+k-1,k)^(1/2) - 1/2,
// the root function of the refined lower bound. The finite sum runs the
// term recurrence t_{k+1} = t_k * r * sqrt((n+k)/(k+1)) from
// t_2 = r^2 sqrt(n(n+1)/2) until the ratio falls below 1/2 and the term
// below 2^-80 (capped at k = 400); the remainder is bounded by the
// geometric tail of the last ratio, which must be < 1 (throws otherwise).
// A multiplicative slack of (terms+2)*2^-50 absorbs rounding.
std::pair<double, double> refined_equation_bounds(double r, int n);

// Enclosure of width <= tol around the unique positive root r* of F.
// Initial bracket: lo = 1/(3 sqrt n) where F < 0 by the proven lower
// bound, hi = 1/sqrt(n) for n >= 2 (0.49 for n = 1) where F > 1/2 - 1/2.
// Bisection moves an endpoint only on a certified sign; a midpoint inside
// the rounding band triggers a certified probe pair at m -+ tol/2.
// r* exceeds 1/(3 sqrt n) strictly for n > 1.
Enclosure refined_lower(int n, double tol = 1e-12);

// Smallest n <= limit with refined_lower(n).lo * sqrt(n) > 1/2, or nullopt
// when no such n exists up to limit. Requires limit >= 2.
std::optional<int> refined_lower_scaled_threshold(int limit);

} // namespace bohr
