#pragma once

#include "bohr/series.hpp"

namespace bohr {

// 1-D series of the disc automorphism f_a(z) = (a - z)/(1 - a z):
//   c_0 = a, c_k = -(1 - a^2) a^(k-1) for k >= 1.
// Requires 0 <= a < 1 and cap >= 1. |f_a| = 1 on |z| = 1, so the family is
// admissible for every coefficient bound below; its term-modulus sums
// saturate them.
TruncatedSeries mobius_series(double a, int cap);

// The radius r at which the term-modulus sum of f_a reaches 1, i.e. the
// solution of a + (1-a^2) r/(1-ar) = 1: closed form 1/(1+2a).
// Requires 0 < a < 1 (at a = 0 the sum reaches 1 only at r = 1).
// Decreasing in a with infimum 1/3 as a -> 1: no radius beyond 1/3 works
// for the whole family.
double mobius_bohr_radius(double a);

// Root-of-unity averaging k^(-1) sum_j f(w^j z) over a primitive kth root
// of unity w, realized exactly on coefficients: keeps c_alpha when
// |alpha| == 0 (mod k), zeroes the rest. Requires k >= 1.
TruncatedSeries symmetrize(const TruncatedSeries& f, int k);

// Truncated series of (g - c)/(1 - conj(c) g) for |c| < 1. Writing
// u = g - c_0 and d = 1 - conj(c) c_0, the reciprocal expands as the finite
// sum (1/d) sum_m (conj(c) u / d)^m since u has no constant term, so all
// coefficients up to the cap are computed exactly. The contraction
// condition |c| * majorant(u, all-ones) < 1 is checked and its failure is
// reported as an error rather than silently accepted, since callers read
// the truncation as an approximation on the closed unit polydisc.
TruncatedSeries mobius_apply(const TruncatedSeries& g, Complex c);

// mobius_apply at c = c_0(g): moves the constant term to 0. The degree-k
// coefficients become c_alpha/(1-|c_0|^2) whenever g has no terms of
// homogeneity strictly between 0 and k.
TruncatedSeries mobius_normalize(const TruncatedSeries& g);

// Coefficient bound for a function of modulus < 1 on the unit polydisc
// (caller-asserted): the degree-k coefficient l2 norm is at most 1-|c_0|^2.
// Report-only; violations are for tests to flag, not runtime errors.
struct WienerReport {
    double lhs;  // homogeneous_l2(f, k)
    double rhs;  // 1 - |c_0|^2
    bool holds;  // lhs <= rhs + tol
};
WienerReport wiener_bound_check(const TruncatedSeries& f, int k, double tol = 1e-9);

} // namespace bohr
