#pragma once

#include "bohr/combinatorics.hpp"
#include "bohr/lower.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace bohr {

// Homogeneous degree-M polynomial sum of eps_alpha (M!/alpha!) z^alpha with
// eps_alpha in {+1, -1}; its coefficient moduli sum to n^M exactly.
struct SignedHomPoly {
    int n;
    int M;
    std::uint64_t seed;               // seed that produced the signs (0 for handmade)
    std::vector<MultiIndex> support;  // enumerate(n, M) order
    std::vector<int> signs;           // +-1 per support entry
    std::vector<double> coeffs;       // signs[i] * multinomial(support[i])
};

// Signs drawn from the given seed: one independent fair bit per index, in
// enumeration order. Same (n, M, seed) always gives identical signs.
// Requires n >= 1, M >= 1.
SignedHomPoly random_signs(int n, int M, std::uint64_t seed);

// A poly with explicitly chosen signs (tests and handmade witnesses).
SignedHomPoly make_signed_poly(int n, int M, const std::vector<int>& signs);

// Certificate for the sup of |p| over the unit polydisc, which by the
// maximum principle equals the sup over the unit torus.
struct SupNormCert {
    std::uint64_t poly_seed; // identifies the poly the certificate belongs to
    double h;                // effective grid spacing (0 when sampled)
    long long grid_points;   // per-axis grid count (sample count when sampled)
    Enclosure enclosure;
    bool certified;          // full-grid certificate vs sampled lower estimate
};

// Full-grid certificate on the uniform torus grid theta in (h Z)^n:
//   lo = max of |p| over the grid (true lower bound on the sup);
//   hi = min( n^M, lo * (1+2^-40) / (1 - M n h/2) )  (coefficient-sum bound
// vs grid max corrected by the per-coordinate derivative bound
// sup|dp/dtheta_j| <= M sup|p|; the 2^-40 factor absorbs evaluation
// rounding). Rejects h with M*n*h/2 >= 1. The grid max is exact: the
// homogeneous rotation p(e^{i phi} z) = e^{iM phi} p(z) collapses one axis,
// real coefficients give |p(-theta)| = |p(theta)|, and a grid line is
// skipped only when its coefficient-sum bound cannot beat the running max.
SupNormCert sup_norm_certified(const SignedHomPoly& p, double h);

// Lower estimate from seeded pseudo-random torus samples; hi falls back to
// the coefficient-sum bound n^M. Never a certificate (certified = false).
SupNormCert sup_norm_sampled(const SignedHomPoly& p, int samples, std::uint64_t seed);

// (cert.hi / n^M)^(1/M): an upper bound on the polydisc Bohr radius, since
// any r below it would force r^M * n^M = r^M sum|c_alpha| <= sup|p| = cert
// scale. Valid whenever cert.hi truly dominates the sup.
double kn_upper_from_poly(const SignedHomPoly& p, const SupNormCert& cert);

// Dimensions up to which search_upper runs the full-grid certificate; the
// grid has (2 pi/h)^n points, so larger n falls back to sampled estimates.
inline constexpr int kCertifiedMaxDim = 4;

struct SearchResult {
    SignedHomPoly best;
    SupNormCert cert;
    double bound;    // certified upper bound, or lo-based estimate when not
    bool certified;
};

// Minimum of kn_upper_from_poly over `trials` sign draws with per-trial
// seeds derived from `seed`. Certified for n <= kCertifiedMaxDim (each
// certified bound is checked against the proven lower bound 1/(3 sqrt n));
// beyond that the returned value is a sampled, uncertified estimate.
// Requires trials >= 1.
SearchResult search_upper(int n, int M, int trials, std::uint64_t seed, double h);

// The explicit upper-bound chain at degree M = smallest integer above
// log n:  (6 (M! M)^(1/2) n^((1+M)/2) / n^M)^(1/M).  Verifies the guard
// conditions 6^(1/n) 2 pi < M^2, log M < M, M >= 6 and fails loudly when
// one is violated. Requires n >= 189 (below that the value is vacuous).
// Always at most 2 sqrt(log n)/sqrt(n) on the tested range.
double theoretical_upper(int n);

// theoretical_upper(n) * sqrt(n / log n); decreasing in n on the desk
// range, approaching the asymptotic constant from above.
double asymptotic_ratio(int n);

// l2 = sqrt of the exact sum of (M!/alpha!)^2 over |alpha| = M, and the
// floor n^M / sqrt(binom(M+n-1, M)) it provably dominates (Cauchy-Schwarz
// against the n^M coefficient sum). Requires n >= 1, M >= 1.
struct SymmetricFormFloor {
    double l2;
    double floor_value;
};
SymmetricFormFloor symmetric_form_floor(int n, int M);

// First (n, M) in M-major, then n order with l2 > C^M n^((M+1)/2) on the
// grid n <= n_max, M <= M_max, or nullopt when the bounded search finds
// none (exhaustion, not impossibility). An integral C is compared in exact
// integer arithmetic: S > C^(2M) n^(M+1). Requires C > 0.
struct RefuteWitness {
    int n;
    int M;
};
std::optional<RefuteWitness> refute_uniform_constant(double C, int n_max, int M_max);

// Witness serialization: header line "n M seed", then the series text
// format, one term per line.
void write_witness(std::ostream& os, const SignedHomPoly& p);

} // namespace bohr
