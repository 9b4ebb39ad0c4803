#include "bohr/upper.hpp"

#include "bohr/rng.hpp"
#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace bohr {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Relative inflation applied to the returned upper bound so that the finitely
// many rounded grid evaluations (each within a few hundred ulp of the true
// value) cannot make `hi` undercut the genuine sup.
constexpr double kEvalSlack = 0x1p-40;

// A grid line is skipped only when its cheap bound falls below the running
// max by more than this relative margin, so rounding in the bound itself can
// never hide the true maximizer.
constexpr double kPruneMargin = 1e-11;

double to_double(const ExactInt& v) { return v.convert_to<double>(); }

// Natural log of a positive big integer, usable far beyond double range.
double log_exact(const ExactInt& v) {
    if (v <= 0) throw std::invalid_argument("log_exact: value must be positive");
    const unsigned bits = boost::multiprecision::msb(v);
    if (bits <= 900) return std::log(to_double(v));
    const unsigned shift = bits - 64;
    return std::log(to_double(v >> shift)) + static_cast<double>(shift) * 0.6931471805599453094172321214582;
}

long long snap_grid_count(double h) {
    const double raw = kTwoPi / h;
    const double nearest = std::round(raw);
    long long g;
    if (nearest >= 1.0 && std::abs(raw - nearest) < 1e-6) {
        g = std::llround(nearest);
    } else {
        g = static_cast<long long>(std::ceil(raw));
    }
    return std::max<long long>(g, 1);
}

} // namespace

SignedHomPoly random_signs(int n, int M, std::uint64_t seed) {
    if (n < 1 || M < 1) throw std::invalid_argument("random_signs: need n >= 1 and M >= 1");
    SignedHomPoly p;
    p.n = n;
    p.M = M;
    p.seed = seed;
    p.support = enumerate(n, M);
    p.signs.reserve(p.support.size());
    p.coeffs.reserve(p.support.size());
    SplitMix64 gen(seed);
    for (const MultiIndex& alpha : p.support) {
        const int s = gen.next_bit() ? 1 : -1;
        p.signs.push_back(s);
        p.coeffs.push_back(s * to_double(multinomial(alpha)));
    }
    return p;
}

SignedHomPoly make_signed_poly(int n, int M, const std::vector<int>& signs) {
    if (n < 1 || M < 1) throw std::invalid_argument("make_signed_poly: need n >= 1 and M >= 1");
    SignedHomPoly p;
    p.n = n;
    p.M = M;
    p.seed = 0;
    p.support = enumerate(n, M);
    if (signs.size() != p.support.size())
        throw std::invalid_argument("make_signed_poly: need one sign per degree-M index");
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1)
            throw std::invalid_argument("make_signed_poly: signs must be +1 or -1");
        p.signs.push_back(signs[i]);
        p.coeffs.push_back(signs[i] * to_double(multinomial(p.support[i])));
    }
    return p;
}

SupNormCert sup_norm_certified(const SignedHomPoly& p, double h) {
    const int n = p.n;
    const int M = p.M;
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("sup_norm_certified: grid spacing must be positive");
    if (0.5 * M * n * h >= 1.0)
        throw std::invalid_argument("sup_norm_certified: grid too coarse, need M*n*h/2 < 1");

    const long long G = snap_grid_count(h);
    const double h_eff = kTwoPi / static_cast<double>(G);
    const double denom = 1.0 - 0.5 * M * n * h_eff;
    if (denom <= 0.0)
        throw std::invalid_argument("sup_norm_certified: grid too coarse, need M*n*h/2 < 1");

    SupNormCert cert;
    cert.poly_seed = p.seed;
    cert.h = h_eff;
    cert.grid_points = G;
    cert.certified = true;

    if (n == 1) {
        // p(z) = c z^M; |p| is constant on the torus and the rotation
        // z -> e^{i phi} z sweeps the whole circle from the single point 1.
        const double a = std::abs(p.coeffs.front());
        cert.enclosure = Enclosure{a, a};
        return cert;
    }

    const double coeff_sum = to_double(integer_power(n, M));

    // Base angle tables: c1[g] = cos(g h_eff). Harmonic d reuses them via
    // index reduction, cos(d g h_eff) = c1[(d g) mod G].
    std::vector<double> c1(G), s1(G);
    for (long long g = 0; g < G; ++g) {
        c1[g] = std::cos(h_eff * static_cast<double>(g));
        s1[g] = std::sin(h_eff * static_cast<double>(g));
    }
    std::vector<std::vector<double>> cd(M + 1), sd(M + 1);
    for (int d = 1; d <= M; ++d) {
        cd[d].resize(G);
        sd[d].resize(G);
        for (long long g = 0; g < G; ++g) {
            const long long t = (static_cast<long long>(d) * g) % G;
            cd[d][g] = c1[t];
            sd[d][g] = s1[t];
        }
    }

    // Evaluate on the torus with the last angle rotated to zero, which loses
    // nothing for a homogeneous p. The first axis is scanned as a whole
    // circle per line via the harmonic expansion of |q|^2, so each line costs
    // O(M G) after an O(terms) setup. Real coefficients give the reflection
    // theta -> -theta the same modulus, so the first outer axis only needs
    // half its range.
    const int outer_axes = n - 2;              // axes 1 .. n-2
    const std::size_t terms = p.support.size();
    std::vector<int> deg0(terms);              // exponent on the scanned axis
    std::vector<std::vector<int>> outer_exp(terms, std::vector<int>(outer_axes));
    for (std::size_t t = 0; t < terms; ++t) {
        deg0[t] = p.support[t][0];
        for (int j = 0; j < outer_axes; ++j) outer_exp[t][j] = p.support[t][j + 1];
    }

    std::vector<double> br(M + 1), bi(M + 1);  // line coefficients b_d
    std::vector<double> val(G);
    std::vector<long long> gpos(std::max(outer_axes, 1), 0);
    double best_sq = 0.0;

    const long long half = G / 2;
    bool done = false;
    while (!done) {
        // b_d = sum over terms with first-axis exponent d of
        //       coeff * exp(i sum_j alpha_j theta_j) over the outer axes.
        std::fill(br.begin(), br.end(), 0.0);
        std::fill(bi.begin(), bi.end(), 0.0);
        for (std::size_t t = 0; t < terms; ++t) {
            long long idx = 0;
            for (int j = 0; j < outer_axes; ++j)
                idx += static_cast<long long>(outer_exp[t][j]) * gpos[j];
            idx %= G;
            const double c = p.coeffs[t];
            br[deg0[t]] += c * c1[idx];
            bi[deg0[t]] += c * s1[idx];
        }

        double gamma0 = 0.0;
        for (int d = 0; d <= M; ++d) gamma0 += br[d] * br[d] + bi[d] * bi[d];

        // Two nested upper bounds on max_theta |q|^2 along this line; the
        // line is scanned only when both fail to rule it out.
        bool scan = (M + 1) * gamma0 * (1.0 + kPruneMargin) > best_sq;
        if (scan) {
            double abs_sum = 0.0;
            for (int d = 0; d <= M; ++d) abs_sum += std::sqrt(br[d] * br[d] + bi[d] * bi[d]);
            scan = abs_sum * abs_sum * (1.0 + kPruneMargin) > best_sq;
        }

        if (scan) {
            // |q(theta)|^2 = gamma0 + 2 sum_d Re(Gamma_d e^{i d theta}) with
            // Gamma_d = sum_e conj(b_e) b_{e+d}.
            std::fill(val.begin(), val.end(), gamma0);
            for (int d = 1; d <= M; ++d) {
                double gr = 0.0, gi = 0.0;
                for (int e = 0; e + d <= M; ++e) {
                    gr += br[e] * br[e + d] + bi[e] * bi[e + d];
                    gi += br[e] * bi[e + d] - bi[e] * br[e + d];
                }
                const double a2 = 2.0 * gr, b2 = -2.0 * gi;
                const double* cp = cd[d].data();
                const double* sp = sd[d].data();
                double* vp = val.data();
                for (long long g = 0; g < G; ++g) vp[g] += a2 * cp[g] + b2 * sp[g];
            }
            for (long long g = 0; g < G; ++g) best_sq = std::max(best_sq, val[g]);
        }

        if (outer_axes == 0) break;
        int axis = outer_axes - 1;
        while (true) {
            ++gpos[axis];
            const long long limit = (axis == 0) ? half : G - 1;
            if (gpos[axis] <= limit) break;
            gpos[axis] = 0;
            if (axis == 0) { done = true; break; }
            --axis;
        }
    }

    const double lo = std::sqrt(best_sq);
    const double hi = std::min(coeff_sum, lo * (1.0 + kEvalSlack) / denom);
    cert.enclosure = Enclosure{lo, hi};
    return cert;
}

SupNormCert sup_norm_sampled(const SignedHomPoly& p, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("sup_norm_sampled: need samples >= 1");
    const int n = p.n;
    SplitMix64 gen(seed);
    const std::size_t terms = p.support.size();
    std::vector<double> theta(n);
    double best_sq = 0.0;
    for (int s = 0; s < samples; ++s) {
        for (int j = 0; j < n; ++j) theta[j] = kTwoPi * gen.next_unit();
        double re = 0.0, im = 0.0;
        for (std::size_t t = 0; t < terms; ++t) {
            double ang = 0.0;
            for (int j = 0; j < n; ++j) ang += p.support[t][j] * theta[j];
            re += p.coeffs[t] * std::cos(ang);
            im += p.coeffs[t] * std::sin(ang);
        }
        best_sq = std::max(best_sq, re * re + im * im);
    }
    SupNormCert cert;
    cert.poly_seed = p.seed;
    cert.h = 0.0;
    cert.grid_points = samples;
    cert.enclosure = Enclosure{std::sqrt(best_sq), to_double(integer_power(n, p.M))};
    cert.certified = false;
    return cert;
}

double kn_upper_from_poly(const SignedHomPoly& p, const SupNormCert& cert) {
    const double coeff_sum = to_double(integer_power(p.n, p.M));
    const double ratio = cert.enclosure.hi / coeff_sum;
    if (!(ratio > 0.0)) throw std::invalid_argument("kn_upper_from_poly: empty certificate");
    return std::pow(ratio, 1.0 / p.M);
}

SearchResult search_upper(int n, int M, int trials, std::uint64_t seed, double h) {
    if (n < 1 || M < 1) throw std::invalid_argument("search_upper: need n >= 1 and M >= 1");
    if (trials < 1) throw std::invalid_argument("search_upper: need trials >= 1");
    const bool certify = n <= kCertifiedMaxDim;
    const double floor_bound = naive_lower(n);

    SearchResult out;
    bool have = false;
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
        SignedHomPoly p = random_signs(n, M, trial_seed);
        SupNormCert cert;
        double bound;
        if (certify) {
            cert = sup_norm_certified(p, h);
            bound = kn_upper_from_poly(p, cert);
            if (bound < floor_bound * (1.0 - 1e-12))
                throw std::logic_error("search_upper: certificate fell below the proven lower bound");
        } else {
            cert = sup_norm_sampled(p, 512, derive_seed(trial_seed, 1));
            // Estimate only: uses the sampled max as a stand-in for the sup.
            const double coeff_sum = to_double(integer_power(n, M));
            bound = std::pow(cert.enclosure.lo / coeff_sum, 1.0 / M);
        }
        if (!have || bound < out.bound) {
            have = true;
            out.best = std::move(p);
            out.cert = cert;
            out.bound = bound;
            out.certified = certify;
        }
    }
    return out;
}

double theoretical_upper(int n) {
    if (n < 189) throw std::invalid_argument("theoretical_upper: defined for n >= 189");
    const double ln_n = std::log(static_cast<double>(n));
    const int M = static_cast<int>(std::floor(ln_n)) + 1;

    if (M < 6)
        throw std::logic_error("theoretical_upper: degree guard M >= 6 failed");
    if (!(std::pow(6.0, 1.0 / n) * kTwoPi < static_cast<double>(M) * M))
        throw std::logic_error("theoretical_upper: guard 6^(1/n) 2 pi < M^2 failed");
    if (!(std::log(static_cast<double>(M)) < static_cast<double>(M)))
        throw std::logic_error("theoretical_upper: guard log M < M failed");

    const double ln_mfact = log_exact(factorial(M));
    const double ln_value =
        (std::log(6.0) + 0.5 * (ln_mfact + std::log(static_cast<double>(M))) -
         0.5 * (M - 1) * ln_n) /
        M;
    return std::exp(ln_value);
}

double asymptotic_ratio(int n) {
    const double ln_n = std::log(static_cast<double>(n));
    return theoretical_upper(n) * std::sqrt(static_cast<double>(n) / ln_n);
}

SymmetricFormFloor symmetric_form_floor(int n, int M) {
    if (n < 1 || M < 1) throw std::invalid_argument("symmetric_form_floor: need n >= 1 and M >= 1");
    const ExactInt sum_sq = sum_multinomials_squared(n, M);
    SymmetricFormFloor out;
    out.l2 = std::sqrt(to_double(sum_sq));
    out.floor_value =
        to_double(integer_power(n, M)) / std::sqrt(to_double(binomial(n + M - 1, M)));
    return out;
}

std::optional<RefuteWitness> refute_uniform_constant(double C, int n_max, int M_max) {
    if (!(C > 0.0) || !std::isfinite(C))
        throw std::invalid_argument("refute_uniform_constant: need C > 0");
    if (n_max < 1 || M_max < 1)
        throw std::invalid_argument("refute_uniform_constant: need n_max >= 1 and M_max >= 1");

    const bool integral = (C == std::floor(C)) && C < 9.0e15;
    const long long C_int = integral ? static_cast<long long>(C) : 0;

    for (int M = 1; M <= M_max; ++M) {
        // Coefficients a_k = (M!/k!)^2 of the one-variable profile; the n-th
        // power of its generating polynomial, renormalized by (M!)^2 at each
        // step, keeps every coefficient an exact integer.
        const ExactInt mfact = factorial(M);
        const ExactInt norm = mfact * mfact;
        std::vector<ExactInt> a(M + 1);
        {
            ExactInt falling = mfact; // M!/k! built downward from k = 0
            for (int k = 0; k <= M; ++k) {
                a[k] = falling * falling;
                if (k < M) falling /= (k + 1);
            }
        }
        std::vector<ExactInt> q = a; // n = 1 profile
        for (int n = 1; n <= n_max; ++n) {
            if (n > 1) {
                std::vector<ExactInt> next(M + 1);
                for (int i = 0; i <= M; ++i) {
                    if (q[i] == 0) continue;
                    for (int j = 0; i + j <= M; ++j) next[i + j] += q[i] * a[j];
                }
                for (int k = 0; k <= M; ++k) {
                    ExactInt quot = next[k] / norm;
                    if (quot * norm != next[k])
                        throw std::logic_error("refute_uniform_constant: renormalization must be exact");
                    q[k] = std::move(quot);
                }
            }
            const ExactInt& sum_sq = q[M]; // exact sum of squared coefficients
            bool exceeds;
            if (integral) {
                const ExactInt rhs = boost::multiprecision::pow(ExactInt(C_int), 2 * M) *
                                     boost::multiprecision::pow(ExactInt(n), M + 1);
                exceeds = sum_sq > rhs;
            } else {
                const double lhs_log = 0.5 * log_exact(sum_sq);
                const double rhs_log =
                    M * std::log(C) + 0.5 * (M + 1) * std::log(static_cast<double>(n));
                exceeds = lhs_log > rhs_log;
            }
            if (exceeds) return RefuteWitness{n, M};
        }
    }
    return std::nullopt;
}

void write_witness(std::ostream& os, const SignedHomPoly& p) {
    os << p.n << ' ' << p.M << ' ' << p.seed << '\n';
    TruncatedSeries f(p.n, p.M);
    for (std::size_t t = 0; t < p.support.size(); ++t)
        f.set(p.support[t], Complex(p.coeffs[t], 0.0));
    write_series(os, f);
}

} // namespace bohr
