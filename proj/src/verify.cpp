#include "bohr/verify.hpp"

#include "bohr/combinatorics.hpp"
#include "bohr/lower.hpp"
#include "bohr/series.hpp"
#include "bohr/upper.hpp"
#include "bohr/wiener.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace bohr {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void add(std::vector<CheckResult>& out, const std::string& suite, const std::string& name,
         const std::string& anchor, double margin) {
    CheckResult r;
    r.suite = suite;
    r.name = name;
    r.anchor = anchor;
    r.margin = margin;
    r.pass = std::isfinite(margin) && margin >= 0.0;
    out.push_back(std::move(r));
}

double default_spacing(int n, int M) { return kTwoPi / (64.0 * M * n); }

// ---------------------------------------------------------------- combinatorics

void suite_combinatorics(std::vector<CheckResult>& out) {
    const std::string S = "combinatorics";

    {
        double m = 0.0;
        for (int n = 1; n <= 5 && m >= 0.0; ++n)
            for (int k = 0; k <= 8; ++k)
                if (ExactInt(enumerate(n, k).size()) != binomial(n + k - 1, k)) {
                    m = -1.0;
                    break;
                }
        add(out, S, "index-count", "n<=5 k<=8", m);
    }

    {
        double m = 0.0;
        for (int n : {2, 3, 4})
            for (int k : {1, 3, 5}) {
                const auto idx = enumerate(n, k);
                std::vector<int> first(n, 0), last(n, 0);
                first[0] = k;
                last[n - 1] = k;
                if (idx.front().parts() != first || idx.back().parts() != last) m = -1.0;
                for (std::size_t i = 1; i < idx.size(); ++i)
                    if (!(idx[i] < idx[i - 1])) m = -1.0;
            }
        add(out, S, "index-order", "n<=4 k<=5", m);
    }

    {
        double m = 0.0;
        for (int n = 1; n <= 6; ++n)
            for (int M = 1; M <= 10; ++M)
                if (sum_multinomials(n, M) != integer_power(n, M)) m = -1.0;
        add(out, S, "power-identity", "n<=6 M<=10", m);
    }

    {
        double m = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= 6; ++n)
            for (int M = 1; M <= 10; ++M) {
                const ExactInt lhs = sum_multinomials_squared(n, M);
                const ExactInt rhs = factorial(M) * integer_power(n, M);
                if (lhs > rhs) {
                    m = -1.0;
                } else {
                    const double gap = (rhs - lhs).convert_to<double>() / rhs.convert_to<double>();
                    m = std::min(m, gap);
                }
            }
        add(out, S, "square-sum-cap", "n<=6 M<=10", m);
    }

    {
        double m = 0.0;
        for (int n = 1; n <= 4; ++n)
            for (int M = 1; M <= 6; ++M) {
                ExactInt direct = 0;
                for (const MultiIndex& alpha : enumerate(n, M)) {
                    const ExactInt c = multinomial(alpha);
                    direct += c * c;
                }
                if (direct != sum_multinomials_squared(n, M)) m = -1.0;
            }
        add(out, S, "square-sum-direct", "n<=4 M<=6", m);
    }

    add(out, S, "trinomial-value", "24 over (8,8,8)",
        multinomial(MultiIndex({8, 8, 8})) == ExactInt("9465511770") ? 0.0 : -1.0);
}

// --------------------------------------------------------------------- wiener

void suite_wiener(std::vector<CheckResult>& out) {
    const std::string S = "wiener";

    {
        double dev = 0.0;
        for (double a : {0.3, 0.5, 0.8}) {
            const TruncatedSeries f = mobius_series(a, 40);
            dev = std::max(dev, std::abs(f.coeff(MultiIndex({0})) - a));
            for (int k = 1; k <= 40; ++k) {
                const double want = -(1.0 - a * a) * std::pow(a, k - 1);
                dev = std::max(dev, std::abs(f.coeff(MultiIndex({k})) - want));
            }
        }
        add(out, S, "disc-map-profile", "a in {0.3,0.5,0.8}", 1e-12 - dev);
    }

    {
        const TruncatedSeries f = mobius_series(0.5, 40);
        const double v = majorant(f, {0.25});
        add(out, S, "majorant-value", "a=0.5 r=0.25", 1e-12 - std::abs(v - 5.0 / 7.0));
    }

    {
        double dev = 0.0;
        for (double a : {0.2, 0.5, 0.9}) {
            const double r = mobius_bohr_radius(a);
            dev = std::max(dev, std::abs(r - 1.0 / (1.0 + 2.0 * a)));
            const double m = majorant(mobius_series(a, 200), {r});
            dev = std::max(dev, std::abs(m - 1.0));
        }
        add(out, S, "radius-law", "a in {0.2,0.5,0.9}", 1e-10 - dev);
    }

    {
        double m = std::numeric_limits<double>::infinity();
        for (double a : {0.3, 0.6, 0.9})
            for (double b : {0.3, 0.6, 0.9}) {
                const TruncatedSeries g = multiply(embed(mobius_series(a, 12), 2, 0),
                                                   embed(mobius_series(b, 12), 2, 1));
                for (int k = 1; k <= 6; ++k) {
                    const WienerReport w = wiener_bound_check(g, k, 1e-9);
                    m = std::min(m, w.rhs + 1e-9 - w.lhs);
                }
            }
        add(out, S, "coefficient-tail", "products, k<=6", m);
    }

    {
        double dev = 0.0;
        for (double a : {0.3, 0.6, 0.9}) {
            const WienerReport w = wiener_bound_check(mobius_series(a, 12), 1, 1e-9);
            dev = std::max(dev, std::abs(w.lhs - w.rhs));
        }
        add(out, S, "one-dim-tightness", "k=1, a in {0.3,0.6,0.9}", 1e-12 - dev);
    }

    {
        double m = 0.0;
        const TruncatedSeries g = multiply(embed(mobius_series(0.4, 8), 2, 0),
                                           embed(mobius_series(0.7, 8), 2, 1));
        const TruncatedSeries g2 = symmetrize(g, 2);
        for (const auto& [alpha, c] : g2.coeffs()) {
            if (alpha.order() % 2 != 0) m = -1.0;
            if (c != g.coeff(alpha)) m = -1.0;
        }
        for (const auto& [alpha, c] : g.coeffs())
            if (alpha.order() % 2 == 0 && g2.coeff(alpha) != c) m = -1.0;
        if (symmetrize(g, 1).coeffs().size() != g.coeffs().size()) m = -1.0;
        add(out, S, "sector-filter", "period 2 on a product", m);
    }

    {
        double dev = 0.0;
        for (double a : {0.3, 0.6}) {
            const TruncatedSeries g = mobius_normalize(mobius_series(a, 30));
            dev = std::max(dev, std::abs(g.coeff(MultiIndex({0}))));
            dev = std::max(dev, std::abs(g.coeff(MultiIndex({1})) - Complex(-1.0, 0.0)));
            for (int k = 2; k <= 30; ++k) dev = std::max(dev, std::abs(g.coeff(MultiIndex({k}))));
        }
        add(out, S, "recenter-pins-origin", "a in {0.3,0.6}", 1e-9 - dev);
    }
}

// ---------------------------------------------------------------------- lower

void suite_lower(std::vector<CheckResult>& out) {
    const std::string S = "lower";

    {
        const Enclosure e = refined_lower(1);
        const double third = 1.0 / 3.0;
        const double m =
            std::min({third - e.lo + 1e-15, e.hi - third + 1e-15, 3e-12 - e.width()});
        add(out, S, "dim1-root", "n=1", m);
    }

    {
        struct Ref {
            int n;
            double root;
        };
        const Ref refs[] = {
            {2, 0.28734677147337924},    {3, 0.25801349853766266},
            {4, 0.23681955802022678},    {5, 0.22046266565913884},
            {6, 0.20729282989018501},    {16, 0.14284113803985130},
            {100, 0.063297219885400205}, {189, 0.046824823752349259},
            {1000, 0.020853410691125944}};
        double m = std::numeric_limits<double>::infinity();
        for (const Ref& ref : refs) {
            const Enclosure e = refined_lower(ref.n);
            m = std::min(m, std::min(ref.root - e.lo, e.hi - ref.root) + 1e-15);
            m = std::min(m, 3e-12 - e.width());
        }
        add(out, S, "pinned-roots", "n in {2,...,1000}", m);
    }

    {
        double m = std::numeric_limits<double>::infinity();
        Enclosure prev = refined_lower(1);
        for (int n = 2; n <= 59; ++n) {
            const Enclosure cur = refined_lower(n);
            m = std::min(m, cur.lo * std::sqrt(static_cast<double>(n)) -
                                prev.hi * std::sqrt(static_cast<double>(n - 1)));
            prev = cur;
        }
        add(out, S, "scaled-growth", "n=1..59", m);
    }

    {
        const double q5 = refined_lower(5).hi * std::sqrt(5.0);
        const double q6 = refined_lower(6).lo * std::sqrt(6.0);
        const auto threshold = refined_lower_scaled_threshold(100);
        double m = std::min(0.5 - q5, q6 - 0.5);
        if (!threshold || *threshold != 6) m = -1.0;
        add(out, S, "half-crossing", "threshold at n=6", m);
    }

    {
        const double v = est_bound(0.5, 1.0 / 9.0);
        const double w = est_bound(1.0, 0.25);
        const double m = std::min(1e-15 - std::abs(v - 0.875), 1e-15 - std::abs(w - 1.0));
        add(out, S, "patched-estimate", "c0=0.5 s=1/9 and c0=1", m);
    }

    {
        const double root = 0.28734677147337924;
        const auto below = refined_equation_bounds(root - 1e-6, 2);
        const auto above = refined_equation_bounds(root + 1e-6, 2);
        add(out, S, "equation-signs", "n=2 near the root",
            std::min(-below.second, above.first));
    }
}

// ---------------------------------------------------------------------- upper

void suite_upper(std::vector<CheckResult>& out) {
    const std::string S = "upper";

    {
        double m = std::numeric_limits<double>::infinity();
        for (int n : {2, 3, 4})
            for (int M : {2, 3}) {
                const SearchResult res = search_upper(n, M, 8, 0, default_spacing(n, M));
                if (!res.certified) m = -1.0;
                const Enclosure lower = refined_lower(n);
                m = std::min(m, res.bound - lower.lo);
                m = std::min(m, 1.0 + 1e-12 - res.bound);
                m = std::min(m, 1.06 - res.cert.enclosure.hi / res.cert.enclosure.lo);
            }
        add(out, S, "sign-search-sandwich", "n<=4 M<=3, 8 draws", m);
    }

    {
        double m = std::numeric_limits<double>::infinity();
        for (int n : {2, 3})
            for (int M : {2, 3})
                for (std::uint64_t seed : {1u, 2u, 3u}) {
                    const SignedHomPoly p = random_signs(n, M, seed);
                    const SupNormCert c = sup_norm_certified(p, default_spacing(n, M));
                    double max_coeff = 0.0;
                    for (double v : p.coeffs) max_coeff = std::max(max_coeff, std::abs(v));
                    const double coeff_sum =
                        integer_power(n, M).convert_to<double>();
                    m = std::min(m, c.enclosure.hi - c.enclosure.lo);
                    m = std::min(m, coeff_sum * (1.0 + 1e-12) - c.enclosure.hi);
                    m = std::min(m, c.enclosure.hi - max_coeff);
                }
        add(out, S, "grid-certificate", "n<=3 M<=3, seeds 1..3", m);
    }

    {
        const SignedHomPoly p = random_signs(2, 4, 7);
        double m = std::numeric_limits<double>::infinity();
        double prev_lo = 0.0, prev_ratio = std::numeric_limits<double>::infinity();
        double max_lo = 0.0, min_hi = std::numeric_limits<double>::infinity();
        for (int divisor : {8, 16, 32}) {
            const double h = kTwoPi / (static_cast<double>(divisor) * p.M * p.n);
            const SupNormCert c = sup_norm_certified(p, h);
            const double ratio = c.enclosure.hi / c.enclosure.lo;
            m = std::min(m, c.enclosure.lo - prev_lo);
            if (std::isfinite(prev_ratio)) m = std::min(m, prev_ratio - ratio);
            prev_lo = c.enclosure.lo;
            prev_ratio = ratio;
            max_lo = std::max(max_lo, c.enclosure.lo);
            min_hi = std::min(min_hi, c.enclosure.hi);
        }
        m = std::min(m, min_hi - max_lo);
        add(out, S, "grid-refinement", "n=2 M=4, divisors 8,16,32", m);
    }

    {
        double dev = 0.0;
        for (int M = 2; M <= 5; ++M) {
            const std::vector<int> plus(enumerate(2, M).size(), 1);
            const SignedHomPoly p = make_signed_poly(2, M, plus);
            const SupNormCert c = sup_norm_certified(p, default_spacing(2, M));
            const double want = std::ldexp(1.0, M); // 2^M
            dev = std::max(dev, std::abs(c.enclosure.lo - want));
            dev = std::max(dev, std::abs(c.enclosure.hi - want));
        }
        add(out, S, "full-agreement-row", "(z1+z2)^M, M<=5", -dev);
    }

    {
        struct Ref {
            int n;
            double value;
        };
        const Ref refs[] = {{189, 0.30487590481314522},
                            {1000, 0.14134278631089906},
                            {10000, 0.04526924763565947},
                            {1000000, 0.0050295596164881622}};
        double m = std::numeric_limits<double>::infinity();
        for (const Ref& ref : refs) {
            const double v = theoretical_upper(ref.n);
            m = std::min(m, 1e-12 - std::abs(v - ref.value) / ref.value);
            const double envelope =
                2.0 * std::sqrt(std::log(static_cast<double>(ref.n)) / ref.n);
            m = std::min(m, envelope - v);
        }
        add(out, S, "chain-values", "n in {189,1e3,1e4,1e6}", m);
    }

    {
        struct Ref {
            int n;
            double value;
        };
        const Ref refs[] = {{189, 1.8306949183999077},
                            {1000, 1.700611754900341},
                            {10000, 1.4916448625115308},
                            {100000, 1.4100451413632085},
                            {1000000, 1.3531517101907655}};
        double m = std::numeric_limits<double>::infinity();
        double prev = std::numeric_limits<double>::infinity();
        for (const Ref& ref : refs) {
            const double v = asymptotic_ratio(ref.n);
            m = std::min(m, 1e-12 - std::abs(v - ref.value) / ref.value);
            m = std::min(m, prev - v);
            prev = v;
        }
        m = std::min(m, 2.0 - asymptotic_ratio(189));
        add(out, S, "chain-ratio-trend", "n=189..1e6 decreasing", m);
    }

    {
        double m = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= 8; ++n)
            for (int M = 1; M <= 12; ++M) {
                const ExactInt lhs = sum_multinomials_squared(n, M) * binomial(n + M - 1, M);
                const ExactInt rhs = integer_power(n, 2 * M);
                if (lhs < rhs) {
                    m = -1.0;
                } else {
                    m = std::min(m, (lhs - rhs).convert_to<double>() / lhs.convert_to<double>());
                }
                const SymmetricFormFloor f = symmetric_form_floor(n, M);
                const double sq = sum_multinomials_squared(n, M).convert_to<double>();
                m = std::min(m, 1e-12 - std::abs(f.l2 * f.l2 - sq) / sq);
            }
        add(out, S, "l2-vs-mean", "n<=8 M<=12", m);
    }

    {
        double m = 0.0;
        for (int M = 1; M <= 11; ++M)
            if (sum_multinomials_squared(2, M) != binomial(2 * M, M)) m = -1.0;
        if (sum_multinomials_squared(2, 2) != 6) m = -1.0;
        if (sum_multinomials_squared(3, 3) != 93) m = -1.0;
        add(out, S, "central-binomial", "n=2 M<=11 and n=3 M=3", m);
    }

    {
        double m = std::numeric_limits<double>::infinity();
        const auto witness = refute_uniform_constant(2.0, 50, 50);
        if (!witness || witness->n != 16 || witness->M != 14) {
            m = -1.0;
        } else {
            const ExactInt lhs = sum_multinomials_squared(16, 14);
            const ExactInt rhs = ExactInt(1) << 88; // 4^14 * 16^15
            if (lhs != ExactInt("324818459247162309497902336") || lhs <= rhs) {
                m = -1.0;
            } else {
                m = (lhs - rhs).convert_to<double>() / rhs.convert_to<double>();
            }
        }
        if (refute_uniform_constant(1e6, 5, 5)) m = -1.0;
        add(out, S, "constant-search-hit", "C=2 grid 50x50", m);
    }

    {
        double m = std::numeric_limits<double>::infinity();
        double prev = 0.0;
        double first = 0.0, last = 0.0;
        for (int M = 10; M <= 20; ++M) {
            const double l2 = symmetric_form_floor(3, M).l2;
            const double t = l2 * std::pow(static_cast<double>(M), 1.5) /
                             std::pow(3.0, static_cast<double>(M));
            if (M == 10) first = t;
            if (M == 20) last = t;
            if (M > 10) m = std::min(m, t - prev);
            prev = t;
        }
        m = std::min(m, 1e-9 - std::abs(first - 6.35163026647) / first);
        m = std::min(m, 1e-9 - std::abs(last - 12.7811465291) / last);
        add(out, S, "cube-growth", "n=3 M=10..20", m);
    }
}

} // namespace

std::vector<CheckResult> run_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    bool known = false;
    if (suite == "combinatorics" || suite == "all") {
        suite_combinatorics(out);
        known = true;
    }
    if (suite == "wiener" || suite == "all") {
        suite_wiener(out);
        known = true;
    }
    if (suite == "lower" || suite == "all") {
        suite_lower(out);
        known = true;
    }
    if (suite == "upper" || suite == "all") {
        suite_upper(out);
        known = true;
    }
    if (!known) throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    return out;
}

bool print_report(std::ostream& os, const std::vector<CheckResult>& results) {
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        os << (r.pass ? "[ ok ] " : "[FAIL] ") << r.suite << '/' << r.name;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", r.margin);
        os << "  margin=" << buf << "  (" << r.anchor << ")\n";
        if (r.pass) ++passed;
    }
    os << results.size() << " checks, " << passed << " passed, " << (results.size() - passed)
       << " failed\n";
    return passed == results.size();
}

} // namespace bohr
