#include "bohr/wiener.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bohr {

TruncatedSeries mobius_series(double a, int cap) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("mobius_series: requires 0 <= a < 1");
    if (cap < 1) throw std::invalid_argument("mobius_series: cap must be >= 1");
    TruncatedSeries f(1, cap);
    f.set(MultiIndex({0}), Complex(a, 0.0));
    const double head = -(1.0 - a * a);
    double c = head; // -(1-a^2) a^(k-1)
    for (int k = 1; k <= cap; ++k) {
        f.set(MultiIndex({k}), Complex(c, 0.0));
        c *= a;
    }
    return f;
}

double mobius_bohr_radius(double a) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("mobius_bohr_radius: requires 0 < a < 1");
    return 1.0 / (1.0 + 2.0 * a);
}

TruncatedSeries symmetrize(const TruncatedSeries& f, int k) {
    if (k < 1) throw std::invalid_argument("symmetrize: requires k >= 1");
    TruncatedSeries r(f.dim(), f.cap());
    for (const auto& [alpha, c] : f.coeffs()) {
        if (alpha.order() % k == 0) r.set(alpha, c);
    }
    return r;
}

TruncatedSeries mobius_apply(const TruncatedSeries& g, Complex c) {
    if (!(std::abs(c) < 1.0)) throw std::invalid_argument("mobius_apply: requires |c| < 1");
    const int n = g.dim();
    const int cap = g.cap();
    const Complex c0 = g.constant_term();

    TruncatedSeries u(n, cap); // g - c_0, stored without the vanished constant
    for (const auto& [alpha, cc] : g.coeffs()) {
        if (alpha.order() > 0) u.set(alpha, cc);
    }
    const double contraction = std::abs(c) * majorant(u, std::vector<double>(static_cast<std::size_t>(n), 1.0));
    if (!(contraction < 1.0)) {
        throw std::domain_error("mobius_apply: contraction |c|*majorant(g-c0) >= 1 on the unit polydisc");
    }

    const Complex d = Complex(1.0, 0.0) - std::conj(c) * c0;
    const Complex w = std::conj(c) / d;

    // inv = sum_m (w u)^m; u has no constant term so powers beyond the cap vanish
    TruncatedSeries inv(n, cap);
    {
        MultiIndex zero(std::vector<int>(static_cast<std::size_t>(n), 0));
        inv.set(zero, Complex(1.0, 0.0));
    }
    TruncatedSeries upow = u;
    Complex wm = w;
    for (int m = 1; m <= cap; ++m) {
        if (upow.coeffs().empty()) break;
        inv = add(inv, scale(upow, wm));
        wm *= w;
        if (m < cap) upow = multiply(upow, u);
    }

    TruncatedSeries num = g; // g - c
    {
        MultiIndex zero(std::vector<int>(static_cast<std::size_t>(n), 0));
        num.set(zero, c0 - c);
    }
    return scale(multiply(num, inv), Complex(1.0, 0.0) / d);
}

TruncatedSeries mobius_normalize(const TruncatedSeries& g) {
    const Complex c0 = g.constant_term();
    if (!(std::abs(c0) < 1.0)) throw std::invalid_argument("mobius_normalize: requires |c0| < 1");
    return mobius_apply(g, c0);
}

WienerReport wiener_bound_check(const TruncatedSeries& f, int k, double tol) {
    WienerReport rep;
    rep.lhs = homogeneous_l2(f, k);
    rep.rhs = 1.0 - std::norm(f.constant_term());
    rep.holds = rep.lhs <= rep.rhs + tol;
    return rep;
}

} // namespace bohr
