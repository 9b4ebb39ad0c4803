#include "doctest.h"

#include <stdexcept>

#include "bohr/series.hpp"
#include "bohr/wiener.hpp"

#include <cmath>

using namespace bohr;

namespace {

MultiIndex mi(std::vector<int> parts) { return MultiIndex(std::move(parts)); }

} // namespace

TEST_SUITE("wiener") {

TEST_CASE("disc automorphism series coefficients") {
    const double a = 0.4;
    const TruncatedSeries f = mobius_series(a, 25);
    CHECK(f.coeff(mi({0})).real() == doctest::Approx(a).epsilon(1e-16));
    for (int k = 1; k <= 25; ++k) {
        const double want = -(1.0 - a * a) * std::pow(a, k - 1);
        CHECK(f.coeff(mi({k})).real() == doctest::Approx(want).epsilon(1e-14));
        CHECK(f.coeff(mi({k})).imag() == 0.0);
    }
    CHECK_THROWS_AS(mobius_series(-0.1, 5), std::invalid_argument);
    CHECK_THROWS_AS(mobius_series(1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(mobius_series(0.5, 0), std::invalid_argument);
}

TEST_CASE("family radius closed form") {
    CHECK(mobius_bohr_radius(0.5) == doctest::Approx(0.5).epsilon(1e-16));
    CHECK(mobius_bohr_radius(0.25) == doctest::Approx(1.0 / 1.5).epsilon(1e-16));
    CHECK_THROWS_AS(mobius_bohr_radius(0.0), std::invalid_argument);
    CHECK_THROWS_AS(mobius_bohr_radius(1.0), std::invalid_argument);
}

TEST_CASE("family radius approaches one third") {
    const double r = mobius_bohr_radius(1.0 - 1e-7);
    CHECK(std::abs(r - 1.0 / 3.0) < 1e-6);
}

TEST_CASE("term-modulus sum reaches one exactly at the family radius") {
    for (double a : {0.2, 0.5, 0.8}) {
        const double r = mobius_bohr_radius(a);
        const double m = majorant(mobius_series(a, 200), {r});
        CHECK(m == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(majorant(mobius_series(a, 200), {r * 0.99}) < 1.0);
        CHECK(majorant(mobius_series(a, 200), {r * 1.01}) > 1.0);
    }
}

TEST_CASE("symmetrize keeps exactly the divisible orders") {
    const TruncatedSeries f = mobius_series(0.6, 9);
    const TruncatedSeries g = symmetrize(f, 3);
    for (const auto& [alpha, c] : g.coeffs()) {
        CHECK(alpha.order() % 3 == 0);
        CHECK(c == f.coeff(alpha));
    }
    for (const auto& [alpha, c] : f.coeffs()) {
        if (alpha.order() % 3 == 0) CHECK(g.coeff(alpha) == c);
        else CHECK(g.coeff(alpha) == Complex(0.0, 0.0));
    }
    CHECK(symmetrize(f, 1).coeffs().size() == f.coeffs().size());
    CHECK_THROWS_AS(symmetrize(f, 0), std::invalid_argument);
}

TEST_CASE("recentering the automorphism gives minus the identity") {
    for (double a : {0.3, 0.6}) {
        const TruncatedSeries g = mobius_normalize(mobius_series(a, 30));
        CHECK(std::abs(g.coeff(mi({0}))) <= 1e-12);
        CHECK(std::abs(g.coeff(mi({1})) - Complex(-1.0, 0.0)) <= 1e-12);
        for (int k = 2; k <= 30; ++k) CHECK(std::abs(g.coeff(mi({k}))) <= 1e-9);
    }
}

TEST_CASE("mobius_apply validates its arguments") {
    const TruncatedSeries f = mobius_series(0.5, 10);
    CHECK_THROWS_AS(mobius_apply(f, Complex(1.0, 0.0)), std::invalid_argument);
    TruncatedSeries big(1, 3);
    big.set(mi({1}), Complex(3.0, 0.0));
    CHECK_THROWS_AS(mobius_apply(big, Complex(0.5, 0.0)), std::domain_error);
    TruncatedSeries c1(1, 2);
    c1.set(mi({0}), Complex(1.2, 0.0));
    CHECK_THROWS_AS(mobius_normalize(c1), std::invalid_argument);
}

TEST_CASE("coefficient bound on products of automorphisms") {
    for (double a : {0.3, 0.6, 0.9})
        for (double b : {0.3, 0.6, 0.9}) {
            const TruncatedSeries g = multiply(embed(mobius_series(a, 12), 2, 0),
                                               embed(mobius_series(b, 12), 2, 1));
            for (int k = 1; k <= 6; ++k) {
                const WienerReport w = wiener_bound_check(g, k, 1e-9);
                CHECK(w.holds);
                CHECK(w.lhs == doctest::Approx(homogeneous_l2(g, k)).epsilon(1e-15));
                CHECK(w.rhs ==
                      doctest::Approx(1.0 - std::norm(g.constant_term())).epsilon(1e-15));
            }
        }
}

TEST_CASE("coefficient bound is an equality in one variable at degree one") {
    for (double a : {0.3, 0.6, 0.9}) {
        const WienerReport w = wiener_bound_check(mobius_series(a, 12), 1, 1e-9);
        CHECK(std::abs(w.lhs - w.rhs) <= 1e-12);
    }
}

} // TEST_SUITE
