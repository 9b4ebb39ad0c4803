#include "doctest.h"

#include <stdexcept>

#include "bohr/rng.hpp"
#include "bohr/series.hpp"

#include <cmath>
#include <sstream>

using namespace bohr;

namespace {

MultiIndex mi(std::vector<int> parts) { return MultiIndex(std::move(parts)); }

TruncatedSeries random_series(int n, int cap, std::uint64_t seed) {
    SplitMix64 gen(seed);
    TruncatedSeries f(n, cap);
    for (int k = 0; k <= cap; ++k)
        for (const MultiIndex& alpha : enumerate(n, k))
            if (gen.next_unit() < 0.6)
                f.set(alpha, Complex(2.0 * gen.next_unit() - 1.0, 2.0 * gen.next_unit() - 1.0));
    return f;
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("coefficient storage and validation") {
    TruncatedSeries f(2, 3);
    CHECK(f.dim() == 2);
    CHECK(f.cap() == 3);
    f.set(mi({1, 2}), Complex(0.5, -1.0));
    CHECK(f.coeff(mi({1, 2})) == Complex(0.5, -1.0));
    CHECK(f.coeff(mi({2, 1})) == Complex(0.0, 0.0));
    CHECK(f.constant_term() == Complex(0.0, 0.0));
    f.set(mi({0, 0}), Complex(0.25, 0.0));
    CHECK(f.constant_term() == Complex(0.25, 0.0));
    CHECK_THROWS_AS(f.set(mi({1, 1, 1}), Complex(1.0, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(f.set(mi({2, 2}), Complex(1.0, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(2, -1), std::invalid_argument);
}

TEST_CASE("polyradius validation") {
    PolyRadius R(std::vector<double>{0.5, 2.0});
    CHECK(R.dim() == 2);
    CHECK(R[1] == 2.0);
    CHECK_THROWS_AS(PolyRadius(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(PolyRadius(std::vector<double>{1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(PolyRadius(std::vector<double>{-1.0}), std::invalid_argument);
}

TEST_CASE("add, scale, and dimension discipline") {
    TruncatedSeries a(1, 2), b(1, 2);
    a.set(mi({0}), Complex(1.0, 0.0));
    a.set(mi({1}), Complex(2.0, 0.0));
    b.set(mi({1}), Complex(-2.0, 0.0));
    const TruncatedSeries s = add(a, b);
    CHECK(s.coeff(mi({0})) == Complex(1.0, 0.0));
    CHECK(s.coeff(mi({1})) == Complex(0.0, 0.0));
    const TruncatedSeries t = scale(a, Complex(0.0, 1.0));
    CHECK(t.coeff(mi({1})) == Complex(0.0, 2.0));
    CHECK(scale(a, Complex(0.0, 0.0)).coeffs().empty());
    TruncatedSeries c(2, 2);
    CHECK_THROWS_AS(add(a, c), std::invalid_argument);
}

TEST_CASE("product truncates at the cap") {
    TruncatedSeries a(1, 2), b(1, 2);
    a.set(mi({0}), Complex(1.0, 0.0));
    a.set(mi({1}), Complex(1.0, 0.0));   // 1 + z
    b.set(mi({0}), Complex(1.0, 0.0));
    b.set(mi({1}), Complex(-1.0, 0.0));  // 1 - z
    const TruncatedSeries p = multiply(a, b);
    CHECK(p.coeff(mi({0})) == Complex(1.0, 0.0));
    CHECK(p.coeff(mi({1})) == Complex(0.0, 0.0));
    CHECK(p.coeff(mi({2})) == Complex(-1.0, 0.0));

    TruncatedSeries a1(1, 1), b1(1, 1);
    a1.set(mi({1}), Complex(1.0, 0.0));
    b1.set(mi({1}), Complex(1.0, 0.0));
    CHECK(multiply(a1, b1).coeffs().empty()); // z*z dropped past cap 1
}

TEST_CASE("majorant and evaluation") {
    TruncatedSeries f(2, 3);
    f.set(mi({0, 0}), Complex(1.0, 0.0));
    f.set(mi({1, 1}), Complex(3.0, -4.0)); // modulus 5
    CHECK(majorant(f, {0.5, 0.2}) == doctest::Approx(1.0 + 5.0 * 0.1).epsilon(1e-15));
    const Complex v = evaluate(f, {Complex(0.5, 0.0), Complex(0.0, 0.2)});
    CHECK(std::abs(v - (Complex(1.0, 0.0) + Complex(3.0, -4.0) * Complex(0.0, 0.1))) < 1e-15);
    CHECK_THROWS_AS(majorant(f, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(majorant(f, {0.5, -0.1}), std::invalid_argument);
}

TEST_CASE("rescale matches absorbing the radius into the argument") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        SplitMix64 gen(derive_seed(42, trial));
        const int n = 1 + static_cast<int>(gen.next() % 3);
        const TruncatedSeries f = random_series(n, 4, derive_seed(7, trial));
        std::vector<double> R(n), w(n), Rw(n);
        for (int j = 0; j < n; ++j) {
            R[j] = 0.5 + 0.75 * gen.next_unit();
            w[j] = gen.next_unit();
            Rw[j] = R[j] * w[j];
        }
        const double lhs = majorant(rescale(f, PolyRadius(R)), w);
        const double rhs = majorant(f, Rw);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("homogeneous l2 slices") {
    TruncatedSeries f(2, 2);
    f.set(mi({1, 0}), Complex(3.0, 0.0));
    f.set(mi({0, 1}), Complex(0.0, 4.0));
    f.set(mi({2, 0}), Complex(1.0, 0.0));
    CHECK(homogeneous_l2(f, 1) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(homogeneous_l2(f, 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(homogeneous_l2(f, 0) == 0.0);
    CHECK_THROWS_AS(homogeneous_l2(f, 3), std::invalid_argument);
    CHECK_THROWS_AS(homogeneous_l2(f, -1), std::invalid_argument);
}

TEST_CASE("embedding a one-variable series") {
    TruncatedSeries g(1, 3);
    g.set(mi({0}), Complex(0.5, 0.0));
    g.set(mi({2}), Complex(0.0, -1.0));
    const TruncatedSeries f = embed(g, 3, 1);
    CHECK(f.dim() == 3);
    CHECK(f.coeff(mi({0, 0, 0})) == Complex(0.5, 0.0));
    CHECK(f.coeff(mi({0, 2, 0})) == Complex(0.0, -1.0));
    CHECK(f.coeffs().size() == 2);
    CHECK_THROWS_AS(embed(g, 3, 3), std::invalid_argument);
}

TEST_CASE("text round trip preserves every coefficient bit") {
    const TruncatedSeries f = random_series(2, 5, 991);
    std::stringstream ss;
    write_series(ss, f);
    const TruncatedSeries g = read_series(ss);
    CHECK(g.dim() == f.dim());
    CHECK(g.coeffs().size() == f.coeffs().size());
    for (const auto& [alpha, c] : f.coeffs()) {
        CHECK(g.coeff(alpha).real() == c.real());
        CHECK(g.coeff(alpha).imag() == c.imag());
    }
}

TEST_CASE("series reader rejects malformed input") {
    {
        std::stringstream ss("");
        CHECK_THROWS_AS(read_series(ss), std::runtime_error);
    }
    {
        std::stringstream ss("1 0 0.5 0\n2 0.5 0\n"); // token count changes
        CHECK_THROWS_AS(read_series(ss), std::runtime_error);
    }
    {
        std::stringstream ss("-1 0.5 0\n"); // negative exponent
        CHECK_THROWS_AS(read_series(ss), std::runtime_error);
    }
    {
        std::stringstream ss("x 0.5 0\n"); // non-integer exponent
        CHECK_THROWS_AS(read_series(ss), std::runtime_error);
    }
}

} // TEST_SUITE
