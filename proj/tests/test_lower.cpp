#include "doctest.h"

#include <stdexcept>

#include "bohr/lower.hpp"

#include <cmath>

using namespace bohr;

TEST_SUITE("lower") {

TEST_CASE("closed-form lower bound") {
    CHECK(naive_lower(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(naive_lower(4) == doctest::Approx(1.0 / 6.0).epsilon(1e-16));
    CHECK(naive_lower(9) == doctest::Approx(1.0 / 9.0).epsilon(1e-16));
    CHECK_THROWS_AS(naive_lower(0), std::invalid_argument);
}

TEST_CASE("term-modulus estimate values and domain") {
    CHECK(est_bound(0.5, 1.0 / 9.0) == doctest::Approx(0.875).epsilon(1e-15));
    CHECK(est_bound(1.0, 1.0 / 9.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(est_bound(0.0, 0.0) == 0.0);
    CHECK_THROWS_AS(est_bound(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(est_bound(1.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(est_bound(0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(est_bound(0.5, -0.1), std::invalid_argument);
}

TEST_CASE("estimate never exceeds one when s = 1/9") {
    double maxv = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        const double c0 = static_cast<double>(i) / 10000.0;
        maxv = std::max(maxv, est_bound(c0, 1.0 / 9.0));
    }
    CHECK(maxv <= 1.0 + 1e-15);
    CHECK(maxv == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("equation enclosure brackets zero correctly") {
    const auto at_zero = refined_equation_bounds(0.0, 3);
    CHECK(at_zero.first == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(at_zero.second == doctest::Approx(-0.5).epsilon(1e-15));

    const double root2 = 0.28734677147337924;
    const auto below = refined_equation_bounds(root2 - 1e-6, 2);
    const auto above = refined_equation_bounds(root2 + 1e-6, 2);
    CHECK(below.first <= below.second);
    CHECK(below.second < 0.0);
    CHECK(above.first > 0.0);
    CHECK_THROWS_AS(refined_equation_bounds(-0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(refined_equation_bounds(0.2, 0), std::invalid_argument);
}

TEST_CASE("dimension-one enclosure pins one third") {
    const Enclosure e = refined_lower(1);
    const long double third = 1.0L / 3.0L;
    CHECK(static_cast<long double>(e.lo) <= third);
    CHECK(static_cast<long double>(e.hi) >= third);
    CHECK(e.width() <= 3e-12);
}

TEST_CASE("enclosures contain the independently computed roots") {
    struct Ref {
        int n;
        double root;
    };
    const Ref refs[] = {
        {2, 0.28734677147337924},    {3, 0.25801349853766266},
        {4, 0.23681955802022678},    {5, 0.22046266565913884},
        {6, 0.20729282989018501},    {16, 0.14284113803985130},
        {100, 0.063297219885400205}, {1000, 0.020853410691125944}};
    for (const Ref& ref : refs) {
        const Enclosure e = refined_lower(ref.n);
        CHECK(e.lo <= ref.root + 1e-15);
        CHECK(e.hi >= ref.root - 1e-15);
        CHECK(e.width() <= 3e-12);
        CHECK(e.lo > naive_lower(ref.n));
    }
}

TEST_CASE("tolerance parameter controls the width") {
    CHECK(refined_lower(2, 1e-6).width() <= 1.1e-6);
    CHECK(refined_lower(2, 1e-3).width() <= 1.1e-3);
    CHECK_THROWS_AS(refined_lower(2, 0.0), std::invalid_argument);
}

TEST_CASE("roots decrease with the dimension") {
    Enclosure prev = refined_lower(1);
    for (int n = 2; n <= 12; ++n) {
        const Enclosure cur = refined_lower(n);
        CHECK(cur.hi < prev.lo);
        prev = cur;
    }
}

TEST_CASE("scaled roots cross one half at dimension six") {
    CHECK(refined_lower(5).hi * std::sqrt(5.0) < 0.5);
    CHECK(refined_lower(6).lo * std::sqrt(6.0) > 0.5);
    const auto t = refined_lower_scaled_threshold(100);
    REQUIRE(t.has_value());
    CHECK(*t == 6);
    CHECK(!refined_lower_scaled_threshold(5).has_value());
    CHECK_THROWS_AS(refined_lower_scaled_threshold(1), std::invalid_argument);
}

} // TEST_SUITE
