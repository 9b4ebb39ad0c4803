#include "doctest.h"

#include <stdexcept>

#include "bohr/combinatorics.hpp"

using namespace bohr;

TEST_SUITE("combinatorics") {

TEST_CASE("multi-index construction and accessors") {
    MultiIndex a(std::vector<int>{2, 0, 3});
    CHECK(a.dim() == 3);
    CHECK(a.order() == 5);
    CHECK(a[0] == 2);
    CHECK(a[2] == 3);
    CHECK_THROWS_AS(MultiIndex(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex(std::vector<int>{1, -1}), std::invalid_argument);
}

TEST_CASE("multi-index ordering is lexicographic") {
    MultiIndex a(std::vector<int>{1, 2});
    MultiIndex b(std::vector<int>{2, 1});
    CHECK(a < b);
    CHECK(a == MultiIndex(std::vector<int>{1, 2}));
}

TEST_CASE("enumeration count, order, and endpoints") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= 7; ++k) {
            const auto idx = enumerate(n, k);
            CHECK(ExactInt(idx.size()) == binomial(n + k - 1, k));
            std::vector<int> first(n, 0), last(n, 0);
            first[0] = k;
            last[n - 1] = k;
            CHECK(idx.front().parts() == first);
            CHECK(idx.back().parts() == last);
            for (std::size_t i = 1; i < idx.size(); ++i) {
                CHECK(idx[i] < idx[i - 1]);
                CHECK(idx[i].order() == k);
            }
        }
    }
    CHECK(enumerate(3, 0).size() == 1);
    CHECK_THROWS_AS(enumerate(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate(2, -1), std::invalid_argument);
}

TEST_CASE("binomial values and domain") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(52, 5) == 2598960);
    CHECK_THROWS_AS(binomial(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(binomial(3, -1), std::invalid_argument);
}

TEST_CASE("multinomial values") {
    CHECK(multinomial(MultiIndex(std::vector<int>{3, 0, 0})) == 1);
    CHECK(multinomial(MultiIndex(std::vector<int>{1, 1, 1})) == 6);
    CHECK(multinomial(MultiIndex(std::vector<int>{2, 1})) == 3);
    CHECK(multinomial(MultiIndex(std::vector<int>{8, 8, 8})) == ExactInt("9465511770"));
}

TEST_CASE("power and factorial helpers") {
    CHECK(integer_power(2, 10) == 1024);
    CHECK(integer_power(7, 0) == 1);
    CHECK(factorial(0) == 1);
    CHECK(factorial(12) == 479001600);
    CHECK_THROWS_AS(integer_power(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("multinomials over one degree sum to the power") {
    CHECK(sum_multinomials(4, 6) == 4096);
    for (int n = 1; n <= 6; ++n)
        for (int M = 1; M <= 8; ++M) CHECK(sum_multinomials(n, M) == integer_power(n, M));
}

TEST_CASE("squared multinomial sums: known values") {
    CHECK(sum_multinomials_squared(2, 2) == 6);
    CHECK(sum_multinomials_squared(3, 3) == 93);
    CHECK(sum_multinomials_squared(1, 7) == 1);
    for (int M = 1; M <= 11; ++M)
        CHECK(sum_multinomials_squared(2, M) == binomial(2 * M, M));
    CHECK(sum_multinomials_squared(16, 14) == ExactInt("324818459247162309497902336"));
}

TEST_CASE("squared multinomial sums match direct enumeration") {
    for (int n = 1; n <= 4; ++n)
        for (int M = 1; M <= 6; ++M) {
            ExactInt direct = 0;
            for (const MultiIndex& alpha : enumerate(n, M)) {
                const ExactInt c = multinomial(alpha);
                direct += c * c;
            }
            CHECK(direct == sum_multinomials_squared(n, M));
        }
}

TEST_CASE("squared sums never exceed M! times the plain sum") {
    for (int n = 1; n <= 6; ++n)
        for (int M = 1; M <= 10; ++M)
            CHECK(sum_multinomials_squared(n, M) <= factorial(M) * integer_power(n, M));
}

} // TEST_SUITE
