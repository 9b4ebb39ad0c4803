#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <vector>

namespace bohr {

// Exact signed big integer; all combinatorial quantities stay in this type
// until a caller explicitly converts at the floating-point boundary.
using ExactInt = boost::multiprecision::cpp_int;

// An n-tuple of nonnegative integers (alpha_1, ..., alpha_n) with its order
// |alpha| = alpha_1 + ... + alpha_n. Immutable after construction.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> parts);

    int dim() const { return static_cast<int>(parts_.size()); }
    int order() const { return order_; }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    // lexicographic comparison on the parts
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int order_;
};

// All alpha with |alpha| = k in dimension n, ordered lexicographically
// decreasing (alpha_1 descending first). The list has binomial(n+k-1, k)
// entries. Rejects n < 1 and k < 0.
std::vector<MultiIndex> enumerate(int n, int k);

// Exact binomial coefficient; requires 0 <= b <= a.
ExactInt binomial(int a, int b);

// |alpha|! / (alpha_1! ... alpha_n!), computed as the product of binomials
// binom(alpha_1+...+alpha_i, alpha_i) so no oversized factorial appears.
ExactInt multinomial(const MultiIndex& alpha);

// n^M as an exact integer; requires n >= 0, M >= 0.
ExactInt integer_power(int n, int M);

// M! as an exact integer.
ExactInt factorial(int M);

// Sum of M!/alpha! over all |alpha| = M in dimension n, by enumeration.
// Equals n^M (multinomial theorem); computing it independently lets callers
// verify that identity rather than assume it.
ExactInt sum_multinomials(int n, int M);

// Sum of (M!/alpha!)^2 over all |alpha| = M in dimension n. Computed as one
// coefficient of an integer series power,
//   sum = [x^M] (sum_k (M!/k!)^2 x^k)^n / (M!)^(2(n-1)),
// so it stays feasible where the index simplex is far too large to walk.
ExactInt sum_multinomials_squared(int n, int M);

} // namespace bohr
