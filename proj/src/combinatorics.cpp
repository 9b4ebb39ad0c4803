#include "bohr/combinatorics.hpp"

#include <stdexcept>
#include <utility>

namespace bohr {

MultiIndex::MultiIndex(std::vector<int> parts) : parts_(std::move(parts)), order_(0) {
    if (parts_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
    for (int p : parts_) {
        if (p < 0) throw std::invalid_argument("MultiIndex: parts must be nonnegative");
        order_ += p;
    }
}

namespace {

void enumerate_rec(int slots, int remaining, std::vector<int>& prefix,
                   std::vector<MultiIndex>& out) {
    if (slots == 1) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        prefix.push_back(v);
        enumerate_rec(slots - 1, remaining - v, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> enumerate(int n, int k) {
    if (n < 1) throw std::invalid_argument("enumerate: dimension must be >= 1");
    if (k < 0) throw std::invalid_argument("enumerate: degree must be >= 0");
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    enumerate_rec(n, k, prefix, out);
    return out;
}

ExactInt binomial(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("binomial: arguments must be nonnegative");
    if (b > a) throw std::invalid_argument("binomial: requires b <= a");
    if (b > a - b) b = a - b;
    ExactInt r = 1;
    for (int i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i; // exact at every step: r is binom(a-b+i, i)
    }
    return r;
}

ExactInt multinomial(const MultiIndex& alpha) {
    ExactInt r = 1;
    int s = 0;
    for (int i = 0; i < alpha.dim(); ++i) {
        s += alpha[i];
        r *= binomial(s, alpha[i]);
    }
    return r;
}

ExactInt integer_power(int n, int M) {
    if (n < 0 || M < 0) throw std::invalid_argument("integer_power: arguments must be nonnegative");
    ExactInt r = 1;
    for (int i = 0; i < M; ++i) r *= n;
    return r;
}

ExactInt factorial(int M) {
    if (M < 0) throw std::invalid_argument("factorial: argument must be nonnegative");
    ExactInt r = 1;
    for (int i = 2; i <= M; ++i) r *= i;
    return r;
}

ExactInt sum_multinomials(int n, int M) {
    if (n < 1) throw std::invalid_argument("sum_multinomials: dimension must be >= 1");
    if (M < 0) throw std::invalid_argument("sum_multinomials: degree must be >= 0");
    ExactInt s = 0;
    for (const MultiIndex& a : enumerate(n, M)) s += multinomial(a);
    return s;
}

ExactInt sum_multinomials_squared(int n, int M) {
    if (n < 1) throw std::invalid_argument("sum_multinomials_squared: dimension must be >= 1");
    if (M < 0) throw std::invalid_argument("sum_multinomials_squared: degree must be >= 0");
    // base coefficients c_k = (M!/k!)^2, k = 0..M
    const ExactInt fM = factorial(M);
    std::vector<ExactInt> c(static_cast<std::size_t>(M) + 1);
    {
        ExactInt falling = fM; // M!/k! built downward from k = 0
        for (int k = 0; k <= M; ++k) {
            c[static_cast<std::size_t>(k)] = falling * falling;
            if (k < M) falling /= k + 1;
        }
    }
    // p = c^n truncated at degree M
    std::vector<ExactInt> p(static_cast<std::size_t>(M) + 1);
    p[0] = 1;
    std::vector<ExactInt> q(static_cast<std::size_t>(M) + 1);
    for (int t = 0; t < n; ++t) {
        for (auto& x : q) x = 0;
        for (int i = 0; i <= M; ++i) {
            if (p[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= M; ++j) {
                q[static_cast<std::size_t>(i + j)] +=
                    p[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j)];
            }
        }
        p.swap(q);
    }
    ExactInt den = 1;
    {
        const ExactInt f2 = fM * fM;
        for (int t = 1; t < n; ++t) den *= f2;
    }
    const ExactInt num = p[static_cast<std::size_t>(M)];
    if (num % den != 0) throw std::logic_error("sum_multinomials_squared: inexact division");
    return num / den;
}

} // namespace bohr
