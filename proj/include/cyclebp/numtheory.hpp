#pragma once

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace cyclebp {

inline long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Smallest r >= 0 with base^r >= x (x >= 1), i.e. the exact ceiling of
/// log_base(x). Integer comparisons only; boundary values must be exact.
inline int ceil_log(long long base, long long x) {
    if (base < 2 || x < 1) throw std::invalid_argument("ceil_log: need base >= 2, x >= 1");
    int r = 0;
    long long p = 1;
    while (p < x) {
        p *= base;
        ++r;
    }
    return r;
}

/// Frobenius number of two coprime positive integers: xy - x - y.
inline long long frobenius(long long x, long long y) {
    if (x < 1 || y < 1) throw std::invalid_argument("frobenius: generators must be positive");
    if (std::gcd(x, y) != 1) throw std::invalid_argument("frobenius: generators must be coprime");
    return x * y - x - y;
}

/// F(k-2, k) = k^2 - 4k + 2 for odd k.
inline long long F_cycle(int k) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("F_cycle: k must be odd and >= 3");
    return static_cast<long long>(k) * k - 4 * k + 2;
}

/// F'(k-2, k) = 2 F((k-2)/2, k/2) = k^2/2 - 3k + 2 for even k: the largest
/// even integer not representable over {k-2, k}.
inline long long Fprime_cycle(int k) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("Fprime_cycle: k must be even and >= 4");
    return static_cast<long long>(k) * k / 2 - 3 * k + 2;
}

/// A_i = { (k-1)^i - a(k-2) - b k : a,b >= 0 }, restricted to [1, range_max].
/// Membership of v reduces to representability of (k-1)^i - v over the
/// generators {k-2, k}, computed by a linear sieve.
inline std::vector<long long> set_A(int i, int k, long long range_max) {
    if (i < 0 || k < 3 || range_max < 1) throw std::invalid_argument("set_A: bad parameters");
    long long top = ipow(k - 1, i);
    long long dmax = top - 1;
    std::vector<char> rep(dmax + 1, 0);
    rep[0] = 1;
    for (long long d = 1; d <= dmax; ++d)
        rep[d] = (d >= k - 2 && rep[d - (k - 2)]) || (d >= k && rep[d - k]);
    std::vector<long long> vals;
    for (long long v = 1; v <= std::min(top, range_max); ++v)
        if (rep[top - v]) vals.push_back(v);
    return vals;
}

/// A'_i: the subset of A_i with a + b <= (k-1)^{i-2} (k-2); checked via the
/// minimum number of generator summands needed. Degenerate small rounds:
/// A'_0 = {1}, A'_1 = {k-1}.
inline std::vector<long long> set_A_prime(int i, int k, long long range_max) {
    if (i < 0 || k < 3 || range_max < 1) throw std::invalid_argument("set_A_prime: bad parameters");
    if (i == 0) return 1 <= range_max ? std::vector<long long>{1} : std::vector<long long>{};
    if (i == 1) return k - 1 <= range_max ? std::vector<long long>{k - 1} : std::vector<long long>{};
    long long top = ipow(k - 1, i);
    long long cap = ipow(k - 1, i - 2) * (k - 2);
    long long dmax = top - 1;
    constexpr long long kInf = std::numeric_limits<long long>::max() / 2;
    std::vector<long long> need(dmax + 1, kInf);
    need[0] = 0;
    for (long long d = 1; d <= dmax; ++d) {
        if (d >= k - 2) need[d] = std::min(need[d], need[d - (k - 2)] + 1);
        if (d >= k) need[d] = std::min(need[d], need[d - k] + 1);
    }
    std::vector<long long> vals;
    for (long long v = 1; v <= std::min(top, range_max); ++v)
        if (need[top - v] <= cap) vals.push_back(v);
    return vals;
}

/// h-fold sumset { a_1 + ... + a_h : a_j in A }.
inline std::vector<long long> sumset(int h, const std::vector<long long>& a) {
    if (h < 1) throw std::invalid_argument("sumset: h must be >= 1");
    std::set<long long> cur(a.begin(), a.end());
    for (int step = 1; step < h; ++step) {
        std::set<long long> next;
        for (long long x : cur)
            for (long long y : a) next.insert(x + y);
        cur.swap(next);
    }
    return {cur.begin(), cur.end()};
}

/// Dilate { h a : a in A }.
inline std::vector<long long> dilate(int h, const std::vector<long long>& a) {
    if (h < 1) throw std::invalid_argument("dilate: h must be >= 1");
    std::set<long long> vals;
    for (long long x : a) vals.insert(static_cast<long long>(h) * x);
    return {vals.begin(), vals.end()};
}

namespace detail {

inline long long predictor_argument(long long n, int k) {
    if (k < 3) throw std::invalid_argument("predictor: k must be >= 3");
    long long kk = static_cast<long long>(k) * k;
    long long arg = k % 2 ? n + kk - 4 * k + 2 : 2 * n + kk - 5 * k;
    if (arg < 1) throw std::invalid_argument("predictor: logarithm argument not positive");
    return arg;
}

}  // namespace detail

/// The round predictor r(n, k): ceil(log_{k-1}(n + k^2 - 4k + 2)) for odd
/// k, ceil(log_{k-1}(2n + k^2 - 5k)) for even k.
inline int predict_r(long long n, int k) {
    long long arg = detail::predictor_argument(n, k);
    int r = ceil_log(k - 1, arg);
    // r is the unique integer placing n in the corresponding window.
    assert(r == 0 ? arg == 1 : ipow(k - 1, r - 1) < arg && arg <= ipow(k - 1, r));
    return r;
}

/// The arm parameter of the even-k lower-bound witness:
/// ((k-1)^{r-1} - (k-1)) / 2 - F'(k-2, k) - 1.
inline long long predict_ell(int k, int r) {
    if (k % 2 != 0) throw std::invalid_argument("predict_ell: k must be even");
    if (r < 2) throw std::invalid_argument("predict_ell: r must be >= 2");
    return (ipow(k - 1, r - 1) - (k - 1)) / 2 - Fprime_cycle(k) - 1;
}

/// The closed-form maximum running time of the cycle process; coincides
/// with predict_r by construction.
inline int predict_M(long long n, int k) { return predict_r(n, k); }

}  // namespace cyclebp
