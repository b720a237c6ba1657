#include "dilatelab/constructions.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

#include "dilatelab/errors.hpp"
#include "dilatelab/logspace.hpp"
#include "dilatelab/rng.hpp"

namespace dilatelab {

namespace {

long long pow_ll(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(out, base, &out))
            throw std::overflow_error("integer power overflow");
    }
    return out;
}

void enumerate_level(std::int64_t remaining, int coords_left, Point& prefix,
                     std::vector<Point>& out) {
    if (coords_left == 1) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::int64_t v = 0; v <= remaining; ++v) {
        prefix.push_back(v);
        enumerate_level(remaining - v, coords_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

IntSet hypercube_H(int n) {
    if (n < 0 || n > 31) throw std::invalid_argument("hypercube_H: need 0 <= n <= 31");
    check_budget(std::ldexp(1.0, n), "hypercube_H");
    std::vector<Coord> pow4(n);
    for (int i = 0; i < n; ++i) pow4[i] = pow_ll(4, i);
    std::vector<Point> pts;
    pts.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Coord v = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) v += pow4[i];
        pts.push_back(Point{v});
    }
    return IntSet(1, std::move(pts));
}

IntSet interval_I(int k) {
    if (k < 0 || k > 31) throw std::invalid_argument("interval_I: need 0 <= k <= 31");
    const long long r = (pow_ll(4, k) - 1) / 3;
    check_budget(static_cast<double>(r), "interval_I");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(r));
    for (long long v = 0; v < r; ++v) pts.push_back(Point{v});
    return IntSet(1, std::move(pts));
}

IntSet union_A(int n, int k) {
    if (!(n >= k && 2 * k > n + 1)) {
        std::fprintf(stderr,
                     "warning: union family at n=%d k=%d is outside the proven "
                     "size-formula range n >= k > (n+1)/2\n",
                     n, k);
    }
    return hypercube_H(n).united(interval_I(k));
}

IntSet geometric(Coord b, int N) {
    if (N < 0) throw std::invalid_argument("geometric: need N >= 0");
    check_budget(static_cast<double>(N) + 1.0, "geometric");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(N) + 1);
    Coord v = 1;
    for (int i = 0; i <= N; ++i) {
        pts.push_back(Point{v});
        if (i < N) v = checked_mul(v, b);
    }
    return IntSet(1, std::move(pts));
}

IntSet sidon_greedy(int m) {
    if (m < 0) throw std::invalid_argument("sidon_greedy: need m >= 0");
    check_budget(static_cast<double>(m) * m, "sidon_greedy pairwise sums");
    std::vector<Coord> terms;
    std::unordered_set<Coord> sums;  // all a + b with a <= b over current terms
    Coord candidate = 0;
    while (static_cast<int>(terms.size()) < m) {
        bool ok = !sums.count(2 * candidate);
        for (std::size_t i = 0; ok && i < terms.size(); ++i)
            ok = !sums.count(terms[i] + candidate);
        if (ok) {
            for (Coord t : terms) sums.insert(t + candidate);
            sums.insert(2 * candidate);
            terms.push_back(candidate);
        }
        ++candidate;
    }
    return IntSet::of_ints(std::move(terms));
}

IntSet hry(const HRYParams& params) {
    if (params.k < 0 || params.d < 1)
        throw std::invalid_argument("hry: need k >= 0 and d >= 1");
    const double count = std::exp(log_binomial(
        static_cast<double>(params.k + params.d), static_cast<double>(params.d)));
    check_budget(count, "hry level-set enumeration");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count) + 1);
    Point prefix;
    prefix.reserve(static_cast<std::size_t>(params.d) + 1);
    enumerate_level(params.k, static_cast<int>(params.d) + 1, prefix, pts);
    return IntSet(static_cast<int>(params.d) + 1, std::move(pts));
}

std::vector<IntSet> hypercube_subsets(int n, SubsetMode mode, std::size_t count,
                                      std::uint64_t seed) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("hypercube_subsets: need 1 <= n <= 4");
    const std::size_t points = std::size_t{1} << n;
    std::vector<Point> cube;
    cube.reserve(points);
    for (std::uint64_t mask = 0; mask < points; ++mask) {
        Point p(n);
        for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1;
        cube.push_back(std::move(p));
    }
    std::vector<IntSet> out;
    if (mode == SubsetMode::exhaustive) {
        const std::size_t subsets = std::size_t{1} << points;
        check_budget(static_cast<double>(subsets), "hypercube_subsets exhaustive sweep");
        out.reserve(subsets);
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            std::vector<Point> pts;
            for (std::size_t i = 0; i < points; ++i)
                if (mask & (std::uint64_t{1} << i)) pts.push_back(cube[i]);
            out.emplace_back(n, std::move(pts));
        }
    } else {
        out.reserve(count);
        for (std::size_t s = 0; s < count; ++s) {
            std::vector<Point> pts;
            for (std::size_t i = 0; i < points; ++i)
                if (counter_word(seed, s, i) & 1) pts.push_back(cube[i]);
            out.emplace_back(n, std::move(pts));
        }
    }
    return out;
}

UnionSumSizes union_sum_sizes(int n, int k) {
    if (!(1 <= k && k <= n && n <= 31))
        throw std::invalid_argument("union_sum_sizes: need 1 <= k <= n <= 31");
    UnionSumSizes s;
    s.r_k = (pow_ll(4, k) - 1) / 3;
    s.size_h = pow_ll(2, n);
    s.size_i = s.r_k;
    s.size_a = s.size_h + s.r_k - pow_ll(2, k) + 1;
    s.inter_hi = pow_ll(2, k) - 1;
    s.sum_hh = pow_ll(3, n);
    s.sum_h2h = pow_ll(4, n);
    s.sum_hi = 2 * s.r_k * pow_ll(2, n - k);
    s.sum_ii = 2 * s.r_k - 1;
    s.sum_i2i = pow_ll(4, k) - 3;
    s.sum_h2i = pow_ll(2, n + 1 - k) * (2 * pow_ll(4, k - 1) - 1);
    s.sum_i2h = s.sum_h2i;
    s.sum_aa = s.sum_hh + pow_ll(2, n - k) * (2 * s.r_k - pow_ll(3, k) + 1);
    s.sum_a2a = pow_ll(4, n);
    return s;
}

UnionLogSizes union_log_sizes(std::int64_t n, std::int64_t k) {
    if (!(1 <= k && k <= n))
        throw std::invalid_argument("union_log_sizes: need 1 <= k <= n");
    const double L2 = std::log(2.0), L3 = std::log(3.0);
    const auto dn = static_cast<double>(n), dk = static_cast<double>(k);
    UnionLogSizes out;
    // |A| = 2^n + (4^k - 3*2^k + 2) / 3
    out.log_a = signed_log_sum({{+1, dn * L2},
                                {+1, 2.0 * dk * L2 - L3},
                                {-1, dk * L2},
                                {+1, L2 - L3}});
    // |A+A| = 3^n + (2^{n+k+1} - 2^{n-k} 3^{k+1} + 2^{n-k}) / 3
    out.log_aa = signed_log_sum({{+1, dn * L3},
                                 {+1, (dn + dk + 1.0) * L2 - L3},
                                 {-1, (dn - dk) * L2 + dk * L3},
                                 {+1, (dn - dk) * L2 - L3}});
    out.log_a2a = dn * std::log(4.0);
    return out;
}

}  // namespace dilatelab
