#pragma once

// Generators for the explicit set families used throughout: base-4 subset
// sums ("hypercube" sets), integer intervals, their unions, geometric
// progressions, greedy Sidon sets, level sets of the simplex, and subsets of
// the Boolean hypercube.

#include <cstdint>
#include <vector>

#include "dilatelab/int_set.hpp"

namespace dilatelab {

// H_n = { sum_i a_i 4^i : a_i in {0,1}, 0 <= i < n }, size 2^n. n <= 31.
IntSet hypercube_H(int n);

// I_k = [0, (4^k - 1)/3) as integers, size (4^k - 1)/3. k <= 31.
IntSet interval_I(int k);

// A_{n,k} = H_n union I_k. The size formulas proven for this family assume
// n >= k > (n+1)/2; outside that range the union is still returned but a
// warning is emitted on stderr.
IntSet union_A(int n, int k);

// {1, b, b^2, ..., b^N}; all powers must fit in 64 bits.
IntSet geometric(Coord b, int N);

// First m terms of the greedy Sidon sequence starting at 0 (0, 1, 3, 7, 12,
// 20, ...): each new term is the least integer keeping all pairwise sums
// a + b (a <= b) distinct. Every prefix satisfies |S+S| = m(m+1)/2 and
// |S-S| = m^2 - m + 1.
IntSet sidon_greedy(int m);

struct HRYParams {
    std::int64_t k;  // level sum, >= 0
    std::int64_t d;  // tuples live in Z^(d+1), d >= 1
};

// All nonnegative (d+1)-tuples summing to exactly k; size C(k+d, d). Throws
// budget_error when the count exceeds the element budget.
IntSet hry(const HRYParams& params);

enum class SubsetMode { exhaustive, random };

// Subsets of {0,1}^n as dimension-n sets. Exhaustive mode emits all 2^(2^n)
// subsets and requires n <= 4; random mode emits `count` subsets, each point
// included independently with probability 1/2, deterministically from seed.
std::vector<IntSet> hypercube_subsets(int n, SubsetMode mode, std::size_t count,
                                      std::uint64_t seed);

// Exact sizes of H_n, I_k, A = H_n ∪ I_k and their sums/dilates. The union
// formulas (size_a, sum_aa) are proven for n >= k > (n+1)/2 and are evaluated
// formally outside that range; everything must fit in 64 bits (n, k <= 31).
struct UnionSumSizes {
    long long r_k = 0;       // |I_k| = (4^k - 1) / 3
    long long size_h = 0;    // |H_n| = 2^n
    long long size_i = 0;    // |I_k| = r_k
    long long size_a = 0;    // |A| = 2^n + r_k - 2^k + 1
    long long inter_hi = 0;  // |H ∩ I| = 2^k - 1
    long long sum_hh = 0;    // |H+H| = 3^n
    long long sum_h2h = 0;   // |H+2H| = 4^n
    long long sum_hi = 0;    // |H+I| = 2 r_k 2^{n-k}
    long long sum_ii = 0;    // |I+I| = 2 r_k - 1
    long long sum_i2i = 0;   // |I+2I| = 4^k - 3
    long long sum_h2i = 0;   // |H+2I| = 2^{n+1-k} (2 4^{k-1} - 1)
    long long sum_i2h = 0;   // |I+2H| = same value as sum_h2i
    long long sum_aa = 0;    // |A+A| = 3^n + 2^{n-k} (2 r_k - 3^k + 1)
    long long sum_a2a = 0;   // |A+2A| = 4^n
};

UnionSumSizes union_sum_sizes(int n, int k);

// ln|A|, ln|A+A|, ln|A+2A| for the same family at sizes far beyond 64 bits,
// combined term by term in log space (no closed form is approximated away).
struct UnionLogSizes {
    double log_a = 0.0;
    double log_aa = 0.0;
    double log_a2a = 0.0;
};

UnionLogSizes union_log_sizes(std::int64_t n, std::int64_t k);

}  // namespace dilatelab
