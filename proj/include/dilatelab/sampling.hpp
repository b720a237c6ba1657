#pragma once

// Probabilistic model: S_n keeps each word of supp(gamma)^n independently
// with probability prod_i gamma(s_i) (weights clipped into [0,1] are the
// caller's responsibility — draw_from_power validates). Exact expectations
// where tractable, Monte Carlo estimates elsewhere; all estimators are
// bit-reproducible for a fixed seed regardless of thread count.

#include <cstdint>
#include <optional>
#include <vector>

#include "dilatelab/fractional.hpp"
#include "dilatelab/int_set.hpp"

namespace dilatelab {

struct Stat {
    double mean = 0.0;
    double variance = 0.0;    // unbiased sample variance
    double std_error = 0.0;   // sqrt(variance / trials)
};

struct SampleStats {
    std::size_t trials = 0;
    Stat set_size;        // |S_n| (or |S'_n| via an independent copy)
    Stat sum_size;        // |S_n + k T_n|
    Stat restricted_sum;  // |S_n +^< S_n| when same_set && k == 1, else 0
    Stat nonempty;        // indicator S_n nonempty
};

// One random sample of S_n under alpha^{tensor n}: each word of supp(alpha)^n
// enters independently with probability prod alpha(s_i). All weights must lie
// in (0, 1]. Word count |supp|^n is charged against the element budget.
IntSet draw_from_power(const FractionalDilate& alpha, int n, std::uint64_t seed,
                       std::uint64_t stream = 0);

// Exact Pr(S_n is nonempty) = 1 - prod_words (1 - prod alpha(s_i)).
double prob_nonempty(const FractionalDilate& alpha, int n);

// Exact E|S + k T| for independent S ~ alpha^n, T ~ beta^n and k != 0. With
// k nonzero the events "(a, b) contributes x" over distinct decompositions of
// x involve distinct coordinates in at least one factor, making the presence
// events across decompositions independent; the expectation is then
//   sum_x [ 1 - prod_{a + k b = x} (1 - Pr(a) Pr(b)) ].
// Throws std::invalid_argument for k == 0; enumeration is capped at 1e6
// candidate points via the element budget.
double exact_expected_sumset_size(const FractionalDilate& alpha, Coord k,
                                  const FractionalDilate& beta, int n);

// Exact E|S - S| for S ~ alpha^n (the same set on both sides, k = -1).
// Presence events along each fiber {x : x - v constant} form a Markov chain
// under the shift a |-> a - v; the expectation is computed by dynamic
// programming over those chains. v = 0 contributes Pr(S nonempty).
double exact_expected_same_diff_size(const FractionalDilate& alpha, int n);

// Exact E|S|^2 for S ~ alpha^n: (sum pi)^2 + sum pi - sum pi^2 over word
// probabilities pi.
double exact_expected_size_squared(const FractionalDilate& alpha, int n);

// Monte Carlo estimates over `trials` independent samples. If same_set, the
// dilate is S_n + k S_n (and additionally S_n +^< S_n when k == 1); otherwise
// an independent T_n is drawn from the same law. Trials are indexed and can
// be evaluated on any number of threads; reduction order is fixed by trial
// index, so results are identical for every thread count.
SampleStats estimate_sizes(const FractionalDilate& alpha, Coord k, int n,
                           std::size_t trials, std::uint64_t seed, bool same_set);

// As above with S_n ~ alpha^n and an independent T_n ~ beta^n (distinct laws;
// no same-set pairing). set_size reports |S_n|.
SampleStats estimate_sizes(const FractionalDilate& alpha, Coord k,
                           const FractionalDilate& beta, int n,
                           std::size_t trials, std::uint64_t seed);

// Restrict V to its "rainbow" words: those whose coordinates cover every
// element of `support` at least once.
std::vector<Point> rainbow_filter(const std::vector<Point>& words,
                                  const IntSet& support);

// Rainbow-restricted Monte Carlo mean of |rainbow(S_n + k T_n)| with either
// the same-set or independent pairing; used to compare the two pairings on
// the subfamily of fully-mixed words.
struct RainbowComparison {
    Stat same_set;
    Stat independent;
    std::size_t rainbow_word_count = 0;  // |rainbow(supp(alpha + k alpha)^n)|
};

RainbowComparison rainbow_comparison(const FractionalDilate& alpha, Coord k,
                                     int n, std::size_t trials,
                                     std::uint64_t seed);

}  // namespace dilatelab
