#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "dilatelab/core_sets.hpp"
#include "dilatelab/errors.hpp"
#include "dilatelab/fractional.hpp"
#include "dilatelab/int_set.hpp"
#include "dilatelab/sampling.hpp"

using namespace dilatelab;

namespace {

// All words of supp(alpha)^n (1-d alpha) as points of Z^n with their keep
// probabilities; this is the sample space of a single draw.
struct WordTable {
    std::vector<Point> words;
    std::vector<double> probs;
};

WordTable enumerate_words(const FractionalDilate& alpha, int n) {
    WordTable out;
    const auto& entries = alpha.entries();
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
        Point word;
        double prob = 1.0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            word.push_back(entries[idx[i]].first[0]);
            prob *= entries[idx[i]].second;
        }
        out.words.push_back(std::move(word));
        out.probs.push_back(prob);
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == entries.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return out;
}

// E|S - S| by summing over every subset of the word list (exponential; only
// for word counts <= ~12).
double brute_expected_same_diff(const WordTable& w) {
    const std::size_t m = w.words.size();
    double expect = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        double prob = 1.0;
        std::set<Point> kept;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) {
                prob *= w.probs[i];
                kept.insert(w.words[i]);
            } else {
                prob *= 1.0 - w.probs[i];
            }
        }
        std::set<Point> diffs;
        for (const Point& a : kept)
            for (const Point& b : kept) {
                Point d(a.size());
                for (std::size_t c = 0; c < a.size(); ++c) d[c] = a[c] - b[c];
                diffs.insert(std::move(d));
            }
        expect += prob * static_cast<double>(diffs.size());
    }
    return expect;
}

// E[(number of retained words)^2] by the same subset enumeration.
double brute_expected_count_squared(const WordTable& w) {
    const std::size_t m = w.words.size();
    double expect = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        double prob = 1.0;
        int kept = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) {
                prob *= w.probs[i];
                ++kept;
            } else {
                prob *= 1.0 - w.probs[i];
            }
        }
        expect += prob * static_cast<double>(kept) * static_cast<double>(kept);
    }
    return expect;
}

bool close_rel(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * (1.0 + std::fabs(b));
}

}  // namespace

TEST_CASE("single draws are deterministic and live in the word-sum set") {
    const FractionalDilate alpha =
        uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.6);
    const IntSet a = draw_from_power(alpha, 3, 99, 0);
    CHECK(a == draw_from_power(alpha, 3, 99, 0));

    bool any_different = false;
    for (std::uint64_t stream = 1; stream <= 5; ++stream)
        if (!(draw_from_power(alpha, 3, 99, stream) == a)) any_different = true;
    CHECK(any_different);

    // A draw is a set of words: dimension n, every letter from the support.
    CHECK(a.dimension() == 3);
    const IntSet supp = alpha.support();
    for (const Point& p : a.elements()) {
        REQUIRE(p.size() == 3);
        for (Coord letter : p) CHECK(supp.contains({letter}));
    }

    CHECK_THROWS_AS(
        draw_from_power(FractionalDilate::of_ints({{0, 1.5}}), 2, 1),
        std::invalid_argument);
}

TEST_CASE("nonempty probability is exact and increasing") {
    const FractionalDilate alpha =
        uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.5);
    CHECK(std::fabs(prob_nonempty(alpha, 1) - 0.875) <= 1e-12);
    double prev = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const double p = prob_nonempty(alpha, n);
        CHECK(p >= prev);
        CHECK(p <= 1.0);
        prev = p;
    }
    CHECK(prev >= 1.0 - 1e-12);
}

TEST_CASE("exact expected dilate sizes for independent draws") {
    const FractionalDilate alpha =
        uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.6);

    const double k1[] = {2.851200000000, 9.364101645179, 31.309792269698,
                         104.281160415333, 344.678876880};
    for (int n = 1; n <= 5; ++n)
        CHECK(close_rel(exact_expected_sumset_size(alpha, 1, alpha, n),
                        k1[n - 1], 1e-9));

    const double k2[] = {3.110400000000, 10.170101818353, 33.370811813259,
                         109.075216475336};
    const double km1[] = {2.897856000000, 9.465931736451, 31.515687990351,
                          104.673586745984};
    for (int n = 1; n <= 4; ++n) {
        CHECK(close_rel(exact_expected_sumset_size(alpha, 2, alpha, n),
                        k2[n - 1], 1e-9));
        CHECK(close_rel(exact_expected_sumset_size(alpha, -1, alpha, n),
                        km1[n - 1], 1e-9));
    }

    // E^{1/n} climbs toward the norm of the self-sum (here 9q^2 = 3.24).
    double prev = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const double root = std::pow(k1[n - 1], 1.0 / n);
        CHECK(root > prev);
        CHECK(root < 3.24);
        prev = root;
    }

    CHECK_THROWS_AS(exact_expected_sumset_size(alpha, 0, alpha, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_expected_sumset_size(alpha, 1, alpha, 13),
                    budget_error);
}

TEST_CASE("same-set difference expectation matches subset enumeration") {
    const FractionalDilate skew =
        FractionalDilate::of_ints({{0, 0.3}, {1, 0.7}, {5, 0.45}});
    CHECK(close_rel(exact_expected_same_diff_size(skew, 1),
                    brute_expected_same_diff(enumerate_words(skew, 1)), 1e-12));

    const FractionalDilate alpha =
        uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.6);
    CHECK(close_rel(exact_expected_same_diff_size(alpha, 2),
                    brute_expected_same_diff(enumerate_words(alpha, 2)),
                    1e-12));

    const double q = 0.98 * std::pow(3.0, -1.0 / 6.0);
    const FractionalDilate near =
        uniform_dilate(IntSet::of_ints({0, 1, 3}), q);
    const double expected[] = {4.989198500526, 26.894445480256,
                               152.210722948720};
    for (int n = 1; n <= 3; ++n)
        CHECK(close_rel(exact_expected_same_diff_size(near, n),
                        expected[n - 1], 1e-9));
}

TEST_CASE("second moment of the retained-word count") {
    const FractionalDilate skew =
        FractionalDilate::of_ints({{0, 0.3}, {1, 0.7}, {5, 0.45}});
    CHECK(close_rel(exact_expected_size_squared(skew, 2),
                    brute_expected_count_squared(enumerate_words(skew, 2)),
                    1e-12));

    const double q = 0.98 * std::pow(3.0, -1.0 / 6.0);
    const FractionalDilate near =
        uniform_dilate(IntSet::of_ints({0, 1, 3}), q);
    const double second[] = {6.44351355, 37.91997949, 221.95884840,
                             1310.07174560, 7787.74496198};
    for (int n = 1; n <= 5; ++n)
        CHECK(close_rel(exact_expected_size_squared(near, n), second[n - 1],
                        1e-9));

    // Concentration ratios (E|S_n|^2 - E|S_n - S_n|) / (3q)^{2n} at this q
    // increase with n; at q = 0.7 they decrease from n = 2 on.
    double prev = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const double ratio = (exact_expected_size_squared(near, n) -
                              exact_expected_same_diff_size(near, n)) /
                             std::pow(3.0 * q, 2.0 * n);
        CHECK(ratio > prev);
        prev = ratio;
    }

    const FractionalDilate lower =
        uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.7);
    const double low_ratios[] = {0.255555555556, 0.273629150342,
                                 0.226941744644, 0.179078088132,
                                 0.141224065329};
    for (int n = 1; n <= 5; ++n) {
        const double ratio = (exact_expected_size_squared(lower, n) -
                              exact_expected_same_diff_size(lower, n)) /
                             std::pow(3.0 * 0.7, 2.0 * n);
        CHECK(std::fabs(ratio - low_ratios[n - 1]) <= 1e-9);
        if (n >= 3) CHECK(ratio < low_ratios[n - 2]);
    }
}

TEST_CASE("Monte Carlo estimates agree with exact expectations") {
    const FractionalDilate alpha =
        uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.6);

    const SampleStats indep = estimate_sizes(alpha, 1, 2, 4000, 11, false);
    CHECK(indep.trials == 4000);
    const double exact_sum = exact_expected_sumset_size(alpha, 1, alpha, 2);
    CHECK(std::fabs(indep.sum_size.mean - exact_sum) <=
          4.0 * indep.sum_size.std_error + 1e-9);
    CHECK(std::fabs(indep.nonempty.mean - prob_nonempty(alpha, 2)) <=
          4.0 * indep.nonempty.std_error + 1e-9);
    CHECK(indep.restricted_sum.mean == 0.0);

    const SampleStats diff = estimate_sizes(alpha, -1, 2, 4000, 12, true);
    CHECK(std::fabs(diff.sum_size.mean - exact_expected_same_diff_size(alpha, 2)) <=
          4.0 * diff.sum_size.std_error + 1e-9);

    // Same-law reruns with the same seed reproduce bit-for-bit.
    const SampleStats again = estimate_sizes(alpha, -1, 2, 4000, 12, true);
    CHECK(again.sum_size.mean == diff.sum_size.mean);
    CHECK(again.sum_size.variance == diff.sum_size.variance);
}

TEST_CASE("restricted sums in the same-set pairing") {
    const FractionalDilate alpha =
        uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.6);
    const SampleStats stats = estimate_sizes(alpha, 1, 2, 2000, 21, true);
    CHECK(stats.restricted_sum.std_error > 0.0);

    // Hand-rolled replica of the same statistic from independent draws.
    double total = 0.0, total_sq = 0.0;
    const std::size_t trials = 2000;
    for (std::size_t t = 0; t < trials; ++t) {
        const IntSet s = draw_from_power(alpha, 2, 77, t);
        const double v =
            static_cast<double>(restricted_sum_less(s, s).size());
        total += v;
        total_sq += v * v;

        // Pathwise: s + s is covered by the order-restricted sum plus the
        // doubles {2x : x in s}.
        CHECK(dilate_sum(s, 1, s).size() <=
              restricted_sum_less(s, s).size() + s.size());
    }
    const double mean = total / trials;
    const double var =
        (total_sq - trials * mean * mean) / (trials - 1.0);
    const double se = std::sqrt(var / trials);
    const double gap = std::fabs(stats.restricted_sum.mean - mean);
    CHECK(gap <= 4.0 * (stats.restricted_sum.std_error + se) + 1e-9);
}

TEST_CASE("two independent laws") {
    const FractionalDilate alpha =
        uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.6);
    const FractionalDilate beta =
        uniform_dilate(IntSet::of_ints({0, 2}), 0.5);

    const SampleStats stats = estimate_sizes(alpha, 1, beta, 2, 4000, 13);
    const double exact_sum = exact_expected_sumset_size(alpha, 1, beta, 2);
    CHECK(std::fabs(stats.sum_size.mean - exact_sum) <=
          4.0 * stats.sum_size.std_error + 1e-9);
    CHECK(stats.restricted_sum.mean == 0.0);

    const FractionalDilate planar(
        2, {{Point{0, 0}, 0.5}, {Point{1, 1}, 0.5}});
    CHECK_THROWS_AS(estimate_sizes(alpha, 1, planar, 2, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("rainbow words") {
    const std::vector<Point> words = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const auto kept = rainbow_filter(words, IntSet::of_ints({0, 1}));
    REQUIRE(kept.size() == 2);
    CHECK(kept[0] == Point{0, 1});
    CHECK(kept[1] == Point{1, 0});

    // Alphabet {0,1,2,3} with words of length 6: 1560 onto words.
    const FractionalDilate pair =
        uniform_dilate(IntSet::of_ints({0, 1}), 0.7);
    const RainbowComparison rc = rainbow_comparison(pair, 2, 6, 3000, 17);
    CHECK(rc.rainbow_word_count == 1560);
    CHECK(std::fabs(rc.independent.mean - 21.592408033560) <=
          4.0 * rc.independent.std_error + 1e-9);
    const double pooled =
        std::sqrt(rc.same_set.std_error * rc.same_set.std_error +
                  rc.independent.std_error * rc.independent.std_error);
    CHECK(std::fabs(rc.same_set.mean - rc.independent.mean) <= 4.0 * pooled);

    // Alphabet {0,1,2,3,5,6,7,9} has more letters than word positions, so no
    // word can be onto.
    const FractionalDilate triple =
        uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.6);
    const RainbowComparison empty = rainbow_comparison(triple, 2, 6, 200, 18);
    CHECK(empty.rainbow_word_count == 0);
    CHECK(empty.same_set.mean == 0.0);
    CHECK(empty.independent.mean == 0.0);
}
