#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "dilatelab/fractional.hpp"
#include "dilatelab/core_sets.hpp"
#include "dilatelab/int_set.hpp"
#include "dilatelab/rng.hpp"

using namespace dilatelab;

namespace {

FractionalDilate random_dilate(std::uint64_t seed, std::uint64_t stream,
                               double weight_lo, double weight_hi) {
    const std::uint64_t word = counter_word(seed, stream, 0);
    const int support = 2 + static_cast<int>(word % 7);
    std::set<Coord> points;
    for (int i = 0; points.size() < static_cast<std::size_t>(support); ++i)
        points.insert(static_cast<Coord>(counter_word(seed, stream, 100 + i) % 31) - 15);
    std::vector<std::pair<Coord, double>> entries;
    int i = 0;
    for (Coord p : points) {
        const double u = counter_uniform(seed, stream, 200 + i++);
        entries.emplace_back(p, weight_lo + (weight_hi - weight_lo) * u);
    }
    return FractionalDilate::of_ints(std::move(entries));
}

int regime_rank(Regime r) {
    switch (r) {
        case Regime::spartan: return 0;
        case Regime::comfortable: return 1;
        case Regime::opulent: return 2;
    }
    return -1;
}

}  // namespace

TEST_CASE("construction, accessors, and validation") {
    const FractionalDilate g = FractionalDilate::of_ints({{3, 0.25}, {0, 2.0}});
    CHECK(g.dimension() == 1);
    CHECK(g.support_size() == 2);
    CHECK(g.weight_at({0}) == doctest::Approx(2.0));
    CHECK(g.weight_at({3}) == doctest::Approx(0.25));
    CHECK(g.weight_at({1}) == 0.0);
    CHECK(g.total_mass() == doctest::Approx(2.25));
    CHECK(g.support() == IntSet::of_ints({0, 3}));

    CHECK_THROWS_AS(FractionalDilate::of_ints({{0, 1.0}, {0, 2.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(FractionalDilate::of_ints({{0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(FractionalDilate::of_ints({{0, -1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(FractionalDilate(0), std::invalid_argument);

    const IntSet s = IntSet::of_ints({0, 1, 3});
    const FractionalDilate u = FractionalDilate::uniform(s, 0.5);
    CHECK(u.support() == s);
    for (const auto& [p, w] : u.entries()) CHECK(w == doctest::Approx(0.5));
}

TEST_CASE("interior minimum with a closed form") {
    // f(p) = 2^p + 4^{-p} has its minimum at p = 1/3 with value 1.5 * 2^{1/3}.
    const NormResult r = norm(FractionalDilate::of_ints({{0, 2.0}, {1, 0.25}}));
    CHECK(r.regime == Regime::comfortable);
    CHECK(std::fabs(r.p_star - 1.0 / 3.0) <= 1e-9);
    CHECK(std::fabs(r.value - 1.5 * std::cbrt(2.0)) <= 1e-9);
    CHECK(std::fabs(r.value - 1.889881574842) <= 1e-9);
}

TEST_CASE("regimes of the uniform self-sum on {0, 1, 3}") {
    const IntSet a = IntSet::of_ints({0, 1, 3});
    auto self_sum = [&](double q) {
        const FractionalDilate alpha = uniform_dilate(a, q);
        return norm(convolve(alpha, 1, alpha));
    };

    // The sum multiplicities are three 2s and three 1s, so the p = 1
    // derivative vanishes at q = 2^{-1/3} and the p = 0 one at q = 2^{-1/4}.
    const double q_lo = std::pow(2.0, -1.0 / 3.0);
    const double q_hi = std::pow(2.0, -0.25);
    CHECK(std::fabs(q_lo - 0.7937005260) <= 1e-9);
    CHECK(std::fabs(q_hi - 0.8408964153) <= 1e-9);

    const NormResult sp = self_sum(0.79);
    CHECK(sp.regime == Regime::spartan);
    CHECK(sp.p_star == 1.0);
    CHECK(std::fabs(sp.value - 9.0 * 0.79 * 0.79) <= 1e-9);

    const NormResult op = self_sum(0.85);
    CHECK(op.regime == Regime::opulent);
    CHECK(op.p_star == 0.0);
    CHECK(std::fabs(op.value - 6.0) <= 1e-9);

    const NormResult mid = self_sum(0.82);
    CHECK(mid.regime == Regime::comfortable);
    CHECK(std::fabs(mid.p_star - 0.421990128517) <= 1e-6);
    CHECK(std::fabs(mid.value - 5.936846759632) <= 1e-9);
    CHECK(mid.value < 9.0 * 0.82 * 0.82);
    CHECK(mid.value < 6.0);

    // Exactly on the boundary both endpoint derivatives tie to comfortable.
    const NormResult tie = self_sum(q_lo);
    CHECK(tie.regime == Regime::comfortable);
    CHECK(std::fabs(tie.p_star - 1.0) <= 1e-6);
    CHECK(std::fabs(tie.value - 9.0 * q_lo * q_lo) <= 1e-9);

    // Nudging past the opulent boundary flips the regime; just inside it the
    // minimum sits at a tiny interior p with value slightly below 6.
    const NormResult above = self_sum(q_hi + 1e-6);
    CHECK(above.regime == Regime::opulent);
    CHECK(std::fabs(above.value - 6.0) <= 1e-9);
    const NormResult below = self_sum(q_hi - 1e-6);
    CHECK(below.regime == Regime::comfortable);
    CHECK(below.p_star > 0.0);
    CHECK(below.p_star < 1e-4);
    CHECK(std::fabs(below.value - 5.999999999858713) <= 1e-9);
}

TEST_CASE("regimes of the uniform self-difference on {0, 1, 3}") {
    const IntSet a = IntSet::of_ints({0, 1, 3});
    auto self_diff = [&](double q) {
        const FractionalDilate alpha = uniform_dilate(a, q);
        return norm(convolve(alpha, -1, alpha));
    };

    // Difference multiplicities: one 3 (at zero) and six 1s, giving
    // boundaries 3^{-1/6} and 3^{-1/14}.
    CHECK(std::fabs(std::pow(3.0, -1.0 / 6.0) - 0.8326831777) <= 1e-9);
    CHECK(std::fabs(std::pow(3.0, -1.0 / 14.0) - 0.9245276631) <= 1e-9);

    const NormResult sp = self_diff(0.83);
    CHECK(sp.regime == Regime::spartan);
    CHECK(std::fabs(sp.value - 9.0 * 0.83 * 0.83) <= 1e-9);

    const NormResult op = self_diff(0.93);
    CHECK(op.regime == Regime::opulent);
    CHECK(std::fabs(op.value - 7.0) <= 1e-9);

    const NormResult mid = self_diff(0.88);
    CHECK(mid.regime == Regime::comfortable);
    CHECK(mid.p_star > 0.0);
    CHECK(mid.p_star < 1.0);
    CHECK(mid.value < 9.0 * 0.88 * 0.88);
    CHECK(mid.value < 7.0);
}

TEST_CASE("entropy bound never exceeds the norm and is tight at y*") {
    std::vector<FractionalDilate> corpus;
    corpus.push_back(FractionalDilate::of_ints({{0, 2.0}, {1, 0.25}}));
    const IntSet a = IntSet::of_ints({0, 1, 3});
    corpus.push_back(convolve(uniform_dilate(a, 0.82), 1, uniform_dilate(a, 0.82)));
    for (std::uint64_t t = 0; t < 30; ++t)
        corpus.push_back(random_dilate(41, t, 0.1, 5.0));

    for (std::size_t c = 0; c < corpus.size(); ++c) {
        const FractionalDilate& g = corpus[c];
        const NormResult r = norm(g);

        const std::vector<double> ystar = optimal_entropy_weights(g);
        CHECK(std::fabs(entropy_bound(g, ystar) - r.value) <= 1e-9);

        const std::size_t n = g.support_size();
        for (std::uint64_t trial = 0; trial < 50; ++trial) {
            std::vector<double> y(n);
            double total = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double u =
                    counter_uniform(97, 1000 * c + trial, i);
                y[i] = -std::log1p(-u);
                total += y[i];
            }
            for (double& v : y) v /= total;
            CHECK(entropy_bound(g, y) <= r.value + 1e-9);
        }
    }

    const FractionalDilate g = corpus.front();
    CHECK_THROWS_AS(entropy_bound(g, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(entropy_bound(g, {0.7, 0.7}), std::invalid_argument);
    CHECK_THROWS_AS(entropy_bound(g, {1.5, -0.5}), std::invalid_argument);
}

TEST_CASE("scaling weights up never moves a regime toward spartan") {
    // With every weight already >= 1, multiplying by c > 1 can only increase
    // both endpoint derivatives of f(p) = sum gamma^p.
    for (std::uint64_t t = 0; t < 50; ++t) {
        const FractionalDilate g = random_dilate(53, t, 1.0, 5.0);
        const int before = regime_rank(classify(g));
        for (double c : {1.0 + 1e-9, 1.5, 2.0, 10.0}) {
            std::vector<std::pair<Point, double>> scaled;
            for (const auto& [p, w] : g.entries()) scaled.emplace_back(p, c * w);
            const FractionalDilate h(g.dimension(), std::move(scaled));
            CHECK(regime_rank(classify(h)) >= before);
        }
    }

    // The constant-1 dilate is a boundary tie; any upscale makes it opulent.
    const FractionalDilate ones =
        FractionalDilate::of_ints({{0, 1.0}, {1, 1.0}});
    CHECK(classify(ones) == Regime::comfortable);
    const FractionalDilate doubled =
        FractionalDilate::of_ints({{0, 2.0}, {1, 2.0}});
    CHECK(classify(doubled) == Regime::opulent);
}

TEST_CASE("uniform dilate rejects weights outside (0, 1)") {
    const IntSet s = IntSet::of_ints({0, 1});
    CHECK_THROWS_AS(uniform_dilate(s, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(uniform_dilate(s, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(uniform_dilate(s, -0.5), std::invalid_argument);
    CHECK(uniform_dilate(s, 0.5).total_mass() == doctest::Approx(1.0));
}

TEST_CASE("piecewise spectrum norm matches direct evaluation") {
    // Anchor: the sum spectrum of {0, 1, 3} has three fibers of size 2 and
    // three of size 1 over M = 3 elements.
    PiecewiseNormInput in;
    in.spectrum = {{2.0, 3.0}, {1.0, 3.0}};
    in.M = 3.0;

    in.q = 0.82;
    const NormResult mid = ruzsa_piecewise_norm(in);
    CHECK(mid.regime == Regime::comfortable);
    CHECK(std::fabs(mid.p_star - 0.421990128517) <= 1e-6);
    CHECK(std::fabs(mid.value - 5.936846759632) <= 1e-9);

    in.q = 0.9;
    const NormResult op = ruzsa_piecewise_norm(in);
    CHECK(op.regime == Regime::opulent);
    CHECK(std::fabs(op.value - 6.0) <= 1e-9);

    in.q = 1e-6;
    const NormResult sp = ruzsa_piecewise_norm(in);
    CHECK(sp.regime == Regime::spartan);
    CHECK(std::fabs(sp.value - 9e-12) <= 1e-20);

    PiecewiseNormInput bad = in;
    bad.spectrum = {{2.0, 3.0}, {1.0, 4.0}};
    CHECK_THROWS_AS(ruzsa_piecewise_norm(bad), std::invalid_argument);

    // Spectrum path vs. full convolution path on random uniform dilates.
    for (std::uint64_t t = 0; t < 20; ++t) {
        std::set<Coord> points;
        for (int i = 0; points.size() < 4; ++i)
            points.insert(static_cast<Coord>(counter_word(61, t, i) % 19) - 9);
        const IntSet base =
            IntSet::of_ints(std::vector<Coord>(points.begin(), points.end()));
        const double q = 0.05 + 0.9 * counter_uniform(61, t, 50);

        const MultiplicityMap mult = multiplicity_map(base, 1, base);
        std::map<double, double> counts;
        for (const auto& [point, c] : mult.entries())
            counts[static_cast<double>(c)] += 1.0;
        PiecewiseNormInput pw;
        for (const auto& [lambda, count] : counts)
            pw.spectrum.emplace_back(lambda, count);
        pw.M = static_cast<double>(base.size());
        pw.q = q;

        const NormResult via_spectrum = ruzsa_piecewise_norm(pw);
        const FractionalDilate alpha = uniform_dilate(base, q);
        const NormResult direct = norm(convolve(alpha, 1, alpha));
        CHECK(via_spectrum.regime == direct.regime);
        CHECK(std::fabs(via_spectrum.value - direct.value) <=
              1e-9 * (1.0 + direct.value));
        CHECK(std::fabs(via_spectrum.p_star - direct.p_star) <= 1e-6);
    }
}
