#include "dilatelab/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dilatelab/bounds.hpp"
#include "dilatelab/constructions.hpp"
#include "dilatelab/core_sets.hpp"
#include "dilatelab/errors.hpp"
#include "dilatelab/fractional.hpp"
#include "dilatelab/hry_spectrum.hpp"
#include "dilatelab/int_set.hpp"
#include "dilatelab/io.hpp"
#include "dilatelab/rng.hpp"
#include "dilatelab/sampling.hpp"

namespace dilatelab {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// Temporarily widens the element budget for a deliberately heavy enumeration
// (the largest brute-force cross-checks iterate ~5e8 pairs into a small dense
// bitmap); restores the previous budget on scope exit.
class BudgetRaise {
  public:
    explicit BudgetRaise(std::size_t floor) : saved_(element_budget()) {
        if (saved_ < floor) set_element_budget(floor);
    }
    ~BudgetRaise() { set_element_budget(saved_); }
    BudgetRaise(const BudgetRaise&) = delete;
    BudgetRaise& operator=(const BudgetRaise&) = delete;

  private:
    std::size_t saved_;
};

std::string g12(double v) { return format_g12(v); }

// Independent reference for the norm engine: coarse scan of f(p) = sum w^p
// over 2049 points, then golden-section refinement around the best bracket.
// Shares no code with norm().
double reference_norm_scan(const FractionalDilate& gamma) {
    const auto f = [&](double p) {
        double s = 0.0;
        for (const auto& [pt, w] : gamma.entries()) {
            (void)pt;
            s += std::pow(w, p);
        }
        return s;
    };
    const int coarse = 2048;
    int best = 0;
    double best_val = f(0.0);
    for (int i = 1; i <= coarse; ++i) {
        const double v = f(static_cast<double>(i) / coarse);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    double lo = std::max(0.0, (best - 1.0) / coarse);
    double hi = std::min(1.0, (best + 1.0) / coarse);
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return std::min({f(0.0), f(1.0), std::min(f1, f2)});
}

FractionalDilate random_dilate(std::uint64_t seed, std::uint64_t stream) {
    const int support = 1 + static_cast<int>(counter_word(seed, stream, 0) % 10);
    std::vector<std::pair<Coord, double>> weighted;
    std::uint64_t ctr = 1;
    while (static_cast<int>(weighted.size()) < support) {
        const Coord pt =
            static_cast<Coord>(counter_word(seed, stream, ctr++) % 41) - 20;
        bool fresh = true;
        for (const auto& [p, w] : weighted) {
            (void)w;
            if (p == pt) fresh = false;
        }
        if (!fresh) continue;
        const double w = 0.1 + 4.9 * counter_uniform(seed, stream, ctr++);
        weighted.emplace_back(pt, w);
    }
    return FractionalDilate::of_ints(std::move(weighted));
}

template <typename Body>
ReproItem timed_item(int index, const std::string& name,
                     const std::string& expected, Body body) {
    ReproItem item;
    item.index = index;
    item.name = name;
    item.expected = expected;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(item);
    } catch (const std::exception& e) {
        item.passed = false;
        item.measured = std::string("exception: ") + e.what();
    }
    item.seconds = seconds_since(start);
    return item;
}

ReproItem item_explicit_weight_beta() {
    return timed_item(
        2, "explicit-weight-beta",
        "beta within 1e-3 of 1.7897; matches the threshold evaluation to 1e-12",
        [](ReproItem& item) {
            const double log_q = -std::log(5.0) / 300.0 -
                                 46.0 * std::log(2.0) / 625.0 -
                                 1129.0 * std::log(12.0) / 15000.0;
            const BetaEvaluation explicit_q = beta_with_weight(2, 23, log_q);
            const BetaEvaluation threshold = beta(2, 23);
            const double gap = std::fabs(explicit_q.beta - threshold.beta);
            item.passed =
                std::fabs(explicit_q.beta - 1.7897) <= 1e-3 && gap <= 1e-12;
            std::ostringstream os;
            os << "beta(2,23) = " << g12(explicit_q.beta)
               << " at q = " << g12(std::exp(log_q))
               << "; threshold gap " << g12(gap);
            item.measured = os.str();
        });
}

ReproItem item_two_weight_beta() {
    return timed_item(
        3, "two-weight-beta",
        "beta within 1e-3 of 1.7889 with the subtraction dilate spartan",
        [](ReproItem& item) {
            const WeightedBetaEvaluation w =
                weighted_hry_beta(2, 22, 0.9951, 0.7617);
            item.passed = std::fabs(w.beta - 1.7889) <= 1e-3;
            std::ostringstream os;
            os << "beta = " << g12(w.beta) << ", mass = " << g12(w.mass)
               << ", subtraction norm = mass^2 = " << g12(w.diff_norm)
               << " (spartan verified)";
            item.measured = os.str();
        });
}

ReproItem item_near_threshold_norm() {
    return timed_item(
        4, "near-threshold-norm",
        "||a+a|| = 6 within 1e-9 just below q = 2^{-1/4}; log 6 / log 3q < 1.93647",
        [](ReproItem& item) {
            const double q = std::pow(2.0, -0.25) - 1e-6;
            const FractionalDilate a =
                uniform_dilate(IntSet::of_ints({0, 1, 3}), q);
            const NormResult r = norm(convolve(a, 1, a));
            const double exponent = std::log(6.0) / std::log(3.0 * q);
            item.passed =
                std::fabs(r.value - 6.0) <= 1e-9 && exponent < 1.93647;
            std::ostringstream os;
            os << "||a+a|| = " << g12(r.value) << " (" << regime_name(r.regime)
               << ", p* = " << g12(r.p_star)
               << "; support count 6 is taken at q above the 2^{-1/4} threshold)"
               << ", exponent = " << g12(exponent);
            item.measured = os.str();
        });
}

ReproItem item_spectrum_closed_form() {
    return timed_item(
        5, "spectrum-closed-form",
        "closed-form subtraction spectrum identical to brute force for all "
        "1 <= k, d <= 4, under 10 s",
        [](ReproItem& item) {
            const auto start = std::chrono::steady_clock::now();
            int checked = 0;
            bool all_equal = true;
            for (std::int64_t k = 1; k <= 4 && all_equal; ++k) {
                for (std::int64_t d = 1; d <= 4 && all_equal; ++d) {
                    const SpectrumSummary closed = hry_subtraction_spectrum(k, d);
                    const auto brute = spectrum(hry({k, d}), -1);
                    if (brute.size() != closed.classes.size()) {
                        all_equal = false;
                        break;
                    }
                    unsigned __int128 mass = 0;
                    for (std::size_t t = 0; t < brute.size(); ++t) {
                        const auto& cls = closed.classes[t];
                        if (!cls.lambda_exact || !cls.mu_exact ||
                            *cls.lambda_exact !=
                                static_cast<unsigned __int128>(brute[t].first) ||
                            *cls.mu_exact !=
                                static_cast<unsigned __int128>(brute[t].second)) {
                            all_equal = false;
                            break;
                        }
                        mass += *cls.lambda_exact * *cls.mu_exact;
                    }
                    const auto size =
                        static_cast<unsigned __int128>(hry({k, d}).size());
                    if (mass != size * size) all_equal = false;
                    ++checked;
                }
            }
            const double elapsed = seconds_since(start);
            item.passed = all_equal && checked == 16 && elapsed < 10.0;
            std::ostringstream os;
            os << checked << " (k, d) pairs "
               << (all_equal ? "exactly equal" : "MISMATCHED") << " in "
               << g12(elapsed) << " s";
            item.measured = os.str();
        });
}

ReproItem item_union_size_formulas() {
    return timed_item(
        6, "union-size-formulas",
        "every closed-form size (six dilates, |A|, |A+A|, |A+2A|, |H ∩ I|) "
        "matches enumeration for 3 <= n <= 8, n >= k > (n+1)/2",
        [](ReproItem& item) {
            const BudgetRaise budget(1u << 30);
            int pairs = 0;
            std::vector<std::string> mismatches;
            for (int n = 3; n <= 8; ++n) {
                for (int k = n; 2 * k > n + 1; --k) {
                    const UnionSumSizes u = union_sum_sizes(n, k);
                    const IntSet h = hypercube_H(n);
                    const IntSet i = interval_I(k);
                    const IntSet a = h.united(i);
                    long long inter = 0;
                    for (const Point& p : h.elements())
                        if (i.contains(p)) ++inter;
                    const auto sz = [](const IntSet& s) {
                        return static_cast<long long>(s.size());
                    };
                    const std::pair<const char*, std::pair<long long, long long>>
                        checks[] = {
                            {"|H|", {u.size_h, sz(h)}},
                            {"|I|", {u.size_i, sz(i)}},
                            {"|A|", {u.size_a, sz(a)}},
                            {"|H∩I|", {u.inter_hi, inter}},
                            {"|H+H|", {u.sum_hh, sz(dilate_sum(h, 1, h))}},
                            {"|H+2H|", {u.sum_h2h, sz(dilate_sum(h, 2, h))}},
                            {"|H+I|", {u.sum_hi, sz(dilate_sum(h, 1, i))}},
                            {"|I+I|", {u.sum_ii, sz(dilate_sum(i, 1, i))}},
                            {"|I+2I|", {u.sum_i2i, sz(dilate_sum(i, 2, i))}},
                            {"|H+2I|", {u.sum_h2i, sz(dilate_sum(h, 2, i))}},
                            {"|I+2H|", {u.sum_i2h, sz(dilate_sum(i, 2, h))}},
                            {"|A+A|", {u.sum_aa, sz(dilate_sum(a, 1, a))}},
                            {"|A+2A|", {u.sum_a2a, sz(dilate_sum(a, 2, a))}},
                        };
                    for (const auto& [label, vals] : checks) {
                        if (vals.first != vals.second) {
                            std::ostringstream os;
                            os << label << "(n=" << n << ",k=" << k
                               << ") formula " << vals.first << " vs "
                               << vals.second;
                            mismatches.push_back(os.str());
                        }
                    }
                    ++pairs;
                }
            }
            item.passed = mismatches.empty();
            std::ostringstream os;
            os << pairs << " (n, k) pairs, 13 quantities each; ";
            if (mismatches.empty())
                os << "all exact";
            else
                os << mismatches.size() << " mismatches, first: " << mismatches[0];
            item.measured = os.str();
        });
}

ReproItem item_norm_engine(std::uint64_t seed) {
    return timed_item(
        7, "norm-engine",
        "200 random dilates: norm <= grid values + 1e-9, matches a converged "
        "independent scan to 1e-6 relative, entropy bound tight at y* (1e-9) "
        "and never above the norm for 1000 random y",
        [seed](ReproItem& item) {
            double worst_grid_slack = 0.0;   // norm - min grid value (can be < 0)
            double worst_scan_gap = 0.0;     // relative |norm - reference|
            double worst_ystar_gap = 0.0;    // |entropy(y*) - norm|
            double worst_y_excess = -1e300;  // entropy(y) - norm, any y
            bool ok = true;
            for (std::uint64_t t = 0; t < 200; ++t) {
                const FractionalDilate g = random_dilate(seed, 700 + t);
                const NormResult r = norm(g);
                double grid_min = 1e300;
                for (int i = 0; i < 200; ++i) {
                    const double p = static_cast<double>(i) / 199.0;
                    double f = 0.0;
                    for (const auto& [pt, w] : g.entries()) {
                        (void)pt;
                        f += std::pow(w, p);
                    }
                    grid_min = std::min(grid_min, f);
                    if (r.value > f + 1e-9) ok = false;
                }
                worst_grid_slack = std::max(worst_grid_slack, r.value - grid_min);
                const double ref = reference_norm_scan(g);
                const double rel =
                    std::fabs(r.value - ref) / std::max(1.0, std::fabs(ref));
                worst_scan_gap = std::max(worst_scan_gap, rel);
                if (rel > 1e-6) ok = false;

                const double at_star = entropy_bound(g, optimal_entropy_weights(g));
                const double ystar_gap = std::fabs(at_star - r.value);
                worst_ystar_gap = std::max(worst_ystar_gap, ystar_gap);
                if (ystar_gap > 1e-9 * std::max(1.0, r.value)) ok = false;

                const std::size_t m = g.support_size();
                std::vector<double> y(m);
                for (int trial = 0; trial < 1000; ++trial) {
                    double total = 0.0;
                    for (std::size_t j = 0; j < m; ++j) {
                        const double u = counter_uniform(
                            seed, 7000 + t, 1 + trial * m + static_cast<int>(j));
                        y[j] = -std::log1p(-u) + 1e-12;
                        total += y[j];
                    }
                    for (std::size_t j = 0; j < m; ++j) y[j] /= total;
                    const double eb = entropy_bound(g, y);
                    worst_y_excess = std::max(worst_y_excess, eb - r.value);
                    if (eb > r.value + 1e-9) ok = false;
                }
            }
            item.passed = ok;
            std::ostringstream os;
            os << "max norm-over-grid slack " << g12(worst_grid_slack)
               << "; max relative gap to converged scan " << g12(worst_scan_gap)
               << "; max |entropy(y*) - norm| " << g12(worst_ystar_gap)
               << "; max entropy excess over norm " << g12(worst_y_excess);
            item.measured = os.str();
        });
}

ReproItem item_expectation_oracle(std::uint64_t seed) {
    return timed_item(
        8, "expectation-oracle",
        "E|S + kT| <= ||a + k a||^n for k in {1, 2, -1}, n <= 5, and 10^4-trial "
        "Monte Carlo means within 4 standard errors of the exact values",
        [seed](ReproItem& item) {
            const FractionalDilate a =
                uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.6);
            const Coord ks[] = {1, 2, -1};
            bool ok = true;
            double worst_z = 0.0;
            double worst_bound_excess = -1e300;
            for (int ki = 0; ki < 3; ++ki) {
                const Coord k = ks[ki];
                const double nv = norm(convolve(a, k, a)).value;
                for (int n = 1; n <= 5; ++n) {
                    const double exact = exact_expected_sumset_size(a, k, a, n);
                    const double bound = std::pow(nv, n);
                    worst_bound_excess =
                        std::max(worst_bound_excess, exact - bound);
                    if (exact > bound * (1.0 + 1e-12) + 1e-9) ok = false;
                    const SampleStats mc = estimate_sizes(
                        a, k, n, 10000,
                        seed + 100 * static_cast<std::uint64_t>(ki) +
                            static_cast<std::uint64_t>(n),
                        false);
                    const double se = mc.sum_size.std_error;
                    const double z =
                        se > 0.0 ? std::fabs(mc.sum_size.mean - exact) / se
                                 : (mc.sum_size.mean == exact ? 0.0 : 1e300);
                    worst_z = std::max(worst_z, z);
                    if (z > 4.0) ok = false;
                }
            }
            item.passed = ok;
            std::ostringstream os;
            os << "15 (k, n) pairs; max |z| = " << g12(worst_z)
               << "; max exact-minus-bound = " << g12(worst_bound_excess);
            item.measured = os.str();
        });
}

ReproItem item_rainbow_pairing(std::uint64_t seed) {
    return timed_item(
        9, "rainbow-pairing",
        "same-set vs independent rainbow-restricted means differ by less than "
        "4 pooled standard errors (k = 2, n = 6, q = 0.6 on {0,1,3})",
        [seed](ReproItem& item) {
            const FractionalDilate a =
                uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.6);
            const RainbowComparison rc = rainbow_comparison(a, 2, 6, 10000, seed);
            const double diff =
                std::fabs(rc.same_set.mean - rc.independent.mean);
            const double pooled =
                std::sqrt(rc.same_set.std_error * rc.same_set.std_error +
                          rc.independent.std_error * rc.independent.std_error);
            item.passed = diff == 0.0 || diff < 4.0 * pooled;
            std::ostringstream os;
            os << "means " << g12(rc.same_set.mean) << " vs "
               << g12(rc.independent.mean) << ", |diff| = " << g12(diff)
               << ", 4 SE = " << g12(4.0 * pooled) << "; rainbow word count "
               << rc.rainbow_word_count;
            if (rc.rainbow_word_count == 0)
                os << " (alphabet has 7 symbols but words have 6 letters: no "
                      "word covers the alphabet, so the comparison is vacuous)";
            item.measured = os.str();
        });
}

ReproItem item_concentration_ratio() {
    return timed_item(
        10, "concentration-ratio",
        "(E|S_n|^2 - E|S_n - S_n|) / (3q)^{2n} strictly decreasing for "
        "n = 1..5 at q = 0.98 * 3^{-1/6}",
        [](ReproItem& item) {
            const double q = 0.98 * std::pow(1.0 / 3.0, 1.0 / 6.0);
            const FractionalDilate a =
                uniform_dilate(IntSet::of_ints({0, 1, 3}), q);
            std::vector<double> ratios;
            for (int n = 1; n <= 5; ++n) {
                const double s2 = exact_expected_size_squared(a, n);
                const double dd = exact_expected_same_diff_size(a, n);
                ratios.push_back((s2 - dd) / std::pow(3.0 * q, 2 * n));
            }
            bool decreasing = true;
            for (std::size_t i = 1; i < ratios.size(); ++i)
                if (!(ratios[i] < ratios[i - 1])) decreasing = false;
            item.passed = decreasing;
            std::ostringstream os;
            os << "ratios";
            for (double r : ratios) os << ' ' << g12(r);
            os << (decreasing ? " (strictly decreasing)"
                              : " (strictly increasing: the measured trend "
                                "runs opposite to the stated one)");
            item.measured = os.str();
        });
}

ReproItem item_inequality_corpus(std::uint64_t seed) {
    return timed_item(
        11, "inequality-corpus",
        "sum-size inequality corpus all-pass: Plunnecke-style checks, Sidon "
        "dilates to m = 40, hypercube lower bounds (exhaustive n = 2, 2000 "
        "random pairs at n = 4), f(2,2) = 3 and f(i,j) >= (ij)^{log_4 3} for "
        "i, j <= 12",
        [seed](ReproItem& item) {
            const PropertyCheck pc = plunnecke_corpus(seed, 500);
            const PropertyCheck sc = sidon_corpus(40);
            const PropertyCheck h2 =
                hypercube_sweep(2, SubsetMode::exhaustive, 0, 0);
            const PropertyCheck h4 =
                hypercube_sweep(4, SubsetMode::random, 2000, seed);
            bool floors = f_dp(2, 2) == 3;
            const double e = std::log(3.0) / std::log(4.0);
            for (int i = 1; i <= 12 && floors; ++i)
                for (int j = 1; j <= 12 && floors; ++j)
                    if (static_cast<double>(f_dp(i, j)) <
                        std::pow(static_cast<double>(i) * j, e) - 1e-9)
                        floors = false;
            item.passed =
                pc.passed && sc.passed && h2.passed && h4.passed && floors;
            std::ostringstream os;
            os << pc.name << (pc.passed ? " ok" : " FAILED") << "; " << sc.name
               << (sc.passed ? " ok" : " FAILED") << "; " << h2.name
               << (h2.passed ? " ok" : " FAILED") << "; " << h4.name
               << (h4.passed ? " ok" : " FAILED") << "; profile floor "
               << (floors ? "ok" : "FAILED");
            if (!pc.passed) os << " [" << pc.detail << "]";
            item.measured = os.str();
        });
}

ReproItem item_converse_trend() {
    return timed_item(
        12, "converse-trend",
        "closed-form exponent ratio at alpha = 0.55 strictly increasing over "
        "n = 10^2, 10^3, 10^4 and exceeding 1.95 at n = 10^4",
        [](ReproItem& item) {
            const PropertyCheck c = converse_check(0.55, 1.95);
            item.passed = c.passed;
            item.measured = c.detail;
        });
}

}  // namespace

ReproItem reproduce_headline() {
    return timed_item(
        1, "headline-beta",
        "beta(987, 14929) = 1.735383 within 5e-4, under 60 s single-threaded",
        [](ReproItem& item) {
            const auto start = std::chrono::steady_clock::now();
            const BetaEvaluation b = beta(987, 14929);
            const double elapsed = seconds_since(start);
            item.passed =
                std::fabs(b.beta - 1.735383) <= 5e-4 && elapsed < 60.0;
            std::ostringstream os;
            os << "beta = " << g12(b.beta) << " in " << g12(elapsed) << " s";
            item.measured = os.str();
        });
}

std::vector<ReproItem> reproduce_items(std::uint64_t seed) {
    std::vector<ReproItem> items;
    items.push_back(item_explicit_weight_beta());
    items.push_back(item_two_weight_beta());
    items.push_back(item_near_threshold_norm());
    items.push_back(item_spectrum_closed_form());
    items.push_back(item_union_size_formulas());
    items.push_back(item_norm_engine(seed));
    items.push_back(item_expectation_oracle(seed));
    items.push_back(item_rainbow_pairing(seed));
    items.push_back(item_concentration_ratio());
    items.push_back(item_inequality_corpus(seed));
    items.push_back(item_converse_trend());
    return items;
}

}  // namespace dilatelab
