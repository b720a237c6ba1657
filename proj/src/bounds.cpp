#include "dilatelab/bounds.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dilatelab/core_sets.hpp"
#include "dilatelab/errors.hpp"
#include "dilatelab/parallel.hpp"
#include "dilatelab/rng.hpp"

namespace dilatelab {

namespace {

const double kLog34 = std::log(4.0) / std::log(3.0);  // log_3 4
const double kLog43 = std::log(3.0) / std::log(4.0);  // log_4 3

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

}  // namespace

PropertyCheck plunnecke_check(const IntSet& A) {
    if (A.empty()) throw std::invalid_argument("plunnecke_check: empty set");
    const auto a = static_cast<std::int64_t>(A.size());
    const auto aa = static_cast<std::int64_t>(dilate_sum(A, 1, A).size());
    const auto a2a = static_cast<std::int64_t>(dilate_sum(A, 2, A).size());
    PropertyCheck out;
    out.name = "sum-size upper bound |A+A|*|A| <= |A+2A|^2";
    out.passed = aa * a <= a2a * a2a;
    out.detail = fmt("|A|=%.0f |A+A|=%.0f |A+2A|=%.0f", static_cast<double>(a),
                     static_cast<double>(aa), static_cast<double>(a2a));
    return out;
}

PropertyCheck plunnecke_corpus(std::uint64_t seed, std::size_t random_sets) {
    std::vector<IntSet> corpus;
    for (int n = 1; n <= 5; ++n) corpus.push_back(hypercube_H(n));
    for (int k = 1; k <= 4; ++k) corpus.push_back(interval_I(k));
    for (const auto& [n, k] :
         std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {5, 4}, {6, 4}, {8, 5}})
        corpus.push_back(union_A(n, k));
    corpus.push_back(geometric(2, 8));
    corpus.push_back(geometric(3, 6));
    for (int m : {2, 5, 8, 10}) corpus.push_back(sidon_greedy(m));
    for (const auto& [k, d] :
         std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 2}, {3, 2}, {2, 3}})
        corpus.push_back(hry(HRYParams{k, d}));
    for (std::size_t s = 0; s < random_sets; ++s) {
        std::vector<Coord> vals;
        for (Coord e = 0; e < 100; ++e)
            if (counter_word(seed, s, static_cast<std::uint64_t>(e)) & 1) vals.push_back(e);
        if (vals.empty()) vals.push_back(0);
        corpus.push_back(IntSet::of_ints(std::move(vals)));
    }

    PropertyCheck out;
    out.name = "sum-size upper bound over construction corpus";
    out.passed = true;
    std::size_t checked = 0;
    for (const IntSet& A : corpus) {
        const PropertyCheck one = plunnecke_check(A);
        ++checked;
        if (!one.passed) {
            out.passed = false;
            out.detail = "failed at corpus set #" + std::to_string(checked - 1) + ": " +
                         one.detail;
            return out;
        }
    }
    out.detail = std::to_string(checked) + " sets checked";
    return out;
}

PropertyCheck sidon_dilate_check(const IntSet& A) {
    const auto m = static_cast<std::int64_t>(A.size());
    if (m < 2) throw std::invalid_argument("sidon_dilate_check: need at least two elements");
    const auto aa = static_cast<std::int64_t>(dilate_sum(A, 1, A).size());
    if (aa != m * (m + 1) / 2)
        throw std::invalid_argument("sidon_dilate_check: input is not a Sidon set");
    const auto a2a = static_cast<std::int64_t>(dilate_sum(A, 2, A).size());
    PropertyCheck out;
    out.name = "Sidon sets grow strictly under the 2-dilate";
    out.passed = a2a > aa;
    out.detail = fmt("m=%.0f |A+A|=%.0f |A+2A|=%.0f", static_cast<double>(m),
                     static_cast<double>(aa), static_cast<double>(a2a));
    return out;
}

PropertyCheck sidon_corpus(int max_m) {
    PropertyCheck out;
    out.name = "greedy Sidon prefixes up to m=" + std::to_string(max_m);
    out.passed = true;
    for (int m = 2; m <= max_m; ++m) {
        const PropertyCheck one = sidon_dilate_check(sidon_greedy(m));
        if (!one.passed) {
            out.passed = false;
            out.detail = "failed at m=" + std::to_string(m) + ": " + one.detail;
            return out;
        }
    }
    out.detail = std::to_string(std::max(0, max_m - 1)) + " prefixes checked";
    return out;
}

std::int64_t f_dp(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("f_dp: need nonnegative arguments");
    constexpr int kMax = 40;
    if (i > kMax || j > kMax)
        throw budget_error("f_dp: arguments beyond the 40x40 table budget");
    static const auto table = [] {
        std::array<std::array<std::int64_t, kMax + 1>, kMax + 1> f{};
        for (int a = 0; a <= kMax; ++a) {
            for (int b = 0; b <= kMax; ++b) {
                if (a <= 1 || b <= 1) {
                    f[a][b] = static_cast<std::int64_t>(a) * b;
                    continue;
                }
                std::int64_t best = std::numeric_limits<std::int64_t>::max();
                for (int a1 = 0; a1 <= a; ++a1) {
                    for (int b1 = 0; b1 <= b; ++b1) {
                        // A split may not reproduce the whole problem, directly
                        // or through the cross term.
                        if ((a1 == 0 && b1 == 0) || (a1 == a && b1 == b) ||
                            (a1 == a && b1 == 0) || (a1 == 0 && b1 == b))
                            continue;
                        const int a2 = a - a1, b2 = b - b1;
                        const std::int64_t cand =
                            f[a1][b1] + f[a2][b2] + std::max(f[a1][b2], f[a2][b1]);
                        best = std::min(best, cand);
                    }
                }
                f[a][b] = best;
            }
        }
        return f;
    }();
    return table[i][j];
}

PropertyCheck hypercube_lowerbound_check(const IntSet& A, const IntSet& B) {
    if (A.dimension() != B.dimension())
        throw std::invalid_argument("hypercube_lowerbound_check: dimension mismatch");
    if (A.dimension() > 4)
        throw std::invalid_argument("hypercube_lowerbound_check: dimension must be <= 4");
    for (const IntSet* s : {&A, &B}) {
        for (const Point& p : s->elements()) {
            for (Coord c : p) {
                if (c != 0 && c != 1)
                    throw std::invalid_argument(
                        "hypercube_lowerbound_check: inputs must be subsets of {0,1}^n");
            }
        }
    }
    const auto ab = static_cast<double>(dilate_sum(A, 1, B).size());
    const double floor_dp = static_cast<double>(f_dp(static_cast<int>(A.size()),
                                                     static_cast<int>(B.size())));
    const double floor_pow =
        std::pow(static_cast<double>(A.size()) * static_cast<double>(B.size()), kLog43);
    PropertyCheck out;
    out.name = "hypercube sumset lower bounds";
    out.passed = ab >= floor_dp && ab >= floor_pow - 1e-9;
    out.detail = fmt("|A+B|=%.0f f=%.0f power-floor=%.6f", ab, floor_dp, floor_pow);
    return out;
}

PropertyCheck hypercube_sweep(int n, SubsetMode mode, std::size_t count,
                              std::uint64_t seed) {
    PropertyCheck out;
    out.passed = true;
    if (mode == SubsetMode::exhaustive) {
        if (n > 2)
            throw std::invalid_argument("hypercube_sweep: exhaustive pair sweep needs n <= 2");
        const std::vector<IntSet> subsets = hypercube_subsets(n, mode, 0, 0);
        out.name = "exhaustive hypercube pair sweep, n=" + std::to_string(n);
        std::size_t pairs = 0;
        for (const IntSet& A : subsets) {
            for (const IntSet& B : subsets) {
                ++pairs;
                if (!hypercube_lowerbound_check(A, B).passed) {
                    out.passed = false;
                    out.detail = "failed after " + std::to_string(pairs) + " pairs";
                    return out;
                }
            }
        }
        out.detail = std::to_string(pairs) + " pairs checked";
    } else {
        const std::vector<IntSet> subsets =
            hypercube_subsets(n, SubsetMode::random, 2 * count, seed);
        out.name = "randomized hypercube pair sweep, n=" + std::to_string(n);
        for (std::size_t t = 0; t < count; ++t) {
            if (!hypercube_lowerbound_check(subsets[t], subsets[count + t]).passed) {
                out.passed = false;
                out.detail = "failed at pair " + std::to_string(t);
                return out;
            }
        }
        out.detail = std::to_string(count) + " pairs checked";
    }
    return out;
}

std::vector<RegionLine> region_lines(RegionId region) {
    std::vector<RegionLine> out;
    if (region == RegionId::f12) {
        out.push_back({"upper-bound-2.95x-1.95",
                       LineKind::reference,
                       {{1.0, 1.0}, {3.95 / 2.95, 2.0}}});
        out.push_back({"upper-bound-4x-over-3",
                       LineKind::reference,
                       {{1.0, 4.0 / 3.0}, {1.5, 2.0}}});
        out.push_back({"lower-bound-1-plus-x-over-2",
                       LineKind::reference,
                       {{1.0, 1.5}, {2.0, 2.0}}});
        const double bx = std::log(3.0) / std::log(9.0 / 4.0);  // 2x-1 meets (log_3 4)x
        out.push_back({"attained-boundary",
                       LineKind::boundary,
                       {{1.0, 1.0}, {bx, 2.0 * bx - 1.0}, {2.0 * kLog43, 2.0}}});
        out.push_back({"diagonal", LineKind::boundary, {{1.0, 1.0}, {2.0, 2.0}}});
    } else {
        out.push_back({"diagonal", LineKind::boundary, {{1.0, 1.0}, {2.0, 2.0}}});
        out.push_back({"attained-boundary",
                       LineKind::boundary,
                       {{1.0, 1.0}, {1.7354, 2.0}, {2.0, 2.0}}});
        out.push_back({"excluded-at-y-2", LineKind::reference, {{1.0, 2.0}, {1.5, 2.0}}});
    }
    return out;
}

double converse_ratio(std::int64_t n, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("converse_ratio: need alpha in (0, 1]");
    const auto k = static_cast<std::int64_t>(alpha * static_cast<double>(n));
    const UnionLogSizes ls = union_log_sizes(n, k);
    return (ls.log_a2a - ls.log_a) / (ls.log_aa - ls.log_a);
}

PropertyCheck converse_check(double alpha, double threshold) {
    const std::int64_t ns[3] = {100, 1000, 10000};
    double r[3];
    for (int i = 0; i < 3; ++i) r[i] = converse_ratio(ns[i], alpha);
    PropertyCheck out;
    out.name = fmt("exponent-gap ratio growth at alpha=%.2f", alpha);
    out.passed = r[0] < r[1] && r[1] < r[2] && r[2] > threshold;
    out.detail = fmt("ratios %.12g %.12g %.12g", r[0], r[1], r[2]) +
                 fmt(", need increasing and > %.6g", threshold);
    return out;
}

double f12_limit_x(double beta) {
    if (!(beta > 1.0 && beta <= 2.0))
        throw std::invalid_argument("f12_limit_x: need beta in (1, 2]");
    const double knee = std::log(4.0) / std::log(9.0 / 4.0);
    return beta <= knee ? (beta + 1.0) / 2.0 : beta * kLog43;
}

std::vector<ConvergencePoint> f12_convergence(double beta,
                                              const std::vector<std::int64_t>& ns) {
    const double fx = f12_limit_x(beta);
    std::vector<ConvergencePoint> out;
    out.reserve(ns.size());
    for (std::int64_t n : ns) {
        const auto k = static_cast<std::int64_t>(static_cast<double>(n) / beta);
        const UnionLogSizes ls = union_log_sizes(n, k);
        ConvergencePoint p;
        p.n = n;
        p.k = k;
        p.x = ls.log_aa / ls.log_a;
        p.y = ls.log_a2a / ls.log_a;
        p.err = std::max(std::abs(p.x - fx), std::abs(p.y - beta));
        out.push_back(p);
    }
    return out;
}

namespace {

double grid_norm(const FractionalDilate& gamma) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 200; ++i) {
        const double p = static_cast<double>(i) / 199.0;
        double f = 0.0;
        for (const auto& [pt, w] : gamma.entries()) {
            (void)pt;
            f += std::exp(p * std::log(w));
        }
        best = std::min(best, f);
    }
    return best;
}

struct NormTriple {
    double a, aa, a2a;
};

NormTriple norm_triple(const FractionalDilate& alpha, bool grid) {
    const FractionalDilate aa = convolve(alpha, 1, alpha);
    const FractionalDilate a2a = convolve(alpha, 2, alpha);
    if (grid) return {grid_norm(alpha), grid_norm(aa), grid_norm(a2a)};
    return {norm(alpha).value, norm(aa).value, norm(a2a).value};
}

}  // namespace

std::vector<DilateCounterexample> dilate_inequality_search(std::size_t trials,
                                                           int support_size,
                                                           std::uint64_t seed) {
    if (support_size < 2 || support_size > 8)
        throw std::invalid_argument("dilate_inequality_search: need 2 <= support_size <= 8");

    std::vector<FractionalDilate> candidates;
    // Deterministic interval indicators first; the lemma-adjacent cases live
    // here and make reported violations reproducible without tuning seeds.
    for (int m = 1; m + 1 <= support_size; ++m) {
        std::vector<std::pair<Coord, double>> w;
        for (Coord v = 0; v <= m; ++v) w.emplace_back(v, 1.0);
        candidates.push_back(FractionalDilate::of_ints(std::move(w)));
    }
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Coord> pts;
        std::uint64_t counter = 0;
        while (static_cast<int>(pts.size()) < support_size) {
            const auto v = static_cast<Coord>(counter_word(seed, t, counter++) % 16);
            if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
        }
        std::sort(pts.begin(), pts.end());
        std::vector<std::pair<Coord, double>> w;
        for (int i = 0; i < support_size; ++i) {
            const double u = counter_uniform(seed, t, counter++);
            w.emplace_back(pts[i], 0.1 + 4.9 * u);
        }
        candidates.push_back(FractionalDilate::of_ints(std::move(w)));
    }

    struct Candidate {
        std::string statement;
        double lhs, rhs;
        int which;  // 1, 2, 3 = exponent reading, 4 = monotone
    };
    constexpr double kMargin = 1e-7;

    std::vector<std::vector<Candidate>> found(candidates.size());
    parallel_for_blocks(candidates.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
            const NormTriple t = norm_triple(candidates[c], /*grid=*/false);
            auto& dst = found[c];
            if (t.a * t.a2a > t.aa * t.aa + kMargin)
                dst.push_back({"||a|| * ||a+2a|| <= ||a+a||^2", t.a * t.a2a, t.aa * t.aa, 1});
            if (t.a2a > kLog34 * t.aa + kMargin)
                dst.push_back({"||a+2a|| <= log_3(4) * ||a+a||", t.a2a, kLog34 * t.aa, 2});
            if (std::log(t.a2a) > kLog34 * std::log(t.aa) + kMargin)
                dst.push_back({"log||a+2a|| <= log_3(4) * log||a+a||", std::log(t.a2a),
                               kLog34 * std::log(t.aa), 3});
            if (t.aa > t.a2a + kMargin)
                dst.push_back({"||a+2a|| >= ||a+a||", t.aa, t.a2a, 4});
        }
    });

    std::vector<DilateCounterexample> out;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (found[c].empty()) continue;
        // Re-verify with every norm replaced by its 200-point grid value
        // before reporting anything for this dilate.
        const NormTriple g = norm_triple(candidates[c], /*grid=*/true);
        for (const Candidate& cand : found[c]) {
            bool confirmed = false;
            switch (cand.which) {
                case 1: confirmed = g.a * g.a2a > g.aa * g.aa + kMargin; break;
                case 2: confirmed = g.a2a > kLog34 * g.aa + kMargin; break;
                case 3:
                    confirmed = std::log(g.a2a) > kLog34 * std::log(g.aa) + kMargin;
                    break;
                case 4: confirmed = g.aa > g.a2a + kMargin; break;
            }
            if (confirmed)
                out.push_back({cand.statement, candidates[c], cand.lhs, cand.rhs});
        }
    }
    return out;
}

std::optional<IntSet> mst2d_search(int N, std::size_t max_size, std::uint64_t seed,
                                   std::size_t random_trials) {
    if (N < 1 || N > 62) throw std::invalid_argument("mst2d_search: need 1 <= N <= 62");

    const auto test_mask = [&](std::uint64_t mask) -> bool {
        std::vector<int> elems;
        for (int e = 0; e < N; ++e)
            if (mask & (std::uint64_t{1} << e)) elems.push_back(e);
        if (elems.empty() || elems[0] != 0) return false;
        if (max_size > 0 && elems.size() > max_size) return false;
        int g = 0;
        for (int e : elems) g = std::gcd(g, e);
        if (g > 1) return false;  // a dilation of a smaller-span set
        std::vector<std::uint8_t> sum(static_cast<std::size_t>(2 * N), 0);
        std::vector<std::uint8_t> sum2(static_cast<std::size_t>(3 * N), 0);
        for (int a : elems) {
            for (int b : elems) {
                sum[static_cast<std::size_t>(a + b)] = 1;
                sum2[static_cast<std::size_t>(a + 2 * b)] = 1;
            }
        }
        const auto count = [](const std::vector<std::uint8_t>& v) {
            std::size_t c = 0;
            for (auto b : v) c += b;
            return c;
        };
        return count(sum) > count(sum2);
    };

    const auto to_set = [&](std::uint64_t mask) {
        std::vector<Coord> vals;
        for (int e = 0; e < N; ++e)
            if (mask & (std::uint64_t{1} << e)) vals.push_back(e);
        return IntSet::of_ints(std::move(vals));
    };

    const double exhaustive_cost =
        static_cast<double>(N) * std::ldexp(1.0, N);
    if (exhaustive_cost <= static_cast<double>(element_budget())) {
        // Sets containing 0 are the odd masks; the lowest hit wins so the
        // result is independent of sharding.
        const std::uint64_t half = std::uint64_t{1} << (N - 1);
        std::atomic<std::uint64_t> best{~std::uint64_t{0}};
        parallel_for_blocks(half, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                const std::uint64_t mask = 2 * static_cast<std::uint64_t>(i) + 1;
                if (mask >= best.load(std::memory_order_relaxed)) break;
                if (test_mask(mask)) {
                    std::uint64_t prev = best.load(std::memory_order_relaxed);
                    while (prev > mask &&
                           !best.compare_exchange_weak(prev, mask,
                                                       std::memory_order_relaxed)) {
                    }
                    break;  // masks in this block only grow from here
                }
            }
        });
        const std::uint64_t hit = best.load();
        if (hit != ~std::uint64_t{0}) return to_set(hit);
        return std::nullopt;
    }

    for (std::size_t t = 0; t < random_trials; ++t) {
        std::uint64_t mask = 1;  // 0 is always in A
        for (int e = 1; e < N; ++e)
            if (counter_word(seed, t, static_cast<std::uint64_t>(e)) & 1)
                mask |= std::uint64_t{1} << e;
        if (max_size > 0) {
            std::uint64_t pruned = 0;
            std::size_t kept = 0;
            for (int e = 0; e < N && kept < max_size; ++e) {
                if (mask & (std::uint64_t{1} << e)) {
                    pruned |= std::uint64_t{1} << e;
                    ++kept;
                }
            }
            mask = pruned;
        }
        if (test_mask(mask)) return to_set(mask);
    }
    return std::nullopt;
}

}  // namespace dilatelab
