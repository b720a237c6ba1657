#include "dilatelab/hry_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "dilatelab/core_sets.hpp"
#include "dilatelab/logspace.hpp"
#include "dilatelab/parallel.hpp"

namespace dilatelab {

namespace {

// lgamma(i + 1) table so log-binomials inside the t/i double loop are table
// lookups instead of repeated lgamma calls.
class LogFactorialTable {
public:
    explicit LogFactorialTable(std::int64_t max_n) : table_(max_n + 1) {
        table_[0] = 0.0;
        for (std::int64_t i = 1; i <= max_n; ++i)
            table_[i] = table_[i - 1] + std::log(static_cast<double>(i));
    }
    double binom(std::int64_t n, std::int64_t r) const {
        if (r < 0 || r > n) return -std::numeric_limits<double>::infinity();
        return table_[n] - table_[r] - table_[n - r];
    }

private:
    std::vector<double> table_;
};

unsigned __int128 binom_u128(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 out = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        out = out * static_cast<unsigned __int128>(n - r + i);
        out /= static_cast<unsigned __int128>(i);
    }
    return out;
}

// All binomials and class masses stay inside unsigned 128-bit range up to
// this size (the total mass is C(k+d, d)^2 <= C(60,30)^2 < 2^127).
bool exact_path(std::int64_t k, std::int64_t d) { return k + d <= 60; }

}  // namespace

SpectrumSummary hry_subtraction_spectrum(std::int64_t k, std::int64_t d) {
    if (k < 0 || d < 1)
        throw std::invalid_argument("hry_subtraction_spectrum: need k >= 0 and d >= 1");
    const LogFactorialTable lf(k + d + 1);
    SpectrumSummary out;
    out.k = k;
    out.d = d;
    out.log_set_size = lf.binom(k + d, d);
    out.classes.reserve(static_cast<std::size_t>(k) + 1);
    const bool exact = exact_path(k, d);
    for (std::int64_t t = 0; t <= k; ++t) {
        SpectrumClass cls;
        cls.log_lambda = lf.binom(k + d - t, d);
        if (t == 0) {
            cls.log_mu = 0.0;
        } else {
            std::vector<double> terms;
            terms.reserve(static_cast<std::size_t>(std::min(t, d)));
            for (std::int64_t i = 1; i <= std::min(t, d); ++i) {
                terms.push_back(lf.binom(d + 1, i) + lf.binom(t - 1, i - 1) +
                                lf.binom(t + d - i, d - i));
            }
            cls.log_mu = log_sum_exp(std::move(terms));
        }
        if (exact) {
            cls.lambda_exact = binom_u128(k + d - t, d);
            if (t == 0) {
                cls.mu_exact = 1;
            } else {
                unsigned __int128 mu = 0;
                for (std::int64_t i = 1; i <= std::min(t, d); ++i) {
                    mu += binom_u128(d + 1, i) * binom_u128(t - 1, i - 1) *
                          binom_u128(t + d - i, d - i);
                }
                cls.mu_exact = mu;
            }
        }
        out.classes.push_back(cls);
    }
    if (exact) {
        unsigned __int128 mass = 0;
        for (const auto& cls : out.classes) mass += *cls.lambda_exact * *cls.mu_exact;
        const unsigned __int128 sz = binom_u128(k + d, d);
        if (mass != sz * sz)
            throw std::logic_error("hry_subtraction_spectrum: mass identity failed");
    }
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> spectrum(const IntSet& A, Coord k) {
    const MultiplicityMap mm = multiplicity_map(A, k, A);
    std::map<std::int64_t, std::int64_t> hist;
    for (const auto& [p, c] : mm.entries()) {
        (void)p;
        ++hist[c];
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> out(hist.begin(), hist.end());
    std::reverse(out.begin(), out.end());  // fiber size descending
    return out;
}

double spartan_threshold(std::int64_t k, std::int64_t d) {
    const SpectrumSummary s = hry_subtraction_spectrum(k, d);
    std::vector<double> numerator_terms;  // log(mu lambda ln lambda), lambda > 1
    std::vector<double> mass_terms;       // log(mu lambda)
    numerator_terms.reserve(s.classes.size());
    mass_terms.reserve(s.classes.size());
    for (const auto& cls : s.classes) {
        mass_terms.push_back(cls.log_mu + cls.log_lambda);
        if (cls.log_lambda > 0.0)
            numerator_terms.push_back(cls.log_mu + cls.log_lambda +
                                      std::log(cls.log_lambda));
    }
    if (numerator_terms.empty()) return 0.0;  // all fibers trivial: threshold q = 1
    const double log_num = log_sum_exp(std::move(numerator_terms));
    const double log_mass = log_sum_exp(std::move(mass_terms));
    return -0.5 * std::exp(log_num - log_mass);
}

BetaEvaluation beta_with_weight(std::int64_t k, std::int64_t d, double log_q) {
    const LogFactorialTable lf(2 * k + d + 1);
    BetaEvaluation out;
    out.k = k;
    out.d = d;
    out.log_q = log_q;
    out.log_set_mass = log_q + lf.binom(k + d, d);
    if (!(out.log_set_mass > 0.0))
        throw std::domain_error(
            "beta: surviving mass q*|A| does not exceed 1, exponent undefined");
    out.log_sum_support = lf.binom(2 * k + d, d);
    out.beta = out.log_sum_support / out.log_set_mass;
    return out;
}

BetaEvaluation beta(std::int64_t k, std::int64_t d) {
    return beta_with_weight(k, d, spartan_threshold(k, d));
}

SearchResult search_beta(Range k_range, Range d_range, SearchMode mode) {
    const auto lattice = [](const Range& r) {
        if (r.step < 1 || r.hi < r.lo)
            throw std::invalid_argument("search_beta: bad range");
        std::vector<std::int64_t> vals;
        for (std::int64_t v = r.lo; v <= r.hi; v += r.step) vals.push_back(v);
        return vals;
    };
    const std::vector<std::int64_t> ks = lattice(k_range);
    const std::vector<std::int64_t> ds = lattice(d_range);

    const auto better = [](const BetaEvaluation& a, const BetaEvaluation& b) {
        if (a.beta != b.beta) return a.beta < b.beta;
        if (a.k != b.k) return a.k < b.k;
        return a.d < b.d;
    };

    std::vector<BetaEvaluation> evaluated;
    if (mode == SearchMode::grid) {
        const std::size_t total = ks.size() * ds.size();
        std::vector<std::optional<BetaEvaluation>> slots(total);
        parallel_for_blocks(total, [&](std::size_t begin, std::size_t end) {
            for (std::size_t idx = begin; idx < end; ++idx) {
                try {
                    slots[idx] = beta(ks[idx / ds.size()], ds[idx % ds.size()]);
                } catch (const std::domain_error&) {
                    slots[idx] = std::nullopt;
                }
            }
        });
        for (const auto& s : slots)
            if (s) evaluated.push_back(*s);
    } else {
        // Coordinate descent on the same lattice from its midpoint.
        const auto eval_at = [&](std::size_t i, std::size_t j) {
            std::optional<BetaEvaluation> r;
            try {
                r = beta(ks[i], ds[j]);
            } catch (const std::domain_error&) {
            }
            return r;
        };
        std::size_t i = ks.size() / 2, j = ds.size() / 2;
        auto current = eval_at(i, j);
        if (current) evaluated.push_back(*current);
        bool improved = current.has_value();
        while (improved) {
            improved = false;
            const std::pair<std::int64_t, std::int64_t> steps[4] = {
                {-1, 0}, {1, 0}, {0, -1}, {0, 1}};
            std::size_t best_i = i, best_j = j;
            std::optional<BetaEvaluation> best;
            for (const auto& [di, dj] : steps) {
                const std::int64_t ni = static_cast<std::int64_t>(i) + di;
                const std::int64_t nj = static_cast<std::int64_t>(j) + dj;
                if (ni < 0 || nj < 0 || ni >= static_cast<std::int64_t>(ks.size()) ||
                    nj >= static_cast<std::int64_t>(ds.size()))
                    continue;
                auto cand = eval_at(static_cast<std::size_t>(ni), static_cast<std::size_t>(nj));
                if (!cand) continue;
                evaluated.push_back(*cand);
                if (!best || better(*cand, *best)) {
                    best = cand;
                    best_i = static_cast<std::size_t>(ni);
                    best_j = static_cast<std::size_t>(nj);
                }
            }
            if (best && (!current || better(*best, *current))) {
                current = best;
                i = best_i;
                j = best_j;
                improved = true;
            }
        }
    }

    if (evaluated.empty())
        throw std::domain_error("search_beta: no point in range has a defined exponent");
    std::sort(evaluated.begin(), evaluated.end(), better);
    evaluated.erase(std::unique(evaluated.begin(), evaluated.end(),
                                [](const BetaEvaluation& a, const BetaEvaluation& b) {
                                    return a.k == b.k && a.d == b.d;
                                }),
                    evaluated.end());
    SearchResult out;
    out.best = evaluated.front();
    out.evaluated = std::move(evaluated);
    return out;
}

WeightedBetaEvaluation weighted_hry_beta(std::int64_t k, std::int64_t d,
                                         double w_double, double w_mixed) {
    if (k != 2)
        throw std::invalid_argument(
            "weighted_hry_beta: the two-weight class decomposition is specific to k = 2");
    if (d < 1) throw std::invalid_argument("weighted_hry_beta: need d >= 1");
    for (double w : {w_double, w_mixed}) {
        if (!(w > 0.0 && w <= 1.0))
            throw std::invalid_argument("weighted_hry_beta: weights must lie in (0, 1]");
    }
    const double D = static_cast<double>(d) + 1.0;  // tuples have d+1 coordinates
    const double M2 = D * (D - 1.0) / 2.0;          // count of mixed tuples
    const double mass = D * w_double + M2 * w_mixed;

    // Weighted subtraction spectrum: classes of x = a - b by the overlap
    // pattern of a and b (verified to reproduce mass^2 below).
    const std::pair<double, double> classes[] = {
        {D * w_double * w_double + M2 * w_mixed * w_mixed, 1.0},       // x = 0
        {w_double * w_double, D * (D - 1.0)},                          // 2e_i - 2e_j
        {2.0 * w_double * w_mixed + (D - 2.0) * w_mixed * w_mixed,
         D * (D - 1.0)},                                               // e_i - e_j
        {w_double * w_mixed, D * (D - 1.0) * (D - 2.0)},               // 2e_i - e_j - e_k
        {w_mixed * w_mixed, M2 * (D - 2.0) * (D - 3.0) / 2.0},         // disjoint mixed
    };

    double total = 0.0, slope = 0.0, slope_abs = 0.0;
    for (const auto& [gamma, count] : classes) {
        if (count <= 0.0) continue;
        const double lg = std::log(gamma);
        total += count * gamma;
        slope += count * gamma * lg;
        slope_abs += count * gamma * std::abs(lg);
    }
    if (std::abs(total - mass * mass) > 1e-9 * mass * mass)
        throw std::logic_error("weighted_hry_beta: class census does not reproduce mass^2");
    if (slope > 1e-12 * slope_abs)
        throw std::domain_error(
            "weighted_hry_beta: subtraction dilate is not spartan at these weights");
    if (!(mass > 1.0))
        throw std::domain_error("weighted_hry_beta: total mass must exceed 1");

    WeightedBetaEvaluation out;
    out.mass = mass;
    out.diff_norm = mass * mass;
    out.log_sum_support = log_binomial(static_cast<double>(4 + d), static_cast<double>(d));
    out.beta = out.log_sum_support / std::log(mass);
    return out;
}

}  // namespace dilatelab
