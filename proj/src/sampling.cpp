#include "dilatelab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "dilatelab/core_sets.hpp"
#include "dilatelab/errors.hpp"
#include "dilatelab/parallel.hpp"
#include "dilatelab/rng.hpp"

namespace dilatelab {

namespace {

void require_probability_weights(const FractionalDilate& alpha, const char* who) {
    for (const auto& [p, w] : alpha.entries()) {
        (void)p;
        if (w > 1.0)
            throw std::invalid_argument(std::string(who) +
                                        ": weights must lie in (0, 1] to be probabilities");
    }
}

double checked_word_count(std::size_t alphabet, int n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": need n >= 1");
    const double words = std::pow(static_cast<double>(alphabet), n);
    check_budget(words, std::string(who) + " word enumeration");
    return words;
}

// Odometer over words of a fixed alphabet: digits[0] is the slowest
// coordinate, so enumeration order is lexicographic and the linear index
// matches sum digits[i] * m^{n-1-i}.
bool advance(std::vector<std::size_t>& digits, std::size_t base) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base) return true;
        digits[i] = 0;
    }
    return false;
}

Stat summarize(const std::vector<double>& values) {
    Stat s;
    const std::size_t n = values.size();
    if (n == 0) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.variance = ss / static_cast<double>(n - 1);
    }
    s.std_error = std::sqrt(s.variance / static_cast<double>(n));
    return s;
}

}  // namespace

IntSet draw_from_power(const FractionalDilate& alpha, int n, std::uint64_t seed,
                       std::uint64_t stream) {
    require_probability_weights(alpha, "draw_from_power");
    const auto& entries = alpha.entries();
    if (entries.empty()) throw std::invalid_argument("draw_from_power: empty dilate");
    checked_word_count(entries.size(), n, "draw_from_power");
    const int d = alpha.dimension();
    std::vector<Point> kept;
    std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
    std::uint64_t counter = 0;
    do {
        double prob = 1.0;
        for (std::size_t i = 0; i < digits.size(); ++i) prob *= entries[digits[i]].second;
        if (counter_uniform(seed, stream, counter) < prob) {
            Point word(static_cast<std::size_t>(n) * d);
            for (std::size_t i = 0; i < digits.size(); ++i) {
                const Point& block = entries[digits[i]].first;
                std::copy(block.begin(), block.end(), word.begin() + i * d);
            }
            kept.push_back(std::move(word));
        }
        ++counter;
    } while (advance(digits, entries.size()));
    return IntSet(n * d, std::move(kept));
}

double prob_nonempty(const FractionalDilate& alpha, int n) {
    require_probability_weights(alpha, "prob_nonempty");
    const auto& entries = alpha.entries();
    if (entries.empty()) throw std::invalid_argument("prob_nonempty: empty dilate");
    checked_word_count(entries.size(), n, "prob_nonempty");
    std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
    double log_none = 0.0;
    do {
        double prob = 1.0;
        for (std::size_t i = 0; i < digits.size(); ++i) prob *= entries[digits[i]].second;
        if (prob >= 1.0) return 1.0;
        log_none += std::log1p(-prob);
    } while (advance(digits, entries.size()));
    return -std::expm1(log_none);
}

double exact_expected_sumset_size(const FractionalDilate& alpha, Coord k,
                                  const FractionalDilate& beta, int n) {
    if (k == 0)
        throw std::invalid_argument(
            "exact_expected_sumset_size: k = 0 couples decompositions; only k != 0 "
            "factorizes into independent pair events");
    if (alpha.dimension() != beta.dimension())
        throw std::invalid_argument("exact_expected_sumset_size: dimension mismatch");
    const auto& ea = alpha.entries();
    const auto& eb = beta.entries();
    if (ea.empty() || eb.empty())
        throw std::invalid_argument("exact_expected_sumset_size: empty dilate");

    // Alphabet of the dilate and, per symbol, the probabilities of its
    // decompositions a + k b (distinct decompositions of one symbol have
    // distinct a and distinct b, hence independent presence events).
    std::vector<Point> symbols;
    std::unordered_map<Point, std::vector<double>, PointHash> decomp_probs;
    for (const auto& [pa, wa] : ea) {
        for (const auto& [pb, wb] : eb) {
            Point c = dilate_point(pa, k, pb);
            auto [it, inserted] = decomp_probs.try_emplace(std::move(c));
            if (inserted) symbols.push_back(it->first);
            it->second.push_back(wa * wb);
        }
    }
    std::sort(symbols.begin(), symbols.end());

    const double words = std::pow(static_cast<double>(symbols.size()), n);
    if (words > 1e6)
        throw budget_error("exact_expected_sumset_size: more than 1e6 candidate words");

    // For each word, multiply (1 - p) over every choice of one decomposition
    // per coordinate; choice probabilities factor coordinatewise.
    std::vector<const std::vector<double>*> coord_probs(static_cast<std::size_t>(n));
    std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
    double total = 0.0;
    do {
        for (std::size_t i = 0; i < digits.size(); ++i)
            coord_probs[i] = &decomp_probs.at(symbols[digits[i]]);
        std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
        double p_none = 1.0;
        bool more = true;
        while (more) {
            double p = 1.0;
            for (std::size_t i = 0; i < choice.size(); ++i)
                p *= (*coord_probs[i])[choice[i]];
            p_none *= 1.0 - p;
            more = false;
            for (std::size_t i = choice.size(); i-- > 0;) {
                if (++choice[i] < coord_probs[i]->size()) {
                    more = true;
                    break;
                }
                choice[i] = 0;
            }
        }
        total += 1.0 - p_none;
    } while (advance(digits, symbols.size()));
    return total;
}

double exact_expected_size_squared(const FractionalDilate& alpha, int n) {
    require_probability_weights(alpha, "exact_expected_size_squared");
    const auto& entries = alpha.entries();
    if (entries.empty())
        throw std::invalid_argument("exact_expected_size_squared: empty dilate");
    checked_word_count(entries.size(), n, "exact_expected_size_squared");
    std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
    double sum_p = 0.0, sum_p2 = 0.0;
    do {
        double prob = 1.0;
        for (std::size_t i = 0; i < digits.size(); ++i) prob *= entries[digits[i]].second;
        sum_p += prob;
        sum_p2 += prob * prob;
    } while (advance(digits, entries.size()));
    return sum_p * sum_p + sum_p - sum_p2;
}

double exact_expected_same_diff_size(const FractionalDilate& alpha, int n) {
    require_probability_weights(alpha, "exact_expected_same_diff_size");
    const auto& entries = alpha.entries();
    if (entries.empty())
        throw std::invalid_argument("exact_expected_same_diff_size: empty dilate");
    const int d = alpha.dimension();
    const std::size_t m = entries.size();
    checked_word_count(m, n, "exact_expected_same_diff_size");

    // Per-block difference alphabet s - s' and per-word probabilities.
    std::vector<Point> block_diffs;
    {
        std::unordered_set<Point, PointHash> seen;
        for (const auto& [pa, wa] : entries) {
            (void)wa;
            for (const auto& [pb, wb] : entries) {
                (void)wb;
                Point diff(d);
                for (int i = 0; i < d; ++i) diff[i] = pa[i] - pb[i];
                if (seen.insert(diff).second) block_diffs.push_back(std::move(diff));
            }
        }
        std::sort(block_diffs.begin(), block_diffs.end());
    }
    checked_word_count(block_diffs.size(), n, "exact_expected_same_diff_size differences");

    const auto block_weight = [&](const Point& b) { return alpha.weight_at(b); };

    // P(S nonempty) covers the zero difference.
    double total = prob_nonempty(alpha, n);

    const Point zero_block(static_cast<std::size_t>(d), 0);
    std::vector<std::size_t> vdig(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> xdig(static_cast<std::size_t>(n), 0);
    do {
        bool is_zero = true;
        for (std::size_t i = 0; i < vdig.size() && is_zero; ++i)
            is_zero = block_diffs[vdig[i]] == zero_block;
        if (is_zero) continue;

        // log P(no x with both x and x - v present), multiplied over the
        // chains x, x + v, x + 2v, ... inside supp^n.
        double log_none = 0.0;
        std::fill(xdig.begin(), xdig.end(), 0);
        do {
            // Chain heads only: x - v must leave supp^n in some block.
            bool head = false;
            Point shifted(d);
            for (std::size_t i = 0; i < xdig.size() && !head; ++i) {
                const Point& x_block = entries[xdig[i]].first;
                const Point& v_block = block_diffs[vdig[i]];
                for (int c = 0; c < d; ++c) shifted[c] = x_block[c] - v_block[c];
                head = !(block_weight(shifted) > 0.0);
            }
            if (!head) continue;

            // Walk the chain forward with the no-adjacent-pair recurrence.
            std::vector<Point> blocks(xdig.size());
            for (std::size_t i = 0; i < xdig.size(); ++i) blocks[i] = entries[xdig[i]].first;
            double a_absent = 1.0, a_present = 0.0;
            bool in_range = true;
            while (in_range) {
                double pi = 1.0;
                for (const Point& b : blocks) pi *= block_weight(b);
                const double next_absent = (a_absent + a_present) * (1.0 - pi);
                a_present = a_absent * pi;
                a_absent = next_absent;
                for (std::size_t i = 0; i < blocks.size(); ++i) {
                    const Point& v_block = block_diffs[vdig[i]];
                    for (int c = 0; c < d; ++c) blocks[i][c] += v_block[c];
                    if (in_range) in_range = block_weight(blocks[i]) > 0.0;
                }
            }
            log_none += std::log(a_absent + a_present);
        } while (advance(xdig, m));
        total += -std::expm1(log_none);
    } while (advance(vdig, block_diffs.size()));

    return total;
}

SampleStats estimate_sizes(const FractionalDilate& alpha, Coord k, int n,
                           std::size_t trials, std::uint64_t seed, bool same_set) {
    if (trials == 0) throw std::invalid_argument("estimate_sizes: need trials >= 1");
    require_probability_weights(alpha, "estimate_sizes");
    checked_word_count(alpha.support_size(), n, "estimate_sizes");

    std::vector<double> set_sizes(trials), sum_sizes(trials), restricted(trials),
        nonempty(trials);
    const bool with_restricted = same_set && k == 1;

    parallel_for_blocks(trials, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            const IntSet s = draw_from_power(alpha, n, seed, 2 * t);
            const IntSet ts = same_set ? s : draw_from_power(alpha, n, seed, 2 * t + 1);
            set_sizes[t] = static_cast<double>(s.size());
            sum_sizes[t] = static_cast<double>(dilate_sum(s, k, ts).size());
            restricted[t] =
                with_restricted ? static_cast<double>(restricted_sum_less(s, s).size()) : 0.0;
            nonempty[t] = s.empty() ? 0.0 : 1.0;
        }
    });

    SampleStats out;
    out.trials = trials;
    out.set_size = summarize(set_sizes);
    out.sum_size = summarize(sum_sizes);
    out.restricted_sum = summarize(restricted);
    out.nonempty = summarize(nonempty);
    return out;
}

SampleStats estimate_sizes(const FractionalDilate& alpha, Coord k,
                           const FractionalDilate& beta, int n,
                           std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("estimate_sizes: need trials >= 1");
    require_probability_weights(alpha, "estimate_sizes");
    require_probability_weights(beta, "estimate_sizes");
    if (alpha.dimension() != beta.dimension())
        throw std::invalid_argument("estimate_sizes: dimension mismatch");
    checked_word_count(alpha.support_size(), n, "estimate_sizes");
    checked_word_count(beta.support_size(), n, "estimate_sizes");

    std::vector<double> set_sizes(trials), sum_sizes(trials), nonempty(trials);
    parallel_for_blocks(trials, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            const IntSet s = draw_from_power(alpha, n, seed, 2 * t);
            const IntSet ts = draw_from_power(beta, n, seed, 2 * t + 1);
            set_sizes[t] = static_cast<double>(s.size());
            sum_sizes[t] = static_cast<double>(dilate_sum(s, k, ts).size());
            nonempty[t] = s.empty() ? 0.0 : 1.0;
        }
    });

    SampleStats out;
    out.trials = trials;
    out.set_size = summarize(set_sizes);
    out.sum_size = summarize(sum_sizes);
    out.nonempty = summarize(nonempty);
    return out;
}

std::vector<Point> rainbow_filter(const std::vector<Point>& words,
                                  const IntSet& support) {
    const int d = support.dimension();
    std::vector<Point> out;
    for (const Point& w : words) {
        if (w.size() % static_cast<std::size_t>(d) != 0)
            throw std::invalid_argument("rainbow_filter: word length not a multiple of block size");
        const std::size_t blocks = w.size() / static_cast<std::size_t>(d);
        std::unordered_set<Point, PointHash> covered;
        Point block(static_cast<std::size_t>(d));
        for (std::size_t b = 0; b < blocks; ++b) {
            std::copy(w.begin() + b * d, w.begin() + (b + 1) * d, block.begin());
            if (support.contains(block)) covered.insert(block);
        }
        if (covered.size() == support.size()) out.push_back(w);
    }
    return out;
}

RainbowComparison rainbow_comparison(const FractionalDilate& alpha, Coord k, int n,
                                     std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("rainbow_comparison: need trials >= 1");
    require_probability_weights(alpha, "rainbow_comparison");
    const IntSet alphabet = dilate_sum(alpha.support(), k, alpha.support());
    const auto g = static_cast<std::int64_t>(alphabet.size());

    // Rainbow words of alphabet^n are the surjections onto g symbols.
    std::int64_t rainbow_words = 0;
    if (g <= n) {
        for (std::int64_t j = 0; j <= g; ++j) {
            std::int64_t binom = 1;
            for (std::int64_t i = 1; i <= j; ++i) binom = binom * (g - i + 1) / i;
            std::int64_t power = 1;
            for (int i = 0; i < n; ++i) power *= (g - j);
            rainbow_words += (j % 2 == 0 ? 1 : -1) * binom * power;
        }
    }

    std::vector<double> same_counts(trials), indep_counts(trials);
    parallel_for_blocks(trials, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            const IntSet s = draw_from_power(alpha, n, seed, 2 * t);
            const IntSet u = draw_from_power(alpha, n, seed, 2 * t + 1);
            same_counts[t] = static_cast<double>(
                rainbow_filter(dilate_sum(s, k, s).elements(), alphabet).size());
            indep_counts[t] = static_cast<double>(
                rainbow_filter(dilate_sum(s, k, u).elements(), alphabet).size());
        }
    });

    RainbowComparison out;
    out.same_set = summarize(same_counts);
    out.independent = summarize(indep_counts);
    out.rainbow_word_count = static_cast<std::size_t>(std::max<std::int64_t>(0, rainbow_words));
    return out;
}

}  // namespace dilatelab
