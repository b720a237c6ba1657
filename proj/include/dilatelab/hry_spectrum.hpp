#pragma once

// Subtraction spectra of the simplex level sets A_{k,d} (nonnegative
// (d+1)-tuples summing to k) and the growth exponent beta defined by
// matching |A - A| against a power of |A| at the sparseness threshold.
// Everything is done in log space so (k, d) in the tens of thousands is
// routine; an exact 128-bit path cross-checks small cases.

#include <cstdint>
#include <optional>
#include <vector>

#include "dilatelab/int_set.hpp"

namespace dilatelab {

// One spectrum class: mu tuples of A - A whose fiber above them has size
// lambda. Values are carried as logs; exact integer values accompany them
// when every binomial involved fits in unsigned 128-bit arithmetic.
struct SpectrumClass {
    double log_lambda;
    double log_mu;
    std::optional<unsigned __int128> lambda_exact;
    std::optional<unsigned __int128> mu_exact;
};

struct SpectrumSummary {
    std::int64_t k = 0;
    std::int64_t d = 0;
    std::vector<SpectrumClass> classes;  // indexed by t = 0..k
    double log_set_size = 0.0;           // ln C(k+d, d) = ln |A_{k,d}|
};

// Closed-form spectrum of A_{k,d} - A_{k,d}: for t = 0..k,
//   lambda_t = C(k+d-t, d),
//   mu_0 = 1, mu_t = sum_{i=1}^{min(t,d)} C(d+1,i) C(t-1,i-1) C(t+d-i, d-i).
// Mass identity: sum_t mu_t lambda_t = C(k+d, d)^2.
SpectrumSummary hry_subtraction_spectrum(std::int64_t k, std::int64_t d);

// Brute-force spectrum of A + k*A via full enumeration: pairs (fiber size,
// number of points with that fiber size), sorted by fiber size descending.
std::vector<std::pair<std::int64_t, std::int64_t>> spectrum(const IntSet& A,
                                                            Coord k);

// ln p* where p* is the largest scalar weight keeping q * 1_A spartan for
// the subtraction dilate:  ln p* = - sum mu lambda ln lambda / (2 sum mu lambda).
double spartan_threshold(std::int64_t k, std::int64_t d);

struct BetaEvaluation {
    std::int64_t k = 0;
    std::int64_t d = 0;
    double log_q = 0.0;         // ln of the scalar weight used
    double log_set_mass = 0.0;  // ln(q * |A_{k,d}|), the norm of q * 1_A
    double log_sum_support = 0.0;  // ln C(2k+d, d) = ln|A + A|
    double beta = 0.0;          // log_sum_support / log_set_mass
};

// Sum-vs-survival exponent at the spartan threshold weight q = p*: the
// weight makes the subtraction dilate's norm exactly (q |A|)^2 (difference
// exponent 2), while the sum dilate's norm is at most its support count,
// giving
//   beta = ln C(2k+d, d) / (ln p* + ln C(k+d, d)).
// Throws std::domain_error when p* C(k+d, d) <= 1 (the surviving mass is
// not expected to exceed a point, so the exponent is meaningless).
BetaEvaluation beta(std::int64_t k, std::int64_t d);

// Same quantity with an explicit weight q instead of the threshold.
BetaEvaluation beta_with_weight(std::int64_t k, std::int64_t d, double log_q);

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t step = 1;
};

enum class SearchMode { grid, descent };

struct SearchResult {
    std::vector<BetaEvaluation> evaluated;  // sorted by beta ascending
    BetaEvaluation best;                    // minimal beta (ties: lex smallest (k, d))
};

// Minimize beta over a (k, d) range. Grid mode evaluates every lattice
// point; descent mode walks coordinate steps downhill on the same lattice
// from the range midpoint until no neighbor improves. Evaluation is
// parallelized; the reduction is a deterministic index-ordered min, so the
// result is independent of thread count.
SearchResult search_beta(Range k_range, Range d_range, SearchMode mode);

struct WeightedBetaEvaluation {
    double mass = 0.0;           // ||alpha|| = total weight of the base dilate
    double diff_norm = 0.0;      // ||alpha - alpha|| = mass^2 (spartan)
    double log_sum_support = 0.0;  // ln C(4+d, d) = ln|A + A|
    double beta = 0.0;           // log_sum_support / ln(mass)
};

// Two-weight refinement for k = 2: weight w_double on the tuples with a
// coordinate equal to 2 and w_mixed on those with two coordinates equal to
// 1. The subtraction dilate must be spartan — checked from its exact
// five-class weighted spectrum, with boundary tolerance 1e-12 relative —
// making its norm the squared mass and the difference exponent exactly 2;
// the sum exponent is then read off the sum dilate's support count.
// Requires k == 2 (the class decomposition is specific to that level).
WeightedBetaEvaluation weighted_hry_beta(std::int64_t k, std::int64_t d,
                                         double w_double, double w_mixed);

}  // namespace dilatelab
