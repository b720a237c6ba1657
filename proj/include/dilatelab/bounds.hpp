#pragma once

// Inequality checks, counterexample searches, and the reference geometry of
// the feasible regions F_{1,2} and F_{1,-1} in the (x, y) exponent plane
// x = log|A + A| / log|A|, y = log|A + k·A| / log|A|.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dilatelab/constructions.hpp"
#include "dilatelab/fractional.hpp"
#include "dilatelab/int_set.hpp"

namespace dilatelab {

struct PropertyCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // witness values, human-readable
};

// |A+A| * |A| <= |A+2A|^2 for a single set.
PropertyCheck plunnecke_check(const IntSet& A);

// plunnecke_check over every construction family at small parameters plus
// `random_sets` random subsets of [0, 100) drawn from `seed`.
PropertyCheck plunnecke_corpus(std::uint64_t seed, std::size_t random_sets);

// Verifies A is Sidon (|A+A| = m(m+1)/2, throws std::invalid_argument if
// not), then asserts strict |A+2A| > |A+A|.
PropertyCheck sidon_dilate_check(const IntSet& A);

// sidon_dilate_check over greedy Sidon prefixes m = 2..max_m.
PropertyCheck sidon_corpus(int max_m);

// Minimal sumset-size profile on the Boolean hypercube:
//   f(i, j) = i j                     when i <= 1 or j <= 1,
//   f(i, j) = min over splits i1+i2 = i, j1+j2 = j of
//             f(i1, j1) + f(i2, j2) + max(f(i1, j2), f(i2, j1)),
// where a split may not reproduce the whole problem: (i1, j1) must avoid
// (0,0), (i,j), (i,0) and (0,j) — the last two would feed (i, j) back in
// through the max term. Memoized; i, j <= 40 (throws budget_error beyond).
std::int64_t f_dp(int i, int j);

// |A+B| >= f_dp(|A|, |B|) and |A+B| >= (|A||B|)^{log_4 3} - 1e-9 for
// A, B subsets of {0,1}^n (validated). Dimension n <= 4.
PropertyCheck hypercube_lowerbound_check(const IntSet& A, const IntSet& B);

// Sweeps hypercube_lowerbound_check over subset pairs of {0,1}^n:
// exhaustive for n <= 2, `count` random pairs from `seed` for n <= 4.
PropertyCheck hypercube_sweep(int n, SubsetMode mode, std::size_t count,
                              std::uint64_t seed);

enum class RegionId { f12, f1m1 };

enum class LineKind { boundary, reference };

// Piecewise-linear line in the exponent square [1,2]^2, points sorted by x.
struct RegionLine {
    std::string label;
    LineKind kind = LineKind::reference;
    std::vector<std::pair<double, double>> points;
};

// Reference geometry. F_{1,2}: upper bound lines y = 2.95x - 1.95 and
// y = 4x/3, lower bound line y = 1 + x/2, attained boundary
// y = min(2x - 1, (log_3 4) x) with breakpoint at x = log_{9/4} 3, and the
// diagonal. F_{1,-1}: the diagonal, the attained boundary through
// (1.7354, 2), and the excluded segment y = 2, x < 3/2.
std::vector<RegionLine> region_lines(RegionId region);

// (ln|A+2A| - ln|A|) / (ln|A+A| - ln|A|) for A = H_n ∪ I_k with
// k = floor(alpha * n), evaluated from the closed forms in log space.
double converse_ratio(std::int64_t n, double alpha);

// converse_ratio at n = 10^2, 10^3, 10^4: checks the sequence is strictly
// increasing and the final value exceeds `threshold`.
PropertyCheck converse_check(double alpha = 0.55, double threshold = 1.95);

// Attainable point of A = H_n ∪ I_{floor(n / beta)} under (1, 2) together
// with its max-norm distance to the limit (f12_limit_x(beta), beta).
struct ConvergencePoint {
    std::int64_t n = 0;
    std::int64_t k = 0;
    double x = 0.0;
    double y = 0.0;
    double err = 0.0;
};

// x-coordinate the points above converge to: (beta + 1)/2 for
// beta <= ln4 / ln(9/4), else beta * log_4 3.
double f12_limit_x(double beta);

std::vector<ConvergencePoint> f12_convergence(double beta,
                                              const std::vector<std::int64_t>& ns);

// One confirmed failure of a tested norm inequality.
struct DilateCounterexample {
    std::string statement;   // the inequality that failed, human-readable
    FractionalDilate alpha;
    double lhs = 0.0;        // violated comparison: lhs > rhs + 1e-7
    double rhs = 0.0;
};

// Tests, on interval indicators 1_{0..m} (m+1 <= support_size) and `trials`
// random fractional sets of the given support size:
//   (1) ||a|| * ||a+2a|| <= ||a+a||^2
//   (2) ||a+2a|| <= (log_3 4) * ||a+a||            (linear reading)
//  (2') log||a+2a|| <= (log_3 4) * log||a+a||      (exponent reading)
//   (3) ||a+2a|| >= ||a+a||
// A violation needs a 1e-7 margin and is re-verified with all norms
// recomputed on a 200-point p-grid before it is reported.
std::vector<DilateCounterexample> dilate_inequality_search(std::size_t trials,
                                                           int support_size,
                                                           std::uint64_t seed);

// Searches subsets of [0, N) for a set with |A+A| > |A+2A|, normalized to
// 0 in A and gcd(A) = 1. Exhaustive in ascending-mask order while N * 2^N
// fits the element budget (the lowest mask wins, independent of threading);
// beyond that, `random_trials` random subsets (sizes <= max_size when
// positive) drawn deterministically from `seed`.
std::optional<IntSet> mst2d_search(int N, std::size_t max_size = 0,
                                   std::uint64_t seed = 1,
                                   std::size_t random_trials = 200000);

}  // namespace dilatelab
