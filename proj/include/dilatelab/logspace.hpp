#pragma once

// Natural-log-space arithmetic for quantities far beyond double range:
// log-sum-exp accumulation, signed log-space sums, and log binomial
// coefficients via lgamma.

#include <vector>

namespace dilatelab {

// log(sum_i exp(terms[i])). Accumulates against the maximum term, adding the
// rest in descending order to bound roundoff. Empty input -> -inf.
double log_sum_exp(std::vector<double> terms);

// log of a sum of signed terms given as (sign, log|term|) pairs. The total
// must be strictly positive; throws std::domain_error otherwise.
double signed_log_sum(const std::vector<std::pair<int, double>>& terms);

// log C(n, r) via lgamma; exact enough (|rel err| < 1e-13) for all n <= 1e9.
double log_binomial(double n, double r);

}  // namespace dilatelab
