#include "dilatelab/logspace.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace dilatelab {

double log_sum_exp(std::vector<double> terms) {
    if (terms.empty()) return -std::numeric_limits<double>::infinity();
    std::sort(terms.begin(), terms.end(), std::greater<>());
    const double top = terms.front();
    if (!std::isfinite(top)) return top;
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - top);
    return top + std::log(acc);
}

double signed_log_sum(const std::vector<std::pair<int, double>>& terms) {
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& [sign, logmag] : terms) {
        (void)sign;
        top = std::max(top, logmag);
    }
    if (!std::isfinite(top)) throw std::domain_error("signed log sum of empty/zero terms");
    // Positive and negative magnitudes are each accumulated largest-first
    // against the shared reference before the single subtraction.
    std::vector<double> pos, neg;
    for (const auto& [sign, logmag] : terms) {
        if (sign > 0)
            pos.push_back(logmag);
        else if (sign < 0)
            neg.push_back(logmag);
    }
    std::sort(pos.begin(), pos.end(), std::greater<>());
    std::sort(neg.begin(), neg.end(), std::greater<>());
    double acc_pos = 0.0, acc_neg = 0.0;
    for (double t : pos) acc_pos += std::exp(t - top);
    for (double t : neg) acc_neg += std::exp(t - top);
    const double diff = acc_pos - acc_neg;
    if (!(diff > 0.0)) throw std::domain_error("signed log sum is not positive");
    return top + std::log(diff);
}

double log_binomial(double n, double r) {
    if (r < 0.0 || r > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

}  // namespace dilatelab
