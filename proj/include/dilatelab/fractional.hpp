#pragma once

// Fractional dilates: finitely supported maps gamma : Z^d -> (0, infinity),
// their three-regime norm inf_{p in [0,1]} sum_s gamma(s)^p, convolution-style
// combination under x |-> a + k*b, and the associated entropy bound.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dilatelab/int_set.hpp"
#include "dilatelab/point.hpp"

namespace dilatelab {

// Finitely supported positive weight function on Z^d. Entries are kept
// sorted by point (lexicographic) with strictly positive weights.
class FractionalDilate {
  public:
    explicit FractionalDilate(int dimension);
    FractionalDilate(int dimension, std::vector<std::pair<Point, double>> entries);

    int dimension() const { return dimension_; }
    std::size_t support_size() const { return entries_.size(); }
    const std::vector<std::pair<Point, double>>& entries() const { return entries_; }

    // Weight at p, or 0 when p is outside the support.
    double weight_at(const Point& p) const;

    IntSet support() const;
    double total_mass() const;  // sum of weights

    // Scalar weight q on every element of S (the "uniform" dilate q * 1_S).
    static FractionalDilate uniform(const IntSet& S, double q);

    // One-dimensional convenience: weight list over given integer points.
    static FractionalDilate of_ints(std::vector<std::pair<Coord, double>> weighted);

  private:
    int dimension_;
    std::vector<std::pair<Point, double>> entries_;
};

enum class Regime { spartan, opulent, comfortable };

std::string regime_name(Regime r);

struct NormResult {
    Regime regime;
    double p_star;  // minimizing exponent in [0,1]
    double value;   // sum_s gamma(s)^{p_star}
};

// Regime of f(p) = sum gamma^p on [0,1]:
//   f'(1) = sum gamma ln gamma < 0  -> spartan   (minimum at p = 1)
//   f'(0) = sum ln gamma       > 0  -> opulent   (minimum at p = 0)
//   otherwise                        -> comfortable (interior or boundary tie)
// Boundary ties (a derivative exactly zero) classify as comfortable with
// p_star at the corresponding endpoint.
Regime classify(const FractionalDilate& gamma);

// Full norm evaluation. Comfortable minima are located by bisecting
// g(p) = sum gamma^p ln gamma, which is increasing since f is convex.
NormResult norm(const FractionalDilate& gamma);

// (alpha +_k beta)(n) = sum_{i + k j = n} alpha(i) beta(j).
FractionalDilate convolve(const FractionalDilate& alpha, Coord k,
                          const FractionalDilate& beta);

// 2^{H(y)} * min(1, prod_s gamma(s)^{y(s)}) for a probability vector y given
// in the same order as gamma's support; y must sum to 1 within 1e-12.
double entropy_bound(const FractionalDilate& gamma, const std::vector<double>& y);

// The y at which entropy_bound(gamma, y) meets norm(gamma).value:
// y*(s) = gamma(s)^{p*} / sum_t gamma(t)^{p*}.
std::vector<double> optimal_entropy_weights(const FractionalDilate& gamma);

// q * 1_S for q in (0, 1); throws std::invalid_argument otherwise.
FractionalDilate uniform_dilate(const IntSet& S, double q);

// Norm of q * gamma where gamma has multiplicity spectrum "lambda(value) ->
// count" given as (lambda, count) pairs with sum count * lambda == M^2
// (validated to 1e-6 relative). Evaluates the piecewise closed form
//   min over regimes of (qM)^2 | N | q^{2p} sum count * lambda^p
// via the same three-regime classification applied to the spectrum.
struct PiecewiseNormInput {
    std::vector<std::pair<double, double>> spectrum;  // (lambda, count)
    double M;                                         // mass normalizer
    double q;                                         // scalar weight
};

NormResult ruzsa_piecewise_norm(const PiecewiseNormInput& in);

}  // namespace dilatelab
