#include "dilatelab/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "dilatelab/errors.hpp"

namespace dilatelab {

namespace {

// Shared three-regime minimization of f(p) = sum_t count_t * w_t^p over
// p in [0,1], for positive weights with positive (possibly non-integer)
// multiplicities.
NormResult weighted_norm(const std::vector<std::pair<double, double>>& weighted) {
    double d_at_1 = 0.0;  // f'(1) = sum c w ln w
    double d_at_0 = 0.0;  // f'(0) = sum c ln w
    for (const auto& [w, c] : weighted) {
        const double lw = std::log(w);
        d_at_1 += c * w * lw;
        d_at_0 += c * lw;
    }
    if (d_at_1 < 0.0 && d_at_0 > 0.0)
        throw std::logic_error("norm: derivative order violates convexity");

    const auto value_at = [&](double p) {
        double f = 0.0;
        for (const auto& [w, c] : weighted) f += c * std::exp(p * std::log(w));
        return f;
    };

    if (d_at_1 < 0.0) {
        double mass = 0.0;
        for (const auto& [w, c] : weighted) mass += c * w;
        return NormResult{Regime::spartan, 1.0, mass};
    }
    if (d_at_0 > 0.0) {
        double support = 0.0;
        for (const auto& [w, c] : weighted) support += c;
        return NormResult{Regime::opulent, 0.0, support};
    }
    // f'(0) <= 0 <= f'(1): bisect the increasing derivative. Boundary ties
    // (a derivative exactly zero) converge to the matching endpoint.
    const auto slope_at = [&](double p) {
        double g = 0.0;
        for (const auto& [w, c] : weighted) {
            const double lw = std::log(w);
            g += c * std::exp(p * lw) * lw;
        }
        return g;
    };
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (slope_at(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double p_star = 0.5 * (lo + hi);
    return NormResult{Regime::comfortable, p_star, value_at(p_star)};
}

}  // namespace

FractionalDilate::FractionalDilate(int dimension) : dimension_(dimension) {
    if (dimension < 1)
        throw std::invalid_argument("FractionalDilate: dimension must be >= 1");
}

FractionalDilate::FractionalDilate(int dimension,
                                   std::vector<std::pair<Point, double>> entries)
    : dimension_(dimension), entries_(std::move(entries)) {
    if (dimension < 1)
        throw std::invalid_argument("FractionalDilate: dimension must be >= 1");
    for (const auto& [p, w] : entries_) {
        if (static_cast<int>(p.size()) != dimension)
            throw std::invalid_argument("FractionalDilate: point dimension mismatch");
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("FractionalDilate: weights must be positive and finite");
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].first == entries_[i - 1].first)
            throw std::invalid_argument("FractionalDilate: duplicate point");
    }
}

double FractionalDilate::weight_at(const Point& p) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), p,
        [](const auto& e, const Point& q) { return e.first < q; });
    if (it == entries_.end() || it->first != p) return 0.0;
    return it->second;
}

IntSet FractionalDilate::support() const {
    std::vector<Point> pts;
    pts.reserve(entries_.size());
    for (const auto& [p, w] : entries_) {
        (void)w;
        pts.push_back(p);
    }
    return IntSet(dimension_, std::move(pts));
}

double FractionalDilate::total_mass() const {
    double m = 0.0;
    for (const auto& [p, w] : entries_) {
        (void)p;
        m += w;
    }
    return m;
}

FractionalDilate FractionalDilate::uniform(const IntSet& S, double q) {
    if (!(q > 0.0) || !std::isfinite(q))
        throw std::invalid_argument("FractionalDilate::uniform: weight must be positive");
    std::vector<std::pair<Point, double>> entries;
    entries.reserve(S.size());
    for (const auto& p : S.elements()) entries.emplace_back(p, q);
    return FractionalDilate(S.dimension(), std::move(entries));
}

FractionalDilate FractionalDilate::of_ints(
    std::vector<std::pair<Coord, double>> weighted) {
    std::vector<std::pair<Point, double>> entries;
    entries.reserve(weighted.size());
    for (const auto& [v, w] : weighted) entries.emplace_back(Point{v}, w);
    return FractionalDilate(1, std::move(entries));
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::spartan: return "spartan";
        case Regime::opulent: return "opulent";
        case Regime::comfortable: return "comfortable";
    }
    return "unknown";
}

Regime classify(const FractionalDilate& gamma) {
    if (gamma.entries().empty())
        throw std::invalid_argument("classify: empty dilate");
    double d_at_1 = 0.0, d_at_0 = 0.0;
    for (const auto& [p, w] : gamma.entries()) {
        (void)p;
        d_at_1 += w * std::log(w);
        d_at_0 += std::log(w);
    }
    if (d_at_1 < 0.0 && d_at_0 > 0.0)
        throw std::logic_error("classify: derivative order violates convexity");
    if (d_at_1 < 0.0) return Regime::spartan;
    if (d_at_0 > 0.0) return Regime::opulent;
    return Regime::comfortable;
}

NormResult norm(const FractionalDilate& gamma) {
    if (gamma.entries().empty())
        throw std::invalid_argument("norm: empty dilate");
    std::vector<std::pair<double, double>> weighted;
    weighted.reserve(gamma.entries().size());
    for (const auto& [p, w] : gamma.entries()) {
        (void)p;
        weighted.emplace_back(w, 1.0);
    }
    return weighted_norm(weighted);
}

FractionalDilate convolve(const FractionalDilate& alpha, Coord k,
                          const FractionalDilate& beta) {
    if (alpha.dimension() != beta.dimension())
        throw std::invalid_argument("convolve: dimension mismatch");
    check_budget(static_cast<double>(alpha.support_size()) *
                     static_cast<double>(beta.support_size()),
                 "convolve pair enumeration");
    std::unordered_map<Point, double, PointHash> acc;
    acc.reserve(alpha.support_size() * 2);
    for (const auto& [pa, wa] : alpha.entries()) {
        for (const auto& [pb, wb] : beta.entries()) {
            acc[dilate_point(pa, k, pb)] += wa * wb;
        }
    }
    std::vector<std::pair<Point, double>> entries(acc.begin(), acc.end());
    return FractionalDilate(alpha.dimension(), std::move(entries));
}

double entropy_bound(const FractionalDilate& gamma, const std::vector<double>& y) {
    const auto& entries = gamma.entries();
    if (y.size() != entries.size())
        throw std::invalid_argument("entropy_bound: weight vector length mismatch");
    double total = 0.0;
    for (double v : y) {
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument("entropy_bound: weights must be nonnegative");
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("entropy_bound: weights must sum to 1");
    double h = 0.0;       // entropy in bits
    double log2_prod = 0.0;  // log2 prod gamma^y
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] > 0.0) {
            h -= y[i] * std::log2(y[i]);
            log2_prod += y[i] * std::log2(entries[i].second);
        }
    }
    return std::exp2(h + std::min(0.0, log2_prod));
}

std::vector<double> optimal_entropy_weights(const FractionalDilate& gamma) {
    const NormResult r = norm(gamma);
    const auto& entries = gamma.entries();
    std::vector<double> y(entries.size());
    double z = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        y[i] = std::exp(r.p_star * std::log(entries[i].second));
        z += y[i];
    }
    for (double& v : y) v /= z;
    return y;
}

FractionalDilate uniform_dilate(const IntSet& S, double q) {
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("uniform_dilate: need q in (0, 1)");
    return FractionalDilate::uniform(S, q);
}

NormResult ruzsa_piecewise_norm(const PiecewiseNormInput& in) {
    if (in.spectrum.empty())
        throw std::invalid_argument("ruzsa_piecewise_norm: empty spectrum");
    if (!(in.q > 0.0) || !(in.M > 0.0))
        throw std::invalid_argument("ruzsa_piecewise_norm: q and M must be positive");
    double mass = 0.0;
    for (const auto& [lambda, count] : in.spectrum) {
        if (!(lambda > 0.0) || !(count > 0.0))
            throw std::invalid_argument("ruzsa_piecewise_norm: spectrum entries must be positive");
        mass += lambda * count;
    }
    if (std::abs(mass - in.M * in.M) > 1e-6 * in.M * in.M)
        throw std::invalid_argument("ruzsa_piecewise_norm: spectrum mass must equal M^2");
    std::vector<std::pair<double, double>> weighted;
    weighted.reserve(in.spectrum.size());
    for (const auto& [lambda, count] : in.spectrum)
        weighted.emplace_back(in.q * in.q * lambda, count);
    return weighted_norm(weighted);
}

}  // namespace dilatelab
