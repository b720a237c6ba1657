#include "dilatelab/core_sets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "dilatelab/errors.hpp"

namespace dilatelab {

namespace {

// Largest 1-d result range handled with a dense presence bitmap instead of a
// hash set; above this the hash path is used.
constexpr double kDenseRangeLimit = double(std::size_t{1} << 26);

struct DenseWindow {
    bool usable = false;
    Coord lo = 0;
    std::size_t width = 0;
};

// Window [lo, hi] spanning all values a + k*b for 1-d inputs, if the span is
// small enough for a bitmap. The extremes are attained at endpoint
// combinations because the map is monotone in each argument.
DenseWindow dense_window(const IntSet& a, Coord k, const IntSet& b) {
    DenseWindow w;
    const Coord amin = a.elements().front()[0];
    const Coord amax = a.elements().back()[0];
    const Coord bmin = b.elements().front()[0];
    const Coord bmax = b.elements().back()[0];
    Coord lo, hi;
    try {
        const Coord c1 = checked_add(amin, checked_mul(k, bmin));
        const Coord c2 = checked_add(amin, checked_mul(k, bmax));
        const Coord c3 = checked_add(amax, checked_mul(k, bmin));
        const Coord c4 = checked_add(amax, checked_mul(k, bmax));
        lo = std::min(std::min(c1, c2), std::min(c3, c4));
        hi = std::max(std::max(c1, c2), std::max(c3, c4));
    } catch (const std::overflow_error&) {
        return w;  // fall back; per-pair checked arithmetic will report it
    }
    const double span = static_cast<double>(hi) - static_cast<double>(lo) + 1.0;
    if (span > kDenseRangeLimit) return w;
    w.usable = true;
    w.lo = lo;
    w.width = static_cast<std::size_t>(span);
    return w;
}

}  // namespace

MultiplicityMap::MultiplicityMap(int dimension,
                                 std::vector<std::pair<Point, std::int64_t>> entries)
    : dimension_(dimension), entries_(std::move(entries)) {
    if (dimension < 1) throw std::invalid_argument("MultiplicityMap: dimension must be >= 1");
    for (const auto& [p, c] : entries_) {
        if (static_cast<int>(p.size()) != dimension)
            throw std::invalid_argument("MultiplicityMap: point dimension mismatch");
        if (c <= 0) throw std::invalid_argument("MultiplicityMap: counts must be positive");
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].first == entries_[i - 1].first)
            throw std::invalid_argument("MultiplicityMap: duplicate point");
    }
}

std::int64_t MultiplicityMap::total() const {
    std::int64_t sum = 0;
    for (const auto& [p, c] : entries_) {
        (void)p;
        if (__builtin_add_overflow(sum, c, &sum))
            throw std::overflow_error("MultiplicityMap::total overflow");
    }
    return sum;
}

IntSet MultiplicityMap::support() const {
    std::vector<Point> pts;
    pts.reserve(entries_.size());
    for (const auto& [p, c] : entries_) {
        (void)c;
        pts.push_back(p);
    }
    return IntSet(dimension_, std::move(pts));
}

std::int64_t MultiplicityMap::count_at(const Point& p) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), p,
        [](const auto& e, const Point& q) { return e.first < q; });
    if (it == entries_.end() || it->first != p) return 0;
    return it->second;
}

IntSet dilate_sum(const IntSet& a, Coord k, const IntSet& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("dilate_sum: dimension mismatch");
    if (a.empty() || b.empty()) return IntSet(a.dimension());
    check_budget(static_cast<double>(a.size()) * static_cast<double>(b.size()),
                 "dilate_sum pair enumeration");

    if (a.dimension() == 1) {
        const DenseWindow w = dense_window(a, k, b);
        if (w.usable) {
            std::vector<std::uint8_t> seen(w.width, 0);
            for (const auto& pa : a.elements()) {
                const Coord base = pa[0];
                for (const auto& pb : b.elements()) {
                    seen[static_cast<std::size_t>(base + k * pb[0] - w.lo)] = 1;
                }
            }
            std::vector<Point> pts;
            for (std::size_t i = 0; i < seen.size(); ++i) {
                if (seen[i]) pts.push_back(Point{w.lo + static_cast<Coord>(i)});
            }
            return IntSet(1, std::move(pts));
        }
    }

    std::unordered_set<Point, PointHash> out;
    out.reserve(a.size() * 2);
    for (const auto& pa : a.elements()) {
        for (const auto& pb : b.elements()) {
            out.insert(dilate_point(pa, k, pb));
            check_budget(static_cast<double>(out.size()), "dilate_sum result");
        }
    }
    return IntSet(a.dimension(), std::vector<Point>(out.begin(), out.end()));
}

MultiplicityMap multiplicity_map(const IntSet& a, Coord k, const IntSet& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("multiplicity_map: dimension mismatch");
    check_budget(static_cast<double>(a.size()) * static_cast<double>(b.size()),
                 "multiplicity_map pair enumeration");
    std::unordered_map<Point, std::int64_t, PointHash> counts;
    counts.reserve(a.size() * 2);
    for (const auto& pa : a.elements()) {
        for (const auto& pb : b.elements()) {
            ++counts[dilate_point(pa, k, pb)];
        }
    }
    std::vector<std::pair<Point, std::int64_t>> entries(counts.begin(), counts.end());
    return MultiplicityMap(a.dimension(), std::move(entries));
}

IntSet cartesian_product(const IntSet& a, const IntSet& b) {
    const double total = static_cast<double>(a.size()) * static_cast<double>(b.size());
    check_budget(total, "cartesian_product");
    std::vector<Point> pts;
    pts.reserve(a.size() * b.size());
    for (const auto& pa : a.elements()) {
        for (const auto& pb : b.elements()) {
            Point p = pa;
            p.insert(p.end(), pb.begin(), pb.end());
            pts.push_back(std::move(p));
        }
    }
    return IntSet(a.dimension() + b.dimension(), std::move(pts));
}

AttainablePoint attainable_point(const IntSet& a, Coord k, Coord l) {
    if (a.size() < 2)
        throw std::invalid_argument("attainable_point: need at least two elements");
    const double logn = std::log(static_cast<double>(a.size()));
    const double logk = std::log(static_cast<double>(dilate_sum(a, k, a).size()));
    const double logl = std::log(static_cast<double>(dilate_sum(a, l, a).size()));
    return AttainablePoint{logk / logn, logl / logn, k, l, a.size()};
}

IntSet restricted_sum_less(const IntSet& a, const IntSet& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("restricted_sum_less: dimension mismatch");
    check_budget(static_cast<double>(a.size()) * static_cast<double>(b.size()),
                 "restricted_sum_less pair enumeration");
    std::unordered_set<Point, PointHash> out;
    for (const auto& pa : a.elements()) {
        for (const auto& pb : b.elements()) {
            if (pa < pb) out.insert(dilate_point(pa, 1, pb));
        }
    }
    return IntSet(a.dimension(), std::vector<Point>(out.begin(), out.end()));
}

}  // namespace dilatelab
