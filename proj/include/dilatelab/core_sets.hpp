#pragma once

// Exact finite-set arithmetic in Z^d: dilate sets A + k*B, representation
// multiplicities, cartesian products, attainable feasible-region points, and
// the order-restricted sum.

#include <cstdint>
#include <vector>

#include "dilatelab/int_set.hpp"
#include "dilatelab/point.hpp"

namespace dilatelab {

// Map x -> number of ordered pairs (a, b) with a + k*b = x. The counts sum
// to |A|*|B| because pairs are ordered.
class MultiplicityMap {
public:
    MultiplicityMap(int dimension,
                    std::vector<std::pair<Point, std::int64_t>> entries);

    int dimension() const { return dimension_; }
    const std::vector<std::pair<Point, std::int64_t>>& entries() const {
        return entries_;
    }
    std::int64_t total() const;          // sum of all counts, checked
    IntSet support() const;              // the dilate set itself
    std::int64_t count_at(const Point& p) const;  // 0 if absent

private:
    int dimension_;
    std::vector<std::pair<Point, std::int64_t>> entries_;  // sorted by point
};

// {a + k*b : a in A, b in B}. k = 1 is the sumset, k = -1 the difference
// set. Uses a dense bitmap for narrow 1-d results and a hash set otherwise.
IntSet dilate_sum(const IntSet& a, Coord k, const IntSet& b);

MultiplicityMap multiplicity_map(const IntSet& a, Coord k, const IntSet& b);

// Concatenates coordinates; |A x B| = |A|*|B| and dilate_sum distributes
// over the product factorwise.
IntSet cartesian_product(const IntSet& a, const IntSet& b);

struct AttainablePoint {
    double x;  // log|A + k*A| / log|A|
    double y;  // log|A + l*A| / log|A|
    Coord k, l;
    std::size_t size;  // |A|
};

// Requires |A| >= 2 (the log base is degenerate otherwise).
AttainablePoint attainable_point(const IntSet& a, Coord k, Coord l);

// {a + b : a in A, b in B, a < b lexicographically}. The strict total order
// on Z^n is coordinatewise-lexicographic.
IntSet restricted_sum_less(const IntSet& a, const IntSet& b);

}  // namespace dilatelab
