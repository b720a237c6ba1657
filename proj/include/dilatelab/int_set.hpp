#pragma once

// Finite subsets of Z^d. Elements are stored sorted lexicographically and
// deduplicated, so equality is structural and membership is a binary search.
// Instances are immutable after construction and safe to share across
// threads.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dilatelab/point.hpp"

namespace dilatelab {

class IntSet {
public:
    // Empty set of the given dimension (d >= 1).
    explicit IntSet(int dimension);

    // Takes ownership of `elements`, sorts and deduplicates them, and checks
    // every point has the stated dimension (throws std::invalid_argument).
    IntSet(int dimension, std::vector<Point> elements);

    // Convenience for 1-d sets.
    static IntSet of_ints(std::initializer_list<Coord> values);
    static IntSet of_ints(std::vector<Coord> values);

    int dimension() const { return dimension_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(const Point& p) const;
    const std::vector<Point>& elements() const { return elements_; }

    // Set union; dimensions must agree.
    IntSet united(const IntSet& other) const;

    bool operator==(const IntSet& other) const = default;

private:
    int dimension_;
    std::vector<Point> elements_;  // sorted lexicographically, unique
};

}  // namespace dilatelab
