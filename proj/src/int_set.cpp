#include "dilatelab/int_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace dilatelab {

IntSet::IntSet(int dimension) : dimension_(dimension) {
    if (dimension < 1) throw std::invalid_argument("IntSet: dimension must be >= 1");
}

IntSet::IntSet(int dimension, std::vector<Point> elements)
    : dimension_(dimension), elements_(std::move(elements)) {
    if (dimension < 1) throw std::invalid_argument("IntSet: dimension must be >= 1");
    for (const auto& p : elements_) {
        if (static_cast<int>(p.size()) != dimension)
            throw std::invalid_argument("IntSet: point dimension mismatch");
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

IntSet IntSet::of_ints(std::initializer_list<Coord> values) {
    return of_ints(std::vector<Coord>(values));
}

IntSet IntSet::of_ints(std::vector<Coord> values) {
    std::vector<Point> pts;
    pts.reserve(values.size());
    for (Coord v : values) pts.push_back(Point{v});
    return IntSet(1, std::move(pts));
}

bool IntSet::contains(const Point& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

IntSet IntSet::united(const IntSet& other) const {
    if (dimension_ != other.dimension_)
        throw std::invalid_argument("IntSet::united: dimension mismatch");
    std::vector<Point> merged;
    merged.reserve(elements_.size() + other.elements_.size());
    std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                   other.elements_.end(), std::back_inserter(merged));
    IntSet out(dimension_);
    out.elements_ = std::move(merged);  // already sorted and unique
    return out;
}

}  // namespace dilatelab
