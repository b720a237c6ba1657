#include "dilatelab/point.hpp"

#include <stdexcept>

namespace dilatelab {

Coord checked_add(Coord a, Coord b) {
    Coord out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("coordinate addition overflow");
    return out;
}

Coord checked_mul(Coord a, Coord b) {
    Coord out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("coordinate multiplication overflow");
    return out;
}

Point dilate_point(const Point& a, Coord k, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dilate_point: dimension mismatch");
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], checked_mul(k, b[i]));
    return out;
}

}  // namespace dilatelab
