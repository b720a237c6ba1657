#pragma once

// Points of Z^d with overflow-checked coordinate arithmetic. Coordinates are
// 64-bit; any operation that would wrap throws std::overflow_error instead.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dilatelab {

using Coord = std::int64_t;
using Point = std::vector<Coord>;

Coord checked_add(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);

// a + k*b componentwise, checked. Dimensions must already agree.
Point dilate_point(const Point& a, Coord k, const Point& b);

struct PointHash {
    std::size_t operator()(const Point& p) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ p.size();
        for (Coord c : p) {
            h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) +
                 (h >> 2);
        }
        return h;
    }
};

}  // namespace dilatelab
