#pragma once

#include <cmath>

namespace crd2d {

struct Point {
    double x = 0.0;  // meters
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline double distance_m(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

inline double distance_km(const Point& a, const Point& b) {
    return distance_m(a, b) / 1000.0;
}

}  // namespace crd2d
