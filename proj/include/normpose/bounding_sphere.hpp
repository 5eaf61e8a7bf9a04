#pragma once

#include "normpose/geometry.hpp"

#include <span>

namespace normpose {

struct Sphere {
    Point3 center{0.0, 0.0, 0.0};
    double radius = 0.0;

    bool contains(const Point3& p, double slack = 1e-10) const {
        return (p - center).norm() <= radius + slack;
    }
};

// Exact minimum enclosing sphere (Welzl, move-to-front). Throws
// std::invalid_argument("empty point set") on empty input.
Sphere minimum_enclosing_sphere(std::span<const Point3> points);

double bounding_sphere_diameter(std::span<const Point3> points);

} // namespace normpose
