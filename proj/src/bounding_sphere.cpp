#include "normpose/bounding_sphere.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace normpose {
namespace {

Sphere sphere_from_two(const Point3& a, const Point3& b) {
    Sphere s;
    s.center = 0.5 * (a + b);
    s.radius = 0.5 * (a - b).norm();
    return s;
}

// Circumsphere of three points (center in their plane). Falls back to the
// best two-point sphere when the triangle is degenerate.
Sphere sphere_from_three(const Point3& a, const Point3& b, const Point3& c) {
    const Point3 ab = b - a;
    const Point3 ac = c - a;
    const Point3 n = ab.cross(ac);
    const double n2 = n.squaredNorm();
    if (n2 <= 1e-30) {
        Sphere best = sphere_from_two(a, b);
        for (const Sphere& s : {sphere_from_two(a, c), sphere_from_two(b, c)}) {
            if (s.radius > best.radius) best = s;
        }
        return best;
    }
    const Point3 rel = (ab.squaredNorm() * ac.cross(n) + ac.squaredNorm() * n.cross(ab)) / (2.0 * n2);
    Sphere s;
    s.center = a + rel;
    s.radius = rel.norm();
    return s;
}

Sphere sphere_from_four(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    Eigen::Matrix3d m;
    m.row(0) = (b - a).transpose();
    m.row(1) = (c - a).transpose();
    m.row(2) = (d - a).transpose();
    Eigen::Vector3d rhs(0.5 * (b - a).squaredNorm(),
                        0.5 * (c - a).squaredNorm(),
                        0.5 * (d - a).squaredNorm());
    const double det = m.determinant();
    if (std::abs(det) <= 1e-30) {
        // Coplanar; the minimum sphere is determined by a subset of three.
        Sphere best{Point3::Zero(), -1.0};
        const Point3* q[4] = {&a, &b, &c, &d};
        for (int skip = 0; skip < 4; ++skip) {
            const Point3* t[3];
            int k = 0;
            for (int i = 0; i < 4; ++i)
                if (i != skip) t[k++] = q[i];
            Sphere s = sphere_from_three(*t[0], *t[1], *t[2]);
            bool ok = s.contains(*q[skip], 1e-9 * (1.0 + s.radius));
            if (ok && (best.radius < 0.0 || s.radius < best.radius)) best = s;
        }
        if (best.radius >= 0.0) return best;
        return sphere_from_three(a, b, c);
    }
    const Point3 rel = m.partialPivLu().solve(rhs);
    Sphere s;
    s.center = a + rel;
    s.radius = rel.norm();
    return s;
}

Sphere trivial_sphere(std::span<const Point3*> support) {
    switch (support.size()) {
        case 0: return Sphere{Point3::Zero(), 0.0};
        case 1: return Sphere{*support[0], 0.0};
        case 2: return sphere_from_two(*support[0], *support[1]);
        case 3: return sphere_from_three(*support[0], *support[1], *support[2]);
        default: return sphere_from_four(*support[0], *support[1], *support[2], *support[3]);
    }
}

Sphere welzl(std::vector<const Point3*>& pts, size_t n, std::vector<const Point3*>& support) {
    Sphere s = trivial_sphere(support);
    if (support.size() == 4) return s;
    for (size_t i = 0; i < n; ++i) {
        const Point3* p = pts[i];
        if (s.contains(*p, 1e-10 * (1.0 + s.radius))) continue;
        support.push_back(p);
        s = welzl(pts, i, support);
        support.pop_back();
        // Move-to-front keeps the expected recursion depth small.
        for (size_t j = i; j > 0; --j) pts[j] = pts[j - 1];
        pts[0] = p;
    }
    return s;
}

} // namespace

Sphere minimum_enclosing_sphere(std::span<const Point3> points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    std::vector<const Point3*> pts(points.size());
    for (size_t i = 0; i < points.size(); ++i) pts[i] = &points[i];
    // Deterministic shuffle: expected-linear behaviour, reproducible output.
    std::mt19937_64 rng(0x5ee1c0defULL);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<const Point3*> support;
    support.reserve(4);
    return welzl(pts, pts.size(), support);
}

double bounding_sphere_diameter(std::span<const Point3> points) {
    return 2.0 * minimum_enclosing_sphere(points).radius;
}

} // namespace normpose
