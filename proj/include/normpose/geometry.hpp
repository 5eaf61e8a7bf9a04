#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <string>
#include <vector>

namespace normpose {

using Point3 = Eigen::Vector3d;

// Rigid transform: p -> R*p + t. Rotation kept as a unit quaternion; q and -q
// denote the same rotation, the sign is only canonicalized when serializing.
struct RigidPose {
    Eigen::Quaterniond rotation{1.0, 0.0, 0.0, 0.0};
    Point3 translation{0.0, 0.0, 0.0};

    static RigidPose identity() { return RigidPose{}; }

    Point3 apply(const Point3& p) const { return rotation * p + translation; }

    RigidPose compose(const RigidPose& other) const {
        RigidPose out;
        out.rotation = rotation * other.rotation;
        out.translation = rotation * other.translation + translation;
        return out;
    }

    RigidPose inverse() const {
        RigidPose out;
        out.rotation = rotation.conjugate();
        out.translation = -(out.rotation * translation);
        return out;
    }

    bool unit_rotation(double tol = 1e-9) const {
        return std::abs(rotation.norm() - 1.0) <= tol;
    }

    // Flip the quaternion so the scalar part is non-negative (first nonzero
    // component positive when w == 0). Serialization boundaries only.
    RigidPose canonicalized() const {
        RigidPose out = *this;
        const double* c = out.rotation.coeffs().data(); // x,y,z,w
        double lead = c[3];
        for (int i = 0; lead == 0.0 && i < 3; ++i) lead = c[i];
        if (lead < 0.0) out.rotation.coeffs() = -out.rotation.coeffs();
        return out;
    }
};

inline Point3 apply_pose(const RigidPose& pose, const Point3& p) { return pose.apply(p); }
inline RigidPose compose(const RigidPose& a, const RigidPose& b) { return a.compose(b); }
inline RigidPose invert(const RigidPose& a) { return a.inverse(); }

struct SymmetryClass {
    enum class Kind { none, cyclic, revolution, revolution_with_flip };

    Kind kind = Kind::none;
    int order = 2;                      // cyclic only, >= 2
    Point3 axis{0.0, 0.0, 1.0};         // unit vector, model frame

    static SymmetryClass none() { return SymmetryClass{}; }
    static SymmetryClass cyclic(int n, const Point3& axis) {
        return SymmetryClass{Kind::cyclic, n, axis.normalized()};
    }
    static SymmetryClass revolution(const Point3& axis) {
        return SymmetryClass{Kind::revolution, 2, axis.normalized()};
    }
    static SymmetryClass revolution_with_flip(const Point3& axis) {
        return SymmetryClass{Kind::revolution_with_flip, 2, axis.normalized()};
    }
};

// Sampled surface points of a rigid object. Points are centered so the
// minimum enclosing sphere is at the origin and `scale` equals its diameter.
struct ObjectModel {
    int id = 0;
    std::string name;
    std::vector<Point3> points;
    SymmetryClass symmetry;
    double scale = 0.0;
};

struct CameraIntrinsics {
    double fx = 0.0;
    double fy = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    int width = 0;
    int height = 0;

    bool valid() const {
        return fx > 0.0 && fy > 0.0 && width > 0 && height > 0 &&
               cx >= 0.0 && cx < width && cy >= 0.0 && cy < height;
    }
};

// Row-major float32 depth in meters; 0 marks a missing sample so integer
// formats round-trip exactly.
struct DepthImage {
    static constexpr float kSentinel = 0.0f;

    int width = 0;
    int height = 0;
    std::vector<float> data;

    DepthImage() = default;
    DepthImage(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h, kSentinel) {}

    float& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    float at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
    size_t pixel_count() const { return data.size(); }

    size_t valid_count() const {
        size_t n = 0;
        for (float v : data) n += (v != kSentinel);
        return n;
    }
};

} // namespace normpose
