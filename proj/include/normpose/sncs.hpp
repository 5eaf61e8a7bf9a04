#pragma once

#include "normpose/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace normpose {

struct SncsConfig {
    double target_scale = 0.20;       // D, meters
    int samples_per_category = 512;   // N_s, >= 64
    int min_points_per_category = 32; // categories below this are dropped
};

// Everything needed to invert the normalization: t = (d/D) * t_sncs + p_c.
struct NormalizationRecord {
    Point3 center{0.0, 0.0, 0.0}; // p_c
    double scale_estimate = 0.0;  // d
    double ratio = 0.0;           // D / d
};

// One single-category stacked scene, resampled to exactly N_s points.
// source_indices map each sampled point back into the original cloud so
// per-point predictions can be carried along.
struct CategoryCloud {
    int category = 0;
    std::vector<Point3> points;
    std::vector<int> source_indices;
};

// Argmax semantic split (ties to the lowest class index), drop categories
// below min_points_per_category, then resample each survivor to exactly N_s
// points: seeded uniform without replacement when enough points exist, with
// replacement otherwise. Throws "no classes" when the distributions are empty.
std::vector<CategoryCloud> split_by_semantics(std::span<const Point3> cloud,
                                              std::span<const std::vector<double>> semantic_probs,
                                              const SncsConfig& config,
                                              std::uint64_t seed);

// Arithmetic mean of the point-wise predicted scales.
double estimate_scene_scale(std::span<const double> point_scales);

struct SncsResult {
    CategoryCloud cloud;
    NormalizationRecord record;
};

// Forward transform into the scale-normalized space: p -> (D/d) * (p - p_c),
// with p_c the centroid of the input points. Throws "nonpositive scale".
SncsResult to_sncs(const CategoryCloud& cloud, double scale_estimate, const SncsConfig& config);

// Inverse transform for translations, rotation untouched.
Point3 translation_to_ocs(const Point3& t_sncs, const NormalizationRecord& record);

} // namespace normpose
