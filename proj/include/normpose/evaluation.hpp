#pragma once

#include "normpose/geometry.hpp"

#include <span>
#include <vector>

namespace normpose {

struct MatchConfig {
    double tp_threshold_factor = 0.1;   // TP iff pose_distance < factor * object scale
    double relevance_visibility = 0.5;  // relevant iff visibility > this
    int revolution_discretization = 64; // K
};

enum class MatchFlag { TP, FP, IGNORE };

struct MatchResult {
    std::vector<MatchFlag> flags; // one per estimate, in the given order
    int relevant_count = 0;
};

struct PRPoint {
    double recall = 0.0;
    double precision = 0.0;
};

struct PRCurve {
    std::vector<PRPoint> steps;
    double ap = 0.0;
};

// Discrete representatives of the object's proper symmetry group. Identity is
// always first. Continuous (revolution) groups are discretized with K samples;
// the flip variant appends K more with a half-turn about an axis orthogonal
// to the symmetry axis.
std::vector<Eigen::Quaterniond> symmetry_representatives(const SymmetryClass& sym, int K);

// Brégier-style symmetry-aware distance between poses of the same object:
// min over representatives g of the RMS point-to-point error of a∘g vs b over
// the model's sampled points. Units are meters.
double pose_distance(const RigidPose& a, const RigidPose& b, const ObjectModel& model, int K = 64);

// Same metric against a precomputed representative set (used by hot loops).
double pose_distance(const RigidPose& a, const RigidPose& b,
                     std::span<const Point3> model_points,
                     std::span<const Eigen::Quaterniond> representatives);

struct GroundTruthInstance {
    RigidPose pose;
    double visibility = 1.0;
};

// Greedy matching in the given (confidence-descending) order. Each estimate
// takes the nearest unmatched ground-truth instance; within the distance
// threshold it scores TP against a relevant instance and IGNORE against a
// non-relevant one, otherwise FP. Each instance is consumed at most once.
MatchResult match_predictions(std::span<const RigidPose> estimates,
                              std::span<const GroundTruthInstance> ground_truth,
                              const ObjectModel& model,
                              const MatchConfig& config);

// Area under the precision-recall curve via the monotone precision envelope.
// IGNORE flags are skipped. Throws on relevant_count <= 0.
PRCurve average_precision(std::span<const MatchFlag> flags, int relevant_count);

double mean_ap(std::span<const double> aps);

} // namespace normpose
