#pragma once

#include "normpose/geometry.hpp"
#include "normpose/predictor.hpp"

#include <span>
#include <vector>

namespace normpose {

struct AggregationConfig {
    double visibility_threshold = 0.50; // T_v
    double bandwidth = 0.05;            // flat-kernel radius, meters (SNCS)
    int mean_shift_max_iters = 100;
    double mean_shift_tol = 1e-5; // meters
    int min_cluster_size = 20;
};

struct InstanceEstimate {
    RigidPose pose; // frame of the clustered predictions
    double confidence = 0.0;
    int support = 0;
};

struct MeanShiftResult {
    std::vector<int> labels;     // cluster id per point, -1 if discarded
    std::vector<Point3> centers; // one per surviving cluster
};

// Keeps exactly the predictions with visibility >= threshold; returns the
// kept indices into `preds`.
std::vector<int> filter_by_visibility(std::span<const PointPrediction> preds, double threshold);

// Flat (uniform) kernel mean-shift with radius = bandwidth. Every point
// iterates to convergence against the fixed input set; converged modes merge
// when within bandwidth/2 of a cluster's founding mode; clusters below
// min_cluster_size are discarded. Deterministic; point trajectories are
// independent and run in parallel.
MeanShiftResult mean_shift(std::span<const Point3> points, const AggregationConfig& config);

// One instance hypothesis from a cluster: visibility-weighted mean of the
// member translations, the symmetry-aware rotation medoid, mean member
// visibility as the confidence.
InstanceEstimate vote_pose(std::span<const PointPrediction> members, const ObjectModel& model,
                           int K = 64);

// filter -> mean-shift on predicted translations -> per-cluster vote, sorted
// by descending confidence (ties: higher support, then lower cluster index).
// Predictions and `model` must share one frame (normalized or raw).
std::vector<InstanceEstimate> estimate_instances(std::span<const PointPrediction> preds,
                                                 const ObjectModel& model,
                                                 const AggregationConfig& config);

} // namespace normpose
