#pragma once

#include "normpose/geometry.hpp"
#include "normpose/scene.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace normpose {

class ModelCatalog;

// Per-point output contract of any predictor. Scale, semantics and visibility
// refer to the point's object; the pose is the instance pose in the frame of
// the cloud the predictor saw (OCS here -- the pipeline maps translations into
// the normalized space alongside the points).
struct PointPrediction {
    double scale = 0.0;                // s_hat, meters
    std::vector<double> semantic_probs; // c_hat, sums to 1
    RigidPose pose;                    // T_hat
    double visibility = 0.0;           // V_hat in [0,1]
};

struct LossWeights {
    double scale = 2.0;
    double semantic = 20.0;
    double pose = 0.2;
    double visibility = 50.0;
};

struct OracleNoise {
    double sigma_translation = 0.0;        // meters
    double sigma_translation_relative = 0.0; // fraction of the point's scale label, added to the above
    double sigma_rotation = 0.0;           // radians
    double sigma_scale = 0.0;              // relative fraction
    double semantic_flip_prob = 0.0;
    double sigma_visibility = 0.0;
    std::uint64_t seed = 0;
};

// Ground-truth labels perturbed per point with independent seeded streams:
// isotropic Gaussian on translation, axis-angle with |N(0, sigma)| angle on
// rotation, multiplicative (1 + N) on scale, class flip to a uniform other
// class with probability p (then one-hot), additive clamped noise on
// visibility. Bitwise reproducible for a fixed seed.
std::vector<PointPrediction> noisy_oracle(const LabeledScene& scene,
                                          int num_classes,
                                          const OracleNoise& noise);

// Eqs. of the training objective, usable as evaluation metrics over any
// predictor output.
double loss_scale(std::span<const double> predicted, std::span<const double> labels);

// Mean negative cross-entropy; log clamped at 1e-12 so degenerate predictors
// stay finite.
double loss_semantic(std::span<const std::vector<double>> predicted_probs,
                     std::span<const std::vector<double>> label_onehots);

// One single-category cloud's worth of pose/visibility supervision.
struct CategorySupervision {
    int category = 0;
    std::vector<RigidPose> predicted;
    std::vector<RigidPose> labels;
    std::vector<int> semantic_labels; // filter: a point only counts when it equals `category`
    std::vector<double> predicted_visibility;
    std::vector<double> label_visibility;
};

double loss_pose(std::span<const CategorySupervision> clouds, const ModelCatalog& catalog, int K = 64);
double loss_visibility(std::span<const CategorySupervision> clouds);

struct LossComponents {
    double scale = 0.0;
    double semantic = 0.0;
    double pose = 0.0;
    double visibility = 0.0;
};

double loss_total(const LossComponents& components, const LossWeights& weights);

} // namespace normpose
