#include "normpose/predictor.hpp"

#include "normpose/evaluation.hpp"
#include "normpose/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace normpose {
namespace {

void validate(const OracleNoise& n) {
    if (n.sigma_translation < 0.0 || n.sigma_translation_relative < 0.0 ||
        n.sigma_rotation < 0.0 || n.sigma_scale < 0.0 || n.sigma_visibility < 0.0)
        throw std::invalid_argument("negative noise sigma");
    if (n.semantic_flip_prob < 0.0 || n.semantic_flip_prob > 1.0)
        throw std::invalid_argument("semantic_flip_prob outside [0,1]");
}

} // namespace

std::vector<PointPrediction> noisy_oracle(const LabeledScene& scene,
                                          int num_classes,
                                          const OracleNoise& noise) {
    validate(noise);
    if (num_classes <= 0) throw std::invalid_argument("no classes");

    std::vector<PointPrediction> preds(scene.cloud.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(scene.cloud.size()); ++i) {
        const LabeledPoint& pt = scene.cloud[i];
        auto rng = make_engine(derive_seed(noise.seed, static_cast<std::uint64_t>(i)));
        std::normal_distribution<double> normal(0.0, 1.0);
        std::uniform_real_distribution<double> uniform(0.0, 1.0);

        PointPrediction& p = preds[i];

        const double sigma_t = noise.sigma_translation + noise.sigma_translation_relative * pt.scale;
        const Point3 dt(normal(rng), normal(rng), normal(rng));
        p.pose.translation = pt.pose.translation + sigma_t * dt;

        const double angle = std::abs(noise.sigma_rotation * normal(rng));
        Point3 axis(normal(rng), normal(rng), normal(rng));
        const double axis_norm = axis.norm();
        axis = axis_norm > 0.0 ? Point3(axis / axis_norm) : Point3(0.0, 0.0, 1.0);
        p.pose.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis)) * pt.pose.rotation;

        p.scale = std::max(1e-12, pt.scale * (1.0 + noise.sigma_scale * normal(rng)));

        int cls = pt.semantic;
        const bool flip = uniform(rng) < noise.semantic_flip_prob;
        if (flip && num_classes > 1) {
            std::uniform_int_distribution<int> other(0, num_classes - 2);
            int pick = other(rng);
            cls = pick + (pick >= cls ? 1 : 0);
        }
        p.semantic_probs.assign(num_classes, 0.0);
        p.semantic_probs[cls] = 1.0;

        p.visibility = std::clamp(pt.visibility + noise.sigma_visibility * normal(rng), 0.0, 1.0);
    }
    return preds;
}

double loss_scale(std::span<const double> predicted, std::span<const double> labels) {
    if (predicted.size() != labels.size()) throw std::invalid_argument("length mismatch");
    if (predicted.empty()) throw std::invalid_argument("empty input");
    double sum = 0.0;
    for (size_t i = 0; i < predicted.size(); ++i) sum += std::abs(labels[i] - predicted[i]);
    return sum / static_cast<double>(predicted.size());
}

double loss_semantic(std::span<const std::vector<double>> predicted_probs,
                     std::span<const std::vector<double>> label_onehots) {
    if (predicted_probs.size() != label_onehots.size()) throw std::invalid_argument("length mismatch");
    if (predicted_probs.empty()) throw std::invalid_argument("empty input");
    constexpr double kLogClamp = 1e-12;
    double sum = 0.0;
    for (size_t i = 0; i < predicted_probs.size(); ++i) {
        const auto& p = predicted_probs[i];
        const auto& c = label_onehots[i];
        if (p.size() != c.size()) throw std::invalid_argument("class count mismatch");
        double row = 0.0;
        for (size_t j = 0; j < p.size(); ++j) row += c[j] * std::log(std::max(p[j], kLogClamp));
        sum -= row;
    }
    return sum / static_cast<double>(predicted_probs.size());
}

double loss_pose(std::span<const CategorySupervision> clouds, const ModelCatalog& catalog, int K) {
    if (clouds.empty()) throw std::invalid_argument("empty input");
    const size_t n_s = clouds.front().predicted.size();
    double total = 0.0;
    for (const auto& cloud : clouds) {
        if (cloud.predicted.size() != n_s || cloud.labels.size() != n_s ||
            cloud.semantic_labels.size() != n_s)
            throw std::invalid_argument("cloud size mismatch");
        const ObjectModel& model = catalog.by_id(cloud.category);
        const auto reps = symmetry_representatives(model.symmetry, K);
        double cloud_sum = 0.0;
        for (size_t i = 0; i < n_s; ++i) {
            if (cloud.semantic_labels[i] != cloud.category) continue;
            cloud_sum += pose_distance(cloud.labels[i], cloud.predicted[i], model.points, reps);
        }
        total += cloud_sum;
    }
    return total / (static_cast<double>(clouds.size()) * static_cast<double>(n_s));
}

double loss_visibility(std::span<const CategorySupervision> clouds) {
    if (clouds.empty()) throw std::invalid_argument("empty input");
    const size_t n_s = clouds.front().predicted_visibility.size();
    double total = 0.0;
    for (const auto& cloud : clouds) {
        if (cloud.predicted_visibility.size() != n_s || cloud.label_visibility.size() != n_s ||
            cloud.semantic_labels.size() != n_s)
            throw std::invalid_argument("cloud size mismatch");
        double cloud_sum = 0.0;
        for (size_t i = 0; i < n_s; ++i) {
            if (cloud.semantic_labels[i] != cloud.category) continue;
            cloud_sum += std::abs(cloud.label_visibility[i] - cloud.predicted_visibility[i]);
        }
        total += cloud_sum;
    }
    return total / (static_cast<double>(clouds.size()) * static_cast<double>(n_s));
}

double loss_total(const LossComponents& c, const LossWeights& w) {
    if (w.scale < 0.0 || w.semantic < 0.0 || w.pose < 0.0 || w.visibility < 0.0)
        throw std::invalid_argument("negative loss weight");
    return w.scale * c.scale + w.semantic * c.semantic + w.pose * c.pose + w.visibility * c.visibility;
}

} // namespace normpose
