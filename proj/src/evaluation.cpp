#include "normpose/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace normpose {
namespace {

// Any unit vector orthogonal to `axis`, picked deterministically.
Point3 orthogonal_unit(const Point3& axis) {
    Point3 ref = std::abs(axis.z()) < 0.9 ? Point3(0.0, 0.0, 1.0) : Point3(1.0, 0.0, 0.0);
    return axis.cross(ref).normalized();
}

} // namespace

std::vector<Eigen::Quaterniond> symmetry_representatives(const SymmetryClass& sym, int K) {
    using Kind = SymmetryClass::Kind;
    std::vector<Eigen::Quaterniond> reps;
    const Point3 axis = sym.axis.normalized();
    switch (sym.kind) {
        case Kind::none:
            reps.emplace_back(Eigen::Quaterniond::Identity());
            break;
        case Kind::cyclic: {
            const int n = sym.order;
            reps.reserve(n);
            for (int k = 0; k < n; ++k) {
                const double angle = 2.0 * std::numbers::pi * k / n;
                reps.emplace_back(Eigen::AngleAxisd(angle, axis));
            }
            break;
        }
        case Kind::revolution:
        case Kind::revolution_with_flip: {
            reps.reserve(sym.kind == Kind::revolution ? K : 2 * K);
            for (int k = 0; k < K; ++k) {
                const double angle = 2.0 * std::numbers::pi * k / K;
                reps.emplace_back(Eigen::AngleAxisd(angle, axis));
            }
            if (sym.kind == Kind::revolution_with_flip) {
                const Eigen::Quaterniond flip(Eigen::AngleAxisd(std::numbers::pi, orthogonal_unit(axis)));
                for (int k = 0; k < K; ++k) reps.emplace_back(reps[k] * flip);
            }
            break;
        }
    }
    return reps;
}

double pose_distance(const RigidPose& a, const RigidPose& b,
                     std::span<const Point3> model_points,
                     std::span<const Eigen::Quaterniond> representatives) {
    if (model_points.empty()) throw std::invalid_argument("model has no points");
    const size_t n = model_points.size();
    const Eigen::Matrix3d rb = b.rotation.toRotationMatrix();

    // b(x) is shared across all representatives.
    std::vector<Point3> bx(n);
    for (size_t i = 0; i < n; ++i) bx[i] = rb * model_points[i] + b.translation;

    const size_t nreps = representatives.size();
    std::vector<double> per_rep(nreps);
#pragma omp parallel for schedule(static) if (nreps * n > 16384)
    for (long r = 0; r < static_cast<long>(nreps); ++r) {
        const Eigen::Matrix3d ag = (a.rotation * representatives[r]).toRotationMatrix();
        double sum = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const Point3 diff = ag * model_points[i] + a.translation - bx[i];
            sum += diff.squaredNorm();
        }
        per_rep[r] = sum;
    }
    double best = std::numeric_limits<double>::infinity();
    for (double s : per_rep) best = std::min(best, s);
    return std::sqrt(best / static_cast<double>(n));
}

double pose_distance(const RigidPose& a, const RigidPose& b, const ObjectModel& model, int K) {
    const auto reps = symmetry_representatives(model.symmetry, K);
    return pose_distance(a, b, model.points, reps);
}

MatchResult match_predictions(std::span<const RigidPose> estimates,
                              std::span<const GroundTruthInstance> ground_truth,
                              const ObjectModel& model,
                              const MatchConfig& config) {
    MatchResult result;
    result.flags.reserve(estimates.size());
    for (const auto& gt : ground_truth)
        result.relevant_count += (gt.visibility > config.relevance_visibility);

    const auto reps = symmetry_representatives(model.symmetry, config.revolution_discretization);
    const double threshold = config.tp_threshold_factor * model.scale;
    std::vector<bool> consumed(ground_truth.size(), false);

    for (const RigidPose& est : estimates) {
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < ground_truth.size(); ++j) {
            if (consumed[j]) continue;
            const double d = pose_distance(est, ground_truth[j].pose, model.points, reps);
            if (d < best_dist) {
                best_dist = d;
                best = static_cast<int>(j);
            }
        }
        if (best < 0 || best_dist >= threshold) {
            result.flags.push_back(MatchFlag::FP);
            continue;
        }
        consumed[best] = true;
        const bool relevant = ground_truth[best].visibility > config.relevance_visibility;
        result.flags.push_back(relevant ? MatchFlag::TP : MatchFlag::IGNORE);
    }
    return result;
}

PRCurve average_precision(std::span<const MatchFlag> flags, int relevant_count) {
    if (relevant_count <= 0) throw std::invalid_argument("no relevant instances");

    PRCurve curve;
    int tp = 0;
    int fp = 0;
    for (MatchFlag f : flags) {
        if (f == MatchFlag::IGNORE) continue;
        tp += (f == MatchFlag::TP);
        fp += (f == MatchFlag::FP);
        curve.steps.push_back({static_cast<double>(tp) / relevant_count,
                               static_cast<double>(tp) / (tp + fp)});
    }

    // Precision envelope: max precision at recall >= r, swept from the back.
    std::vector<double> envelope(curve.steps.size());
    double env = 0.0;
    for (size_t i = curve.steps.size(); i-- > 0;) {
        env = std::max(env, curve.steps[i].precision);
        envelope[i] = env;
    }
    double ap = 0.0;
    double prev_recall = 0.0;
    for (size_t i = 0; i < curve.steps.size(); ++i) {
        ap += (curve.steps[i].recall - prev_recall) * envelope[i];
        prev_recall = curve.steps[i].recall;
    }
    curve.ap = ap;
    return curve;
}

double mean_ap(std::span<const double> aps) {
    if (aps.empty()) throw std::invalid_argument("empty AP list");
    double sum = 0.0;
    for (double a : aps) sum += a;
    return sum / static_cast<double>(aps.size());
}

} // namespace normpose
