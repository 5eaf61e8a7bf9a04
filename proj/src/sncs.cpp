#include "normpose/sncs.hpp"

#include "normpose/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace normpose {

std::vector<CategoryCloud> split_by_semantics(std::span<const Point3> cloud,
                                              std::span<const std::vector<double>> semantic_probs,
                                              const SncsConfig& config,
                                              std::uint64_t seed) {
    if (cloud.size() != semantic_probs.size())
        throw std::invalid_argument("cloud/probability length mismatch");
    if (config.samples_per_category < 64)
        throw std::invalid_argument("samples_per_category below minimum");

    size_t num_classes = 0;
    for (const auto& row : semantic_probs) num_classes = std::max(num_classes, row.size());
    if (!cloud.empty() && num_classes == 0) throw std::invalid_argument("no classes");

    std::vector<std::vector<int>> members(num_classes);
    for (size_t i = 0; i < semantic_probs.size(); ++i) {
        const auto& row = semantic_probs[i];
        if (row.empty()) throw std::invalid_argument("no classes");
        double sum = std::accumulate(row.begin(), row.end(), 0.0);
        if (std::abs(sum - 1.0) > 1e-6)
            throw std::invalid_argument("semantic probabilities do not sum to 1");
        int best = 0;
        for (size_t j = 1; j < row.size(); ++j)
            if (row[j] > row[best]) best = static_cast<int>(j); // ties keep the lower index
        members[best].push_back(static_cast<int>(i));
    }

    const int n_s = config.samples_per_category;
    std::vector<CategoryCloud> result;
    for (size_t c = 0; c < num_classes; ++c) {
        auto& idx = members[c];
        if (static_cast<int>(idx.size()) < config.min_points_per_category) continue;

        CategoryCloud cc;
        cc.category = static_cast<int>(c);
        cc.source_indices.reserve(n_s);
        auto rng = make_engine(derive_seed(seed, c));
        if (static_cast<int>(idx.size()) >= n_s) {
            // Partial Fisher-Yates: first n_s entries are a uniform sample
            // without replacement.
            for (int k = 0; k < n_s; ++k) {
                std::uniform_int_distribution<size_t> pick(k, idx.size() - 1);
                std::swap(idx[k], idx[pick(rng)]);
                cc.source_indices.push_back(idx[k]);
            }
        } else {
            std::uniform_int_distribution<size_t> pick(0, idx.size() - 1);
            for (int k = 0; k < n_s; ++k) cc.source_indices.push_back(idx[pick(rng)]);
        }
        cc.points.reserve(n_s);
        for (int i : cc.source_indices) cc.points.push_back(cloud[i]);
        result.push_back(std::move(cc));
    }
    return result;
}

double estimate_scene_scale(std::span<const double> point_scales) {
    if (point_scales.empty()) throw std::invalid_argument("empty scale list");
    double sum = 0.0;
    for (double s : point_scales) {
        if (s <= 0.0) throw std::invalid_argument("nonpositive scale");
        sum += s;
    }
    return sum / static_cast<double>(point_scales.size());
}

SncsResult to_sncs(const CategoryCloud& cloud, double scale_estimate, const SncsConfig& config) {
    if (scale_estimate <= 0.0) throw std::invalid_argument("nonpositive scale");
    if (cloud.points.empty()) throw std::invalid_argument("empty category cloud");

    Point3 center = Point3::Zero();
    for (const Point3& p : cloud.points) center += p;
    center /= static_cast<double>(cloud.points.size());

    SncsResult out;
    out.record.center = center;
    out.record.scale_estimate = scale_estimate;
    out.record.ratio = config.target_scale / scale_estimate;
    out.cloud.category = cloud.category;
    out.cloud.source_indices = cloud.source_indices;
    out.cloud.points.reserve(cloud.points.size());
    for (const Point3& p : cloud.points) out.cloud.points.push_back(out.record.ratio * (p - center));
    return out;
}

Point3 translation_to_ocs(const Point3& t_sncs, const NormalizationRecord& record) {
    return t_sncs / record.ratio + record.center;
}

} // namespace normpose
