#pragma once

#include "normpose/geometry.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace normpose {

struct BinSpec {
    double width = 0.60;  // inner, x
    double depth = 0.45;  // inner, y
    double height = 0.50; // inner, z
    double wall = 0.02;
};

struct SceneCamera {
    CameraIntrinsics intrinsics;
    RigidPose camera_to_world; // provenance only; scene data is camera-frame
};

struct SceneInstance {
    int model_id = 0;
    RigidPose pose;          // camera (OCS) frame
    double visibility = 1.0; // fraction of solo-render pixels surviving the scene z-buffer
};

struct LabeledPoint {
    Point3 position; // camera frame
    int semantic = 0;
    int instance = 0;
    double scale = 0.0;  // s_i, the category scale
    RigidPose pose;      // T_i, the instance pose (camera frame)
    double visibility = 0.0;
};

// A generated stacked scene with complete ground truth. The sampled cloud and
// all poses live in the camera frame, which is the pipeline's OCS.
struct LabeledScene {
    std::uint64_t seed = 0;
    BinSpec bin;
    SceneCamera camera;
    std::vector<SceneInstance> instances;
    std::vector<LabeledPoint> cloud;
    bool placement_truncated = false;      // some instances could not be placed
    bool resampled_with_replacement = false; // fewer visible points than N_p
};

class ModelCatalog {
public:
    ModelCatalog() = default;
    explicit ModelCatalog(std::vector<ObjectModel> models) : models_(std::move(models)) {
        for (size_t i = 0; i < models_.size(); ++i) index_[models_[i].id] = i;
    }

    const std::vector<ObjectModel>& models() const { return models_; }
    bool contains(int id) const { return index_.count(id) > 0; }

    const ObjectModel& by_id(int id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::out_of_range("unknown model id " + std::to_string(id));
        return models_[it->second];
    }

private:
    std::vector<ObjectModel> models_;
    std::map<int, size_t> index_;
};

// Copy of `model` uniformly rescaled so its bounding-sphere diameter equals
// new_scale (used to move models into the normalized space).
ObjectModel rescaled_model(const ObjectModel& model, double new_scale);

} // namespace normpose
