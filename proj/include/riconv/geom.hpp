#pragma once

#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace riconv::geom {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// A point cloud with optional per-point part labels and an optional
/// class label. Labels ride along with the points through transforms.
struct PointCloud {
    std::vector<Vec3> points;
    std::vector<int> part_labels;  // empty, or one label per point
    int class_label = -1;          // -1 = unlabeled

    std::size_t size() const { return points.size(); }
    bool has_part_labels() const { return !part_labels.empty(); }

    // Throws std::invalid_argument if the label/point invariants are broken.
    void validate() const;
};

/// Rigid transform x -> R*x + t with R in SO(3).
struct RigidTransform {
    Mat3 rotation = Mat3::Identity();
    Vec3 translation = Vec3::Zero();

    // R^T R = I and det R = +1, both within tol.
    bool is_valid(double tol = 1e-9) const;

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

    // Composition: (*this) after other.
    RigidTransform compose(const RigidTransform& other) const;
};

/// Applies a rigid transform to every point; labels are copied unchanged.
/// Throws std::invalid_argument if the rotation is not in SO(3).
PointCloud apply_rigid(const PointCloud& cloud, const RigidTransform& t);

/// Rotation about the z axis by an angle uniform in [0, 2pi); no translation.
RigidTransform sample_rotation_z(std::mt19937_64& rng);

/// Rotation uniform over SO(3), built from a uniformly sampled unit
/// quaternion; no translation.
RigidTransform sample_rotation_so3(std::mt19937_64& rng);

/// Arithmetic mean of the given points. Throws on an empty span.
Vec3 centroid(std::span<const Vec3> points);

/// Recenters the cloud at its centroid and rescales so the farthest point
/// sits at distance 1 from the origin. Throws if all points coincide.
PointCloud normalize_unit_sphere(const PointCloud& cloud);

}  // namespace riconv::geom
