#include "riconv/geom.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace riconv::geom {

void PointCloud::validate() const {
    if (points.empty()) {
        throw std::invalid_argument("PointCloud: point count must be >= 1");
    }
    if (!part_labels.empty() && part_labels.size() != points.size()) {
        throw std::invalid_argument("PointCloud: part_labels length != point count");
    }
    for (const auto& p : points) {
        if (!p.allFinite()) {
            throw std::invalid_argument("PointCloud: non-finite coordinate");
        }
    }
}

bool RigidTransform::is_valid(double tol) const {
    const Mat3 rtr = rotation.transpose() * rotation;
    if ((rtr - Mat3::Identity()).cwiseAbs().maxCoeff() > tol) return false;
    return std::abs(rotation.determinant() - 1.0) <= tol;
}

RigidTransform RigidTransform::compose(const RigidTransform& other) const {
    RigidTransform out;
    out.rotation = rotation * other.rotation;
    out.translation = rotation * other.translation + translation;
    return out;
}

PointCloud apply_rigid(const PointCloud& cloud, const RigidTransform& t) {
    if (!t.is_valid()) {
        throw std::invalid_argument("apply_rigid: rotation is not in SO(3)");
    }
    PointCloud out;
    out.points.reserve(cloud.size());
    for (const auto& p : cloud.points) {
        out.points.push_back(t.apply(p));
    }
    out.part_labels = cloud.part_labels;
    out.class_label = cloud.class_label;
    return out;
}

RigidTransform sample_rotation_z(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
    const double a = uni(rng);
    const double c = std::cos(a), s = std::sin(a);
    RigidTransform t;
    t.rotation << c, -s, 0.0,
                  s,  c, 0.0,
                  0.0, 0.0, 1.0;
    return t;
}

RigidTransform sample_rotation_so3(std::mt19937_64& rng) {
    // Uniform unit quaternion via four normal deviates.
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Vector4d q;
    do {
        q << gauss(rng), gauss(rng), gauss(rng), gauss(rng);
    } while (q.norm() < 1e-12);
    q.normalize();
    RigidTransform t;
    t.rotation = Eigen::Quaterniond(q[0], q[1], q[2], q[3]).toRotationMatrix();
    return t;
}

Vec3 centroid(std::span<const Vec3> points) {
    if (points.empty()) {
        throw std::invalid_argument("centroid: empty point list");
    }
    Vec3 sum = Vec3::Zero();
    for (const auto& p : points) sum += p;
    return sum / static_cast<double>(points.size());
}

PointCloud normalize_unit_sphere(const PointCloud& cloud) {
    cloud.validate();
    const Vec3 c = centroid(cloud.points);
    double max_r = 0.0;
    for (const auto& p : cloud.points) {
        max_r = std::max(max_r, (p - c).norm());
    }
    if (max_r <= 0.0) {
        throw std::invalid_argument("normalize_unit_sphere: all points coincide");
    }
    PointCloud out;
    out.points.reserve(cloud.size());
    for (const auto& p : cloud.points) {
        out.points.push_back((p - c) / max_r);
    }
    out.part_labels = cloud.part_labels;
    out.class_label = cloud.class_label;
    return out;
}

}  // namespace riconv::geom
