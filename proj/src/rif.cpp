#include "riconv/rif.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "riconv/sampling.hpp"

namespace riconv::rif {

namespace {

// Relative threshold below which |pm| counts as degenerate.
constexpr double kDegenerateRel = 1e-6;

NeighborFrame build_frame_impl(const geom::PointCloud& cloud, int p_index, int k,
                               bool tolerant) {
    if (p_index < 0 || p_index >= static_cast<int>(cloud.size())) {
        throw std::invalid_argument("build_frame: p_index out of range");
    }

    NeighborFrame frame;
    frame.p = cloud.points[p_index];
    frame.neighbor_indices = sampling::knn(cloud, frame.p, k).indices;
    frame.neighbor_points.reserve(k);
    for (int idx : frame.neighbor_indices) {
        frame.neighbor_points.push_back(cloud.points[idx]);
    }

    double radius = 0.0;
    for (const auto& x : frame.neighbor_points) {
        radius = std::max(radius, (x - frame.p).norm());
    }
    if (radius <= 0.0) {
        if (!tolerant) {
            throw std::invalid_argument(
                "build_frame: all neighbors coincide with p; no reference vector");
        }
        frame.m = frame.p;
        frame.pm = geom::Vec3::Zero();
        return frame;
    }

    frame.m = geom::centroid(frame.neighbor_points);
    if ((frame.m - frame.p).norm() < kDegenerateRel * radius) {
        // Evenly distributed neighborhood: fall back to the farthest
        // neighbor as m, lowest index among equidistant candidates.
        int best = 0;
        double best_d = -1.0;
        for (std::size_t i = 0; i < frame.neighbor_points.size(); ++i) {
            const double d = (frame.neighbor_points[i] - frame.p).norm();
            if (d > best_d) {
                best_d = d;
                best = static_cast<int>(i);
            }
        }
        frame.m = frame.neighbor_points[best];
        frame.degenerate_fallback_used = true;
    }
    frame.pm = frame.m - frame.p;
    return frame;
}

}  // namespace

double vector_angle(const geom::Vec3& a, const geom::Vec3& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na <= 0.0 || nb <= 0.0) return 0.0;
    const double c = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
    return std::acos(c);
}

NeighborFrame build_frame(const geom::PointCloud& cloud, int p_index, int k) {
    return build_frame_impl(cloud, p_index, k, /*tolerant=*/false);
}

NeighborFrame build_frame_tolerant(const geom::PointCloud& cloud, int p_index, int k) {
    return build_frame_impl(cloud, p_index, k, /*tolerant=*/true);
}

std::vector<RIFeature> rif_features(const NeighborFrame& frame) {
    std::vector<RIFeature> features;
    features.reserve(frame.neighbor_points.size());
    for (const auto& x : frame.neighbor_points) {
        RIFeature f;
        const geom::Vec3 to_p = frame.p - x;
        const geom::Vec3 to_m = frame.m - x;
        f.d0 = to_p.norm();
        f.d1 = to_m.norm();
        f.alpha0 = vector_angle(to_p, frame.pm);
        f.alpha1 = vector_angle(to_m, frame.pm);
        features.push_back(f);
    }
    return features;
}

BinAssignment bin_assign(const NeighborFrame& frame, int n_bins) {
    if (n_bins < 1) {
        throw std::invalid_argument("bin_assign: n_bins must be >= 1");
    }
    const std::size_t k = frame.neighbor_points.size();
    BinAssignment out;
    out.n_bins = n_bins;
    out.bin_of.assign(k, 0);
    if (n_bins == 1) return out;

    const double pm_norm = frame.pm.norm();
    if (pm_norm <= 0.0) return out;  // degenerate frame: single cell
    const geom::Vec3 axis = frame.pm / pm_norm;

    std::vector<double> t(k);
    double t_min = std::numeric_limits<double>::infinity();
    double t_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
        t[i] = (frame.neighbor_points[i] - frame.p).dot(axis);
        t_min = std::min(t_min, t[i]);
        t_max = std::max(t_max, t[i]);
    }
    if (!(t_max > t_min)) return out;  // all projections equal

    const double scale = static_cast<double>(n_bins) / (t_max - t_min);
    for (std::size_t i = 0; i < k; ++i) {
        int b = static_cast<int>(std::floor((t[i] - t_min) * scale));
        out.bin_of[i] = std::clamp(b, 0, n_bins - 1);
    }
    return out;
}

}  // namespace riconv::rif
