#pragma once

#include <vector>

#include "riconv/geom.hpp"

namespace riconv::rif {

/// Local neighborhood around a reference point p: the K nearest neighbors,
/// their centroid m, and the reference vector pm = m - p that orients all
/// feature extraction and binning.
///
/// When the neighbors are distributed so evenly that m collapses onto p,
/// m is replaced by the neighbor farthest from p (lowest index among
/// equidistant candidates) and degenerate_fallback_used is set.
struct NeighborFrame {
    geom::Vec3 p;
    std::vector<int> neighbor_indices;
    std::vector<geom::Vec3> neighbor_points;
    geom::Vec3 m;
    geom::Vec3 pm;
    bool degenerate_fallback_used = false;
};

/// Per-neighbor rotation- and translation-invariant feature:
///   d0 = |x - p|, d1 = |x - m|,
///   alpha0 = angle(p - x, pm), alpha1 = angle(m - x, pm).
/// Angles live in [0, pi]; a zero-length argument vector yields angle 0.
struct RIFeature {
    double d0 = 0.0;
    double d1 = 0.0;
    double alpha0 = 0.0;
    double alpha1 = 0.0;
};

/// Bin index per neighbor, partitioning the projections onto pm into
/// n_bins equal intervals over [t_min, t_max].
struct BinAssignment {
    std::vector<int> bin_of;
    int n_bins = 1;
};

/// Angle between two vectors in [0, pi]; 0 if either vector is zero.
double vector_angle(const geom::Vec3& a, const geom::Vec3& b);

/// Builds the neighbor frame at cloud point p_index with k nearest
/// neighbors (the point itself is its own nearest neighbor). Throws
/// std::invalid_argument when k is out of range or every neighbor
/// coincides with p, which leaves no usable reference vector.
NeighborFrame build_frame(const geom::PointCloud& cloud, int p_index, int k);

/// As build_frame, but an all-coincident neighborhood produces a frame with
/// pm = 0 instead of throwing; downstream conventions keep every feature
/// finite. Used by the convolution pipeline where k may be 1.
NeighborFrame build_frame_tolerant(const geom::PointCloud& cloud, int p_index, int k);

/// RIF features for every neighbor in frame order (length K).
std::vector<RIFeature> rif_features(const NeighborFrame& frame);

/// Assigns each neighbor to one of n_bins cells along pm. The cell range
/// adapts to [t_min, t_max] of the actual projections; if the range is
/// empty (or pm = 0) every neighbor lands in bin 0.
BinAssignment bin_assign(const NeighborFrame& frame, int n_bins);

}  // namespace riconv::rif
