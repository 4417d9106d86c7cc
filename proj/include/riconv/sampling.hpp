#pragma once

#include <vector>

#include "riconv/geom.hpp"

namespace riconv::sampling {

/// Ordered indices into a source cloud. Indices are unique and in range.
struct SampleResult {
    std::vector<int> indices;
};

/// Farthest point sampling. The seed is the point farthest from the cloud
/// centroid; each subsequent pick maximizes the minimum distance to the
/// already-selected set. All ties break to the lowest original index, which
/// makes the selection deterministic and, on tie-free clouds, invariant to
/// rigid transforms and input permutations.
/// Throws std::invalid_argument unless 1 <= n <= cloud size.
SampleResult farthest_point_sampling(const geom::PointCloud& cloud, int n);

/// k nearest neighbors of `query`, ordered by nondecreasing distance with
/// distance ties broken by lowest index. Brute force.
/// Throws std::invalid_argument unless 1 <= k <= cloud size.
SampleResult knn(const geom::PointCloud& cloud, const geom::Vec3& query, int k);

}  // namespace riconv::sampling
