#include "riconv/sampling.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace riconv::sampling {

SampleResult farthest_point_sampling(const geom::PointCloud& cloud, int n) {
    const int count = static_cast<int>(cloud.size());
    if (n < 1 || n > count) {
        throw std::invalid_argument("farthest_point_sampling: n out of range");
    }

    const geom::Vec3 c = geom::centroid(cloud.points);

    // Seed: farthest from centroid, lowest index on ties.
    int seed = 0;
    double best = -1.0;
    for (int i = 0; i < count; ++i) {
        const double d2 = (cloud.points[i] - c).squaredNorm();
        if (d2 > best) {
            best = d2;
            seed = i;
        }
    }

    SampleResult result;
    result.indices.reserve(n);
    result.indices.push_back(seed);

    // min_d2[i] = squared distance from point i to the selected set.
    std::vector<double> min_d2(count, std::numeric_limits<double>::infinity());
    std::vector<char> selected(count, 0);
    selected[seed] = 1;
    int last = seed;
    for (int step = 1; step < n; ++step) {
        int pick = -1;
        double pick_d2 = -1.0;
        for (int i = 0; i < count; ++i) {
            const double d2 = (cloud.points[i] - cloud.points[last]).squaredNorm();
            if (d2 < min_d2[i]) min_d2[i] = d2;
            if (!selected[i] && min_d2[i] > pick_d2) {
                pick_d2 = min_d2[i];
                pick = i;
            }
        }
        result.indices.push_back(pick);
        selected[pick] = 1;
        last = pick;
    }
    return result;
}

SampleResult knn(const geom::PointCloud& cloud, const geom::Vec3& query, int k) {
    const int count = static_cast<int>(cloud.size());
    if (k < 1 || k > count) {
        throw std::invalid_argument("knn: k out of range");
    }

    std::vector<std::pair<double, int>> dist;  // (squared distance, index)
    dist.reserve(count);
    for (int i = 0; i < count; ++i) {
        dist.emplace_back((cloud.points[i] - query).squaredNorm(), i);
    }
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());

    SampleResult result;
    result.indices.reserve(k);
    for (int i = 0; i < k; ++i) result.indices.push_back(dist[i].second);
    return result;
}

}  // namespace riconv::sampling
