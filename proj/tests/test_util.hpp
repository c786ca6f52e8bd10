#pragma once

#include <vector>

#include "srlk/core.hpp"
#include "srlk/rng.hpp"

namespace srlk::testutil {

inline Dataset make_dataset(std::vector<std::vector<double>> pts) {
    int dim = static_cast<int>(pts[0].size());
    return Dataset(dim, std::move(pts));
}

inline CenterSet centers(std::vector<std::vector<double>> mu) { return CenterSet(std::move(mu)); }

inline Dataset random_dataset(Rng& rng, int n, int dim, double lo = -1.0, double hi = 1.0) {
    std::vector<std::vector<double>> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<double> p(static_cast<size_t>(dim));
        for (double& v : p) v = rng.uniform(lo, hi);
        pts.push_back(std::move(p));
    }
    return Dataset(dim, std::move(pts));
}

// Random full-domain clustering; every block index is possible, empty blocks
// included.
inline Clustering random_clustering(Rng& rng, int n, int k) {
    std::vector<int> labels(static_cast<size_t>(n));
    for (int& l : labels) l = static_cast<int>(rng.uniform_int(0, k - 1));
    return Clustering(k, std::move(labels));
}

}  // namespace srlk::testutil
