#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "srlk/core.hpp"

namespace srlk {

struct KMeansSolution {
    CenterSet centers;
    Clustering clustering;  // equals voronoi_partition(f, centers, X) under the tie rule
    double cost = 0.0;      // COST_X(f, centers)
    int restarts_used = 0;
    bool is_exact = false;
    int empty_blocks = 0;
    // Exact solver extras: runner-up over all enumerated partitions.
    std::optional<double> second_cost;
    std::optional<double> delta_to_second;
    bool degenerate_optimum = false;  // distinct partition with equal cost (within 1e-12)
    // Winning restart's per-iteration costs (Lloyd only).
    std::vector<double> cost_history;
};

// How "the" k-means clustering of a mapping is produced. The exact
// enumeration defines it when feasible; otherwise seeded Lloyd restarts are
// the canonical surrogate, and results record which was used.
struct SolvePolicy {
    bool prefer_exact = false;
    unsigned long long exact_guard = 1'000'000;  // max enumerated partitions
    int restarts = 50;
    uint64_t seed = 0;
    int max_iterations = 500;
    double tolerance = 1e-12;
};

// Mean over X of the squared distance from f(x) to its nearest center.
double cost_centers(const Dataset& X, const Mapping& f, const CenterSet& mu);

// Mean over X of per-block squared deviations from the block centroid in
// image space; empty blocks contribute zero. The clustering must cover X.
double cost_partition(const Dataset& X, const Mapping& f, const Clustering& c);

// Image-space variants (x already mapped); the wrappers above apply f once.
double cost_centers_image(const Dataset& image, const CenterSet& mu);
double cost_partition_image(const Dataset& image, const Clustering& c);
CenterSet centroids_image(const Dataset& image, const Clustering& c);

// Lloyd's iterations from k-means++ seeded starts, `restarts` times with
// substreams derived from `seed`; lowest cost wins, ties keep the earliest
// restart. Convergence: assignment fixed point, cost improvement below
// tolerance, or the iteration cap. Empty clusters are repaired by re-seeding
// to the farthest point.
KMeansSolution solve(const Dataset& X, const Mapping& f, int k, uint64_t seed, int restarts,
                     int max_iterations = 500, double tolerance = 1e-12);

// Global optimum by enumerating all partitions of X into at most k blocks
// (restricted growth strings, padded with trailing empty blocks). Also
// reports the second-best cost and the delta to the second-best clustering.
// Rejected when the partition count exceeds `guard`.
KMeansSolution solve_exact(const Dataset& X, const Mapping& f, int k,
                           unsigned long long guard = 1'000'000);

KMeansSolution induced_clustering(const Dataset& X, const Mapping& f, int k, const SolvePolicy& policy);

// Delta between the k-means clusterings induced by the two mappings.
double delta_mappings(const Mapping& f1, const Mapping& f2, const Dataset& X, int k,
                      const SolvePolicy& policy);

// Number of partitions of an n-set into at most k blocks (sum of Stirling
// numbers), saturating at `cap`.
unsigned long long count_partitions_upto(int n, int k, unsigned long long cap);

// Enumerates restricted growth strings over n items with at most k blocks in
// lexicographic order; fn receives (labels, blocks_used).
void for_each_partition_upto(int n, int k, const std::function<void(const std::vector<int>&, int)>& fn);

}  // namespace srlk
