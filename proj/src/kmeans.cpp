#include "srlk/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "srlk/partition_distance.hpp"
#include "srlk/rng.hpp"

namespace srlk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::pair<std::vector<int>, double> assign_nearest(const Dataset& image, const CenterSet& mu) {
    std::vector<int> labels(static_cast<size_t>(image.size()), 0);
    double total = 0.0;
    for (int i = 0; i < image.size(); ++i) {
        double best = squared_distance(image[i], mu[0]);
        int arg = 0;
        for (int j = 1; j < mu.k(); ++j) {
            double d = squared_distance(image[i], mu[j]);
            if (d < best) {
                best = d;
                arg = j;
            }
        }
        labels[static_cast<size_t>(i)] = arg;
        total += best;
    }
    return {std::move(labels), total / static_cast<double>(image.size())};
}

// k-means++ seeding; duplicates are only chosen once all remaining D^2 mass
// is zero (k exceeds the number of distinct images).
CenterSet seed_centers(const Dataset& image, int k, Rng& rng) {
    std::vector<std::vector<double>> centers;
    centers.reserve(static_cast<size_t>(k));
    int first = static_cast<int>(rng.uniform_int(0, image.size() - 1));
    centers.push_back(image[first]);
    std::vector<double> d2(static_cast<size_t>(image.size()), 0.0);
    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (int i = 0; i < image.size(); ++i) {
            double best = squared_distance(image[i], centers[0]);
            for (size_t j = 1; j < centers.size(); ++j)
                best = std::min(best, squared_distance(image[i], centers[j]));
            d2[static_cast<size_t>(i)] = best;
            total += best;
        }
        int pick;
        if (total <= 0.0) {
            pick = static_cast<int>(rng.uniform_int(0, image.size() - 1));
        } else {
            double r = rng.uniform(0.0, total);
            double acc = 0.0;
            pick = image.size() - 1;
            for (int i = 0; i < image.size(); ++i) {
                acc += d2[static_cast<size_t>(i)];
                if (r < acc) {
                    pick = i;
                    break;
                }
            }
        }
        centers.push_back(image[pick]);
    }
    return CenterSet(std::move(centers));
}

struct LloydRun {
    CenterSet centers;
    std::vector<int> labels;
    double cost = kInf;
    std::vector<double> history;
};

// Centroid update with empty-cluster repair: each empty block's center is
// re-seeded to the point currently farthest from its assigned center
// (distinct points, ties to the lowest id). Repair never increases the cost
// of the following assignment step.
std::pair<CenterSet, bool> update_centers(const Dataset& image, const std::vector<int>& labels, int k,
                                          const CenterSet& prev) {
    std::vector<std::vector<double>> centers(static_cast<size_t>(k),
                                             std::vector<double>(static_cast<size_t>(image.dim), 0.0));
    std::vector<long long> count(static_cast<size_t>(k), 0);
    for (int i = 0; i < image.size(); ++i) {
        int l = labels[static_cast<size_t>(i)];
        ++count[static_cast<size_t>(l)];
        for (int d = 0; d < image.dim; ++d) centers[static_cast<size_t>(l)][static_cast<size_t>(d)] += image[i][static_cast<size_t>(d)];
    }
    std::vector<int> empties;
    for (int j = 0; j < k; ++j) {
        if (count[static_cast<size_t>(j)] == 0) {
            empties.push_back(j);
            continue;
        }
        for (int d = 0; d < image.dim; ++d)
            centers[static_cast<size_t>(j)][static_cast<size_t>(d)] /= static_cast<double>(count[static_cast<size_t>(j)]);
    }
    bool repaired = false;
    if (!empties.empty()) {
        std::vector<double> dist(static_cast<size_t>(image.size()));
        for (int i = 0; i < image.size(); ++i)
            dist[static_cast<size_t>(i)] = squared_distance(image[i], prev[labels[static_cast<size_t>(i)]]);
        std::vector<char> taken(static_cast<size_t>(image.size()), 0);
        for (int j : empties) {
            int far = -1;
            for (int i = 0; i < image.size(); ++i)
                if (!taken[static_cast<size_t>(i)] && (far < 0 || dist[static_cast<size_t>(i)] > dist[static_cast<size_t>(far)]))
                    far = i;
            if (far >= 0) {
                taken[static_cast<size_t>(far)] = 1;
                centers[static_cast<size_t>(j)] = image[far];
                repaired = true;
            } else {
                centers[static_cast<size_t>(j)] = image[0];
            }
        }
    }
    return {CenterSet(std::move(centers)), repaired};
}

LloydRun lloyd(const Dataset& image, int k, Rng& rng, int max_iterations, double tolerance) {
    LloydRun run;
    run.centers = seed_centers(image, k, rng);
    auto [labels, cost] = assign_nearest(image, run.centers);
    run.labels = std::move(labels);
    run.cost = cost;
    run.history.push_back(cost);
    for (int iter = 0; iter < max_iterations; ++iter) {
        auto [centers, repaired] = update_centers(image, run.labels, k, run.centers);
        auto [new_labels, new_cost] = assign_nearest(image, centers);
        run.history.push_back(new_cost);
        bool fixed_point = !repaired && new_labels == run.labels;
        bool stalled = !repaired && run.cost - new_cost < tolerance;
        run.centers = std::move(centers);
        run.labels = std::move(new_labels);
        run.cost = new_cost;
        if (fixed_point || stalled) break;
    }
    return run;
}

unsigned long long checked_partition_count(int n, int k, unsigned long long guard, const char* who) {
    unsigned long long count = count_partitions_upto(n, k, guard + 1);
    if (count > guard)
        throw std::invalid_argument(std::string(who) + ": instance too large (" + std::to_string(count) +
                                    " partitions exceed guard " + std::to_string(guard) + ")");
    return count;
}

}  // namespace

double cost_centers_image(const Dataset& image, const CenterSet& mu) {
    if (image.dim != mu.dim()) throw std::invalid_argument("cost_centers: dimension mismatch");
    return assign_nearest(image, mu).second;
}

double cost_centers(const Dataset& X, const Mapping& f, const CenterSet& mu) {
    return cost_centers_image(apply_mapping(f, X), mu);
}

CenterSet centroids_image(const Dataset& image, const Clustering& c) {
    std::vector<std::vector<double>> centers(static_cast<size_t>(c.k),
                                             std::vector<double>(static_cast<size_t>(image.dim), 0.0));
    std::vector<long long> count(static_cast<size_t>(c.k), 0);
    for (int i = 0; i < image.size(); ++i) {
        int l = c.label(i);
        ++count[static_cast<size_t>(l)];
        for (int d = 0; d < image.dim; ++d) centers[static_cast<size_t>(l)][static_cast<size_t>(d)] += image[i][static_cast<size_t>(d)];
    }
    for (int j = 0; j < c.k; ++j) {
        if (count[static_cast<size_t>(j)] == 0) continue;  // empty block: center stays at origin, unused
        for (int d = 0; d < image.dim; ++d)
            centers[static_cast<size_t>(j)][static_cast<size_t>(d)] /= static_cast<double>(count[static_cast<size_t>(j)]);
    }
    return CenterSet(std::move(centers));
}

double cost_partition_image(const Dataset& image, const Clustering& c) {
    if (c.size() != image.size() || c.domain_size() != image.size())
        throw std::invalid_argument("cost_partition: clustering must cover the dataset");
    CenterSet mu = centroids_image(image, c);
    double total = 0.0;
    for (int i = 0; i < image.size(); ++i) total += squared_distance(image[i], mu[c.label(i)]);
    return total / static_cast<double>(image.size());
}

double cost_partition(const Dataset& X, const Mapping& f, const Clustering& c) {
    return cost_partition_image(apply_mapping(f, X), c);
}

KMeansSolution solve(const Dataset& X, const Mapping& f, int k, uint64_t seed, int restarts,
                     int max_iterations, double tolerance) {
    if (k < 1) throw std::invalid_argument("solve: k must be positive");
    if (restarts < 1) throw std::invalid_argument("solve: restarts must be positive");
    Dataset image = apply_mapping(f, X);

    LloydRun best;
    for (int r = 0; r < restarts; ++r) {
        Rng rng(mix_seed(seed, static_cast<uint64_t>(r)));
        LloydRun run = lloyd(image, k, rng, max_iterations, tolerance);
        if (run.cost < best.cost) best = std::move(run);
    }

    KMeansSolution sol;
    sol.centers = best.centers;
    sol.clustering = Clustering(k, best.labels);
    sol.cost = best.cost;
    sol.restarts_used = restarts;
    sol.is_exact = false;
    sol.cost_history = best.history;
    for (const auto& block : sol.clustering.blocks())
        if (block.empty()) ++sol.empty_blocks;
    return sol;
}

unsigned long long count_partitions_upto(int n, int k, unsigned long long cap) {
    if (n < 0 || k < 1) throw std::invalid_argument("count_partitions_upto: bad arguments");
    if (n == 0) return 1;
    // Stirling recurrence S(i,j) = j*S(i-1,j) + S(i-1,j-1), saturating at cap.
    std::vector<unsigned long long> row(static_cast<size_t>(k) + 1, 0);
    row[1] = 1;  // S(1,1)
    for (int i = 2; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            unsigned long long a = row[static_cast<size_t>(j)];
            unsigned long long b = j >= 1 ? row[static_cast<size_t>(j) - 1] : 0;
            unsigned long long mul = (a > cap / static_cast<unsigned long long>(j)) ? cap : a * static_cast<unsigned long long>(j);
            unsigned long long s = mul > cap - std::min(b, cap) ? cap : mul + b;
            row[static_cast<size_t>(j)] = std::min(s, cap);
        }
        row[0] = 0;
    }
    unsigned long long total = 0;
    for (int j = 1; j <= k; ++j) {
        total = total > cap - std::min(row[static_cast<size_t>(j)], cap) ? cap : total + row[static_cast<size_t>(j)];
        total = std::min(total, cap);
    }
    return total;
}

void for_each_partition_upto(int n, int k, const std::function<void(const std::vector<int>&, int)>& fn) {
    if (n <= 0) return;
    std::vector<int> labels(static_cast<size_t>(n), 0);
    // Iterative restricted-growth-string successor, lexicographic order.
    std::vector<int> prefix_max(static_cast<size_t>(n), 0);  // max label among 0..i
    while (true) {
        int used = prefix_max[static_cast<size_t>(n) - 1] + 1;
        fn(labels, used);
        int i = n - 1;
        while (i > 0) {
            int lim = std::min(prefix_max[static_cast<size_t>(i) - 1] + 1, k - 1);
            if (labels[static_cast<size_t>(i)] < lim) break;
            --i;
        }
        if (i == 0) return;
        ++labels[static_cast<size_t>(i)];
        prefix_max[static_cast<size_t>(i)] = std::max(prefix_max[static_cast<size_t>(i) - 1], labels[static_cast<size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            labels[static_cast<size_t>(j)] = 0;
            prefix_max[static_cast<size_t>(j)] = prefix_max[static_cast<size_t>(j) - 1];
        }
    }
}

KMeansSolution solve_exact(const Dataset& X, const Mapping& f, int k, unsigned long long guard) {
    if (k < 1) throw std::invalid_argument("solve_exact: k must be positive");
    checked_partition_count(X.size(), k, guard, "solve_exact");
    Dataset image = apply_mapping(f, X);

    std::vector<int> best_labels, second_labels;
    double best_cost = kInf, second_cost = kInf;
    for_each_partition_upto(X.size(), k, [&](const std::vector<int>& labels, int) {
        double c = cost_partition_image(image, Clustering(k, labels));
        if (c < best_cost) {
            second_cost = best_cost;
            second_labels = best_labels;
            best_cost = c;
            best_labels = labels;
        } else if (c < second_cost) {
            second_cost = c;
            second_labels = labels;
        }
    });

    KMeansSolution sol;
    sol.clustering = Clustering(k, best_labels);
    sol.centers = centroids_image(image, sol.clustering);
    sol.cost = best_cost;
    sol.is_exact = true;
    for (const auto& block : sol.clustering.blocks())
        if (block.empty()) ++sol.empty_blocks;
    if (!second_labels.empty()) {
        sol.second_cost = second_cost;
        double d = delta_value(sol.clustering, Clustering(k, second_labels));
        sol.delta_to_second = d;
        sol.degenerate_optimum = (second_cost - best_cost < 1e-12) && d > 0.0;
    }
    return sol;
}

KMeansSolution induced_clustering(const Dataset& X, const Mapping& f, int k, const SolvePolicy& policy) {
    if (policy.prefer_exact &&
        count_partitions_upto(X.size(), k, policy.exact_guard + 1) <= policy.exact_guard)
        return solve_exact(X, f, k, policy.exact_guard);
    return solve(X, f, k, policy.seed, policy.restarts, policy.max_iterations, policy.tolerance);
}

double delta_mappings(const Mapping& f1, const Mapping& f2, const Dataset& X, int k,
                      const SolvePolicy& policy) {
    KMeansSolution s1 = induced_clustering(X, f1, k, policy);
    KMeansSolution s2 = induced_clustering(X, f2, k, policy);
    return delta_value(s1.clustering, s2.clustering);
}

}  // namespace srlk
