#pragma once

#include <vector>

#include "srlk/core.hpp"

namespace srlk {

// Optimal block matching between two k-clusterings of the same domain.
// sigma maps blocks of the first clustering to blocks of the second;
// per_block[i] = |C1_i symdiff C2_sigma(i)| counted within the domain.
struct PermutationMatch {
    std::vector<int> sigma;
    std::vector<long long> per_block;
    long long mismatch_total = 0;  // sum(per_block); every mismatched point counts twice
    long long domain_size = 0;

    double value() const { return static_cast<double>(mismatch_total) / static_cast<double>(domain_size); }
};

struct DeltaResult {
    double value = 0.0;
    PermutationMatch match;
};

// Normalized minimum over block permutations of the summed symmetric
// differences. Computed as a min-cost assignment on the integer k x k cost
// matrix cost[i][j] = |C1_i symdiff C2_j|, so the minimum is exact; the
// division by the domain size happens only at the end. Value in [0, 2].
// Both clusterings must have the same k and partition the same nonempty domain.
DeltaResult delta(const Clustering& c1, const Clustering& c2);

double delta_value(const Clustering& c1, const Clustering& c2);

// Delta of the two clusterings restricted to `ids` (normalized by |ids|),
// computed directly from per-id labels so no restriction is materialized.
DeltaResult delta_on(const Clustering& c1, const Clustering& c2, const std::vector<PointId>& ids);

// Difference of the two clusterings restricted to `sample` (normalized by
// |sample|). The sample must be nonempty.
double delta_sample(const Clustering& c1, const Clustering& c2, const std::vector<PointId>& sample);

// Exact value by exhaustive enumeration of all k! permutations. Oracle for
// delta(); guarded to k <= 8.
double delta_bruteforce(const Clustering& c1, const Clustering& c2);
long long delta_bruteforce_numerator(const Clustering& c1, const Clustering& c2);

// Number of block symmetric differences C1_i symdiff C2_sigma(i) containing x.
// Always 0 or 2: a point mismatched under sigma lies in exactly two of them
// (once for its C1-block, once for its C2-block), so for any id set T,
//   delta(C1|T, C2|T) = min over sigma of h_mean(C1, C2, sigma, T)
// holds exactly. x must be in both domains.
int h_value(const Clustering& c1, const Clustering& c2, const std::vector<int>& sigma, PointId x);

// Average of h_value over the sample (must be nonempty).
double h_mean(const Clustering& c1, const Clustering& c2, const std::vector<int>& sigma,
              const std::vector<PointId>& sample);

// Integer numerator of h_mean * |sample|; exact arithmetic for cross-checks.
long long h_mass(const Clustering& c1, const Clustering& c2, const std::vector<int>& sigma,
                 const std::vector<PointId>& sample);

}  // namespace srlk
