#include "srlk/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "srlk/mapping_class.hpp"
#include "srlk/partition_distance.hpp"
#include "srlk/rng.hpp"

namespace srlk {

namespace {

UniquenessVerdict check_exact(const Dataset& X, const Mapping& f, int k, double eta, double eps,
                              unsigned long long guard) {
    KMeansSolution opt = solve_exact(X, f, k, guard);
    Dataset image = apply_mapping(f, X);

    UniquenessVerdict v;
    v.eta = eta;
    v.eps = eps;
    v.opt_cost = opt.cost;
    v.second_cost = opt.second_cost;
    v.degenerate_optimum = opt.degenerate_optimum;
    v.method = VerdictMethod::ExactEnumeration;
    v.optimum = opt.clustering;

    if (v.degenerate_optimum) {
        v.unique = false;
        // The equal-cost runner-up makes the optimum ill-defined; report it.
        return v;
    }

    bool found = false;
    for_each_partition_upto(X.size(), k, [&](const std::vector<int>& labels, int) {
        if (found) return;
        Clustering p(k, labels);
        double c = cost_partition_image(image, p);
        if (c >= opt.cost + eta) return;
        double d = delta_value(opt.clustering, p);
        if (d >= eps) {
            found = true;
            v.witness = UniquenessWitness{std::move(p), c, d};
        }
    });
    v.unique = !found;
    return v;
}

UniquenessVerdict check_local_search(const Dataset& X, const Mapping& f, int k, double eta, double eps,
                                     const SolvePolicy& policy) {
    Dataset image = apply_mapping(f, X);
    KMeansSolution best = solve(X, f, k, policy.seed, policy.restarts, policy.max_iterations,
                                policy.tolerance);

    // Candidate near-optimal partitions: Lloyd restarts, single-point
    // reassignment moves from the best, and seeded random block swaps.
    std::vector<Clustering> candidates;
    candidates.push_back(best.clustering);
    for (int r = 0; r < policy.restarts; ++r) {
        KMeansSolution s = solve(X, f, k, mix_seed(policy.seed, 0x5eedULL + static_cast<uint64_t>(r)), 1,
                                 policy.max_iterations, policy.tolerance);
        candidates.push_back(std::move(s.clustering));
    }
    for (int i = 0; i < X.size(); ++i) {
        for (int b = 0; b < k; ++b) {
            if (b == best.clustering.label(i)) continue;
            Clustering p = best.clustering;
            p.labels[static_cast<size_t>(i)] = b;
            candidates.push_back(std::move(p));
        }
    }
    Rng rng(mix_seed(policy.seed, 0x51a9ULL));
    for (int t = 0; t < 256; ++t) {
        Clustering p = best.clustering;
        int moves = 1 + static_cast<int>(rng.uniform_int(0, 2));
        for (int s = 0; s < moves; ++s) {
            int i = static_cast<int>(rng.uniform_int(0, X.size() - 1));
            p.labels[static_cast<size_t>(i)] = static_cast<int>(rng.uniform_int(0, k - 1));
        }
        candidates.push_back(std::move(p));
    }

    // Reference optimum = cheapest candidate seen, so the witness
    // inequalities hold against the reported opt_cost exactly as computed.
    std::vector<double> costs(candidates.size());
    size_t opt_idx = 0;
    for (size_t i = 0; i < candidates.size(); ++i) {
        costs[i] = cost_partition_image(image, candidates[i]);
        if (costs[i] < costs[opt_idx]) opt_idx = i;
    }

    UniquenessVerdict v;
    v.eta = eta;
    v.eps = eps;
    v.opt_cost = costs[opt_idx];
    v.method = VerdictMethod::LocalSearch;
    v.optimum = candidates[opt_idx];

    for (size_t i = 0; i < candidates.size() && !v.witness; ++i) {
        if (costs[i] >= v.opt_cost + eta) continue;
        double d = delta_value(v.optimum, candidates[i]);
        if (d >= eps) v.witness = UniquenessWitness{candidates[i], costs[i], d};
    }
    v.unique = !v.witness;  // "no counterexample found", not a certificate
    return v;
}

}  // namespace

UniquenessVerdict check_uniqueness(const Dataset& X, const Mapping& f, int k, double eta, double eps,
                                   const SolvePolicy& policy) {
    if (eta <= 0.0 || eps <= 0.0)
        throw std::invalid_argument("check_uniqueness: eta and eps must be positive");
    if (k < 1) throw std::invalid_argument("check_uniqueness: k must be positive");
    if (count_partitions_upto(X.size(), k, policy.exact_guard + 1) <= policy.exact_guard)
        return check_exact(X, f, k, eta, eps, policy.exact_guard);
    return check_local_search(X, f, k, eta, eps, policy);
}

Lemma3Report verify_lemma3(const Mapping& f1, const Mapping& f2, const CenterSet& mu, const Dataset& X) {
    if (!images_in_unit_box(f1, X) || !images_in_unit_box(f2, X))
        throw std::invalid_argument("verify_lemma3: mappings must send X into (0,1)^n");
    for (int j = 0; j < mu.k(); ++j)
        for (double v : mu[j])
            if (!(v > 0.0 && v < 1.0))
                throw std::invalid_argument("verify_lemma3: centers must lie in (0,1)^n");

    Lemma3Report rep;
    rep.d_l1 = l1_distance(f1, f2, X);
    rep.cost_diff = std::abs(cost_centers(X, f1, mu) - cost_centers(X, f2, mu));
    rep.ratio_bound = 3.0 * rep.d_l1;
    rep.within_bound = rep.cost_diff <= rep.ratio_bound + 1e-9;
    return rep;
}

Lemma1Report verify_lemma1(const Dataset& X, const Mapping& f1, const Mapping& f2, int k, double eta,
                           double eps, unsigned long long guard) {
    if (count_partitions_upto(X.size(), k, guard + 1) > guard)
        throw std::invalid_argument("verify_lemma1: instance too large for exact certification");

    Lemma1Report rep;
    rep.eta = eta;
    rep.eps = eps;
    rep.d_l1 = l1_distance(f1, f2, X);

    SolvePolicy exact_policy;
    exact_policy.prefer_exact = true;
    exact_policy.exact_guard = guard;
    UniquenessVerdict u1 = check_uniqueness(X, f1, k, eta, eps, exact_policy);
    UniquenessVerdict u2 = check_uniqueness(X, f2, k, eta, eps, exact_policy);
    rep.hypotheses_hold = u1.unique && u2.unique && u1.method == VerdictMethod::ExactEnumeration &&
                          u2.method == VerdictMethod::ExactEnumeration && rep.d_l1 < eta / 12.0;
    if (!rep.hypotheses_hold) return rep;

    // Exact optimal centers are the centroids of the exact optimal partitions.
    KMeansSolution s1 = solve_exact(X, f1, k, guard);
    KMeansSolution s2 = solve_exact(X, f2, k, guard);
    Clustering cross = voronoi_partition(f1, s2.centers, X);  // C^{f1}(mu^{f2})

    rep.delta_total = delta_value(s1.clustering, s2.clustering);
    rep.delta_first = delta_value(s1.clustering, cross);
    rep.delta_second = delta_value(cross, s2.clustering);
    rep.conclusion_ok = rep.delta_total < 2.0 * eps;
    rep.first_term_ok = rep.delta_first < eps;
    rep.second_term_ok = rep.delta_second < eps;
    return rep;
}

}  // namespace srlk
