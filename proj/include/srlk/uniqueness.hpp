#pragma once

#include <optional>
#include <vector>

#include "srlk/core.hpp"
#include "srlk/kmeans.hpp"

namespace srlk {

enum class VerdictMethod { ExactEnumeration, LocalSearch };

struct UniquenessWitness {
    Clustering partition;  // cost below opt + eta yet delta >= eps
    double cost = 0.0;
    double delta_to_opt = 0.0;
};

// Verdict for (eta, eps)-uniqueness: every partition with cost below
// opt + eta is within eps (in delta) of the optimal clustering; a degenerate
// optimum (distinct equal-cost partitions) is never unique. Exact-enumeration
// verdicts are definitive; a local-search "unique" only means no
// counterexample was found.
struct UniquenessVerdict {
    bool unique = false;
    double eta = 0.0, eps = 0.0;
    double opt_cost = 0.0;
    std::optional<double> second_cost;
    std::optional<UniquenessWitness> witness;
    bool degenerate_optimum = false;
    VerdictMethod method = VerdictMethod::ExactEnumeration;
    Clustering optimum;
};

UniquenessVerdict check_uniqueness(const Dataset& X, const Mapping& f, int k, double eta, double eps,
                                   const SolvePolicy& policy);

// Cost perturbation bound for mappings into (0,1)^n: for any center set mu
// in (0,1)^n, |COST(f1, mu) - COST(f2, mu)| <= 3 * d_l1(f1, f2). The sharp
// constant is 2*sqrt(n), so the factor-3 form is a theorem only for n <= 2;
// the hard-asserting suites pin n there.
struct Lemma3Report {
    double d_l1 = 0.0;
    double cost_diff = 0.0;
    double ratio_bound = 0.0;  // 3 * d_l1
    bool within_bound = false;
};

Lemma3Report verify_lemma3(const Mapping& f1, const Mapping& f2, const CenterSet& mu, const Dataset& X);

// Close mappings with certified unique solutions induce close clusterings:
// given both mappings (eta, eps)-unique (exact mode) and d_l1 < eta/12,
// checks delta(f1, f2) < 2*eps along with the two intermediate terms
// delta(C^{f1}(mu^{f1}), C^{f1}(mu^{f2})) < eps and
// delta(C^{f1}(mu^{f2}), C^{f2}(mu^{f2})) < eps.
struct Lemma1Report {
    double d_l1 = 0.0;
    double eta = 0.0, eps = 0.0;
    bool hypotheses_hold = false;  // both certified unique and d_l1 < eta/12
    double delta_total = 0.0;
    double delta_first = 0.0;   // optimum of f1 vs Voronoi of mu^{f2} under f1
    double delta_second = 0.0;  // Voronoi of mu^{f2} under f1 vs optimum of f2
    bool conclusion_ok = false;
    bool first_term_ok = false;
    bool second_term_ok = false;
};

Lemma1Report verify_lemma1(const Dataset& X, const Mapping& f1, const Mapping& f2, int k, double eta,
                           double eps, unsigned long long guard = 1'000'000);

}  // namespace srlk
