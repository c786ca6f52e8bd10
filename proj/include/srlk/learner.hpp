#pragma once

#include <memory>
#include <vector>

#include "srlk/core.hpp"
#include "srlk/kmeans.hpp"

namespace srlk {

// Full-domain k-means clusterings of a finite candidate list, computed once
// and reused: the induced clusterings are transductive (they depend on X, not
// on any sample), so sweeps over many samples share them.
struct CandidateEvaluation {
    std::vector<std::shared_ptr<const Mapping>> mappings;
    std::vector<Clustering> induced;  // C^f_X per candidate
    std::vector<bool> exact;          // which clusterings came from the exact solver
    int k = 0;

    int size() const { return static_cast<int>(mappings.size()); }
};

CandidateEvaluation evaluate_candidates(const Dataset& X,
                                        std::vector<std::shared_ptr<const Mapping>> candidates, int k,
                                        const SolvePolicy& policy);

// Inputs of one learning run: domain X, a clustered sample (Y partitions the
// sample ids; ids outside the sample carry the excluded label), and the
// finite search space.
struct LearnProblem {
    const Dataset* domain = nullptr;
    std::vector<PointId> sample;
    Clustering sample_labels;  // Y = C*|_S
    std::vector<std::shared_ptr<const Mapping>> candidates;
    int k = 0;
    SolvePolicy policy;
};

struct LearnResult {
    int chosen_index = -1;
    std::shared_ptr<const Mapping> chosen;
    double empirical_loss = 0.0;  // delta on the sample between C^{f_hat}_X and Y
    Clustering full_clustering;   // C^{f_hat}_X
    std::vector<double> per_candidate_losses;
};

// Empirical risk minimization over the candidate list: picks the candidate
// whose full-domain clustering best matches Y on the sample; ties break to
// the lowest candidate index.
LearnResult term_learn(const CandidateEvaluation& eval, const std::vector<PointId>& sample,
                       const Clustering& sample_labels);
LearnResult term_learn(const LearnProblem& problem);

// Smallest eps for which the sample is eps-representative with respect to
// the candidate list: max over candidates of
// |delta_X(C*, C^f_X) - delta_S(C*, C^f_X)|.
double representativeness(const CandidateEvaluation& eval, const Clustering& c_star,
                          const std::vector<PointId>& sample);

struct RegretReport {
    double regret = 0.0;         // learner_loss - best_in_class, always >= 0
    double best_in_class = 0.0;  // min over candidates of delta_X(C*, C^f_X)
    double learner_loss = 0.0;   // delta_X(C*, C^{f_hat}_X)
    int best_index = -1;
};

RegretReport regret(const CandidateEvaluation& eval, const Clustering& c_star, const LearnResult& result);

}  // namespace srlk
