#include "srlk/learner.hpp"

#include <cmath>
#include <stdexcept>

#include "srlk/partition_distance.hpp"
#include "srlk/rng.hpp"

namespace srlk {

CandidateEvaluation evaluate_candidates(const Dataset& X,
                                        std::vector<std::shared_ptr<const Mapping>> candidates, int k,
                                        const SolvePolicy& policy) {
    if (candidates.empty()) throw std::invalid_argument("evaluate_candidates: empty candidate list");
    CandidateEvaluation eval;
    eval.k = k;
    eval.mappings = std::move(candidates);
    eval.induced.reserve(eval.mappings.size());
    eval.exact.reserve(eval.mappings.size());
    for (size_t i = 0; i < eval.mappings.size(); ++i) {
        SolvePolicy p = policy;
        p.seed = mix_seed(policy.seed, static_cast<uint64_t>(i));
        KMeansSolution sol;
        try {
            sol = induced_clustering(X, *eval.mappings[i], k, p);
        } catch (const std::exception& e) {
            throw std::runtime_error("evaluate_candidates: solver failed on candidate " +
                                     std::to_string(i) + ": " + e.what());
        }
        eval.induced.push_back(std::move(sol.clustering));
        eval.exact.push_back(sol.is_exact);
    }
    return eval;
}

LearnResult term_learn(const CandidateEvaluation& eval, const std::vector<PointId>& sample,
                       const Clustering& sample_labels) {
    if (sample.empty()) throw std::invalid_argument("term_learn: empty sample");
    if (sample_labels.domain_size() != static_cast<int>(sample.size()))
        throw std::invalid_argument("term_learn: labels must partition exactly the sample");
    for (PointId id : sample)
        if (id < 0 || id >= sample_labels.size() || !sample_labels.in_domain(id))
            throw std::invalid_argument("term_learn: sample id missing from labels");

    LearnResult res;
    res.per_candidate_losses.resize(static_cast<size_t>(eval.size()));
    for (int i = 0; i < eval.size(); ++i) {
        double loss = delta_sample(eval.induced[static_cast<size_t>(i)], sample_labels, sample);
        res.per_candidate_losses[static_cast<size_t>(i)] = loss;
        if (res.chosen_index < 0 || loss < res.empirical_loss) {
            res.chosen_index = i;
            res.empirical_loss = loss;
        }
    }
    res.chosen = eval.mappings[static_cast<size_t>(res.chosen_index)];
    res.full_clustering = eval.induced[static_cast<size_t>(res.chosen_index)];
    return res;
}

LearnResult term_learn(const LearnProblem& problem) {
    if (problem.domain == nullptr) throw std::invalid_argument("term_learn: missing domain");
    CandidateEvaluation eval =
        evaluate_candidates(*problem.domain, problem.candidates, problem.k, problem.policy);
    return term_learn(eval, problem.sample, problem.sample_labels);
}

double representativeness(const CandidateEvaluation& eval, const Clustering& c_star,
                          const std::vector<PointId>& sample) {
    if (sample.empty()) throw std::invalid_argument("representativeness: empty sample");
    double worst = 0.0;
    for (int i = 0; i < eval.size(); ++i) {
        const Clustering& cf = eval.induced[static_cast<size_t>(i)];
        double gap = std::abs(delta_value(c_star, cf) - delta_sample(c_star, cf, sample));
        worst = std::max(worst, gap);
    }
    return worst;
}

RegretReport regret(const CandidateEvaluation& eval, const Clustering& c_star, const LearnResult& result) {
    RegretReport rep;
    for (int i = 0; i < eval.size(); ++i) {
        double loss = delta_value(c_star, eval.induced[static_cast<size_t>(i)]);
        if (rep.best_index < 0 || loss < rep.best_in_class) {
            rep.best_index = i;
            rep.best_in_class = loss;
        }
    }
    rep.learner_loss = delta_value(c_star, result.full_clustering);
    rep.regret = rep.learner_loss - rep.best_in_class;
    return rep;
}

}  // namespace srlk
