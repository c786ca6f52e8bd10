#include <doctest.h>

#include <memory>
#include <numeric>

#include "srlk/learner.hpp"
#include "srlk/partition_distance.hpp"
#include "srlk/rng.hpp"
#include "test_util.hpp"

using namespace srlk;
using testutil::make_dataset;
using testutil::random_clustering;
using testutil::random_dataset;

namespace {

SolvePolicy exact_policy() {
    SolvePolicy p;
    p.prefer_exact = true;
    return p;
}

std::vector<std::shared_ptr<const Mapping>> wrap(std::vector<TableMapping> ms) {
    std::vector<std::shared_ptr<const Mapping>> out;
    for (auto& m : ms) out.push_back(std::make_shared<TableMapping>(std::move(m)));
    return out;
}

}  // namespace

TEST_CASE("term_learn reaches zero loss on a realizable candidate list") {
    Rng rng(103);
    Dataset X = random_dataset(rng, 8, 2);
    Clustering target = Clustering::from_blocks(2, 8, {{0, 2, 4, 6}, {1, 3, 5, 7}});
    Clustering decoy = Clustering::from_blocks(2, 8, {{0, 1, 2, 3}, {4, 5, 6, 7}});

    LearnProblem problem;
    problem.domain = &X;
    problem.sample = {0, 1, 4, 5};
    problem.sample_labels = restrict_to(target, problem.sample);
    problem.candidates = wrap({collapse_mapping(decoy, 2), collapse_mapping(target, 2)});
    problem.k = 2;
    problem.policy = exact_policy();

    LearnResult res = term_learn(problem);
    CHECK(res.empirical_loss == 0.0);
    CHECK(delta_sample(res.full_clustering, target, problem.sample) == 0.0);
    CHECK(res.per_candidate_losses[1] == 0.0);
}

TEST_CASE("singleton candidate list is returned regardless of loss") {
    Rng rng(107);
    Dataset X = random_dataset(rng, 6, 1);
    Clustering y = Clustering::from_blocks(2, 6, {{0, 1, 2}, {3, 4, 5}});
    Clustering other = Clustering::from_blocks(2, 6, {{0, 3, 4}, {1, 2, 5}});

    LearnProblem problem;
    problem.domain = &X;
    problem.sample = {0, 1, 3};
    problem.sample_labels = restrict_to(y, problem.sample);
    problem.candidates = wrap({collapse_mapping(other, 2)});
    problem.k = 2;
    problem.policy = exact_policy();

    LearnResult res = term_learn(problem);
    CHECK(res.chosen_index == 0);
    CHECK(res.empirical_loss > 0.0);
}

TEST_CASE("TERM only sees the sample: lowest index wins ties") {
    // Candidate A matches the target on S but mislabels the rest; candidate B
    // matches everywhere. Both have zero empirical loss, so the lower index
    // (A) is chosen and carries the constructed regret.
    Rng rng(109);
    Dataset X = random_dataset(rng, 6, 2);
    Clustering c_star = Clustering::from_blocks(2, 6, {{0, 1, 2}, {3, 4, 5}});
    Clustering off_sample = Clustering::from_blocks(2, 6, {{0, 1, 5}, {3, 4, 2}});
    std::vector<PointId> sample = {0, 1, 3, 4};

    CandidateEvaluation eval = evaluate_candidates(
        X, wrap({collapse_mapping(off_sample, 2), collapse_mapping(c_star, 2)}), 2, exact_policy());
    LearnResult res = term_learn(eval, sample, restrict_to(c_star, sample));

    CHECK(res.chosen_index == 0);
    CHECK(res.empirical_loss == 0.0);
    CHECK(res.per_candidate_losses == std::vector<double>{0.0, 0.0});

    RegretReport rep = regret(eval, c_star, res);
    CHECK(rep.best_in_class == 0.0);
    CHECK(rep.best_index == 1);
    CHECK(rep.learner_loss == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(rep.regret == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("representativeness vanishes when the sample is the domain") {
    Rng rng(113);
    Dataset X = random_dataset(rng, 10, 2);
    Clustering c_star = random_clustering(rng, 10, 2);
    std::vector<TableMapping> ms;
    for (int i = 0; i < 3; ++i) ms.push_back(collapse_mapping(random_clustering(rng, 10, 2), 2));
    CandidateEvaluation eval = evaluate_candidates(X, wrap(std::move(ms)), 2, exact_policy());

    std::vector<PointId> all(10);
    std::iota(all.begin(), all.end(), 0);
    CHECK(representativeness(eval, c_star, all) == 0.0);
}

TEST_CASE("representativeness of a singleton class matching the target") {
    Rng rng(127);
    Dataset X = random_dataset(rng, 8, 2);
    Clustering c_star = random_clustering(rng, 8, 2);
    CandidateEvaluation eval =
        evaluate_candidates(X, wrap({collapse_mapping(c_star, 2)}), 2, exact_policy());
    CHECK(representativeness(eval, c_star, {0, 3, 6}) == 0.0);
}

TEST_CASE("representativeness equals the hand-enumerated worst gap") {
    Rng rng(131);
    Dataset X = random_dataset(rng, 12, 2);
    Clustering c_star = random_clustering(rng, 12, 2);
    Clustering g1 = random_clustering(rng, 12, 2);
    Clustering g2 = random_clustering(rng, 12, 2);
    CandidateEvaluation eval =
        evaluate_candidates(X, wrap({collapse_mapping(g1, 2), collapse_mapping(g2, 2)}), 2, exact_policy());
    std::vector<PointId> sample = rng.sample_without_replacement(12, 6);

    double worst = 0.0;
    for (const Clustering& cf : eval.induced) {
        // Independent route: exhaustive permutation enumeration on both scopes.
        double gx = delta_bruteforce(c_star, cf);
        double gs = delta_bruteforce(restrict_to(c_star, sample), restrict_to(cf, sample));
        worst = std::max(worst, std::abs(gx - gs));
    }
    CHECK(representativeness(eval, c_star, sample) == doctest::Approx(worst).epsilon(1e-15));
}

TEST_CASE("regret is nonnegative and zero when the sample is everything") {
    Rng rng(137);
    for (int t = 0; t < 10; ++t) {
        Dataset X = random_dataset(rng, 9, 2);
        Clustering c_star = random_clustering(rng, 9, 2);
        std::vector<TableMapping> ms;
        for (int i = 0; i < 4; ++i) ms.push_back(collapse_mapping(random_clustering(rng, 9, 2), 2));
        CandidateEvaluation eval = evaluate_candidates(X, wrap(std::move(ms)), 2, exact_policy());

        std::vector<PointId> sample = rng.sample_without_replacement(9, 4);
        LearnResult res = term_learn(eval, sample, restrict_to(c_star, sample));
        RegretReport rep = regret(eval, c_star, res);
        CHECK(rep.regret >= 0.0);

        std::vector<PointId> all(9);
        std::iota(all.begin(), all.end(), 0);
        LearnResult res_all = term_learn(eval, all, c_star);
        CHECK(regret(eval, c_star, res_all).regret == 0.0);
    }
}

TEST_CASE("enlarging the candidate list never raises the empirical loss") {
    Rng rng(139);
    for (int t = 0; t < 10; ++t) {
        Dataset X = random_dataset(rng, 8, 2);
        Clustering c_star = random_clustering(rng, 8, 2);
        std::vector<TableMapping> ms;
        for (int i = 0; i < 5; ++i) ms.push_back(collapse_mapping(random_clustering(rng, 8, 2), 2));
        std::vector<PointId> sample = rng.sample_without_replacement(8, 4);
        Clustering y = restrict_to(c_star, sample);

        double prev = 2.0;
        for (size_t take = 1; take <= 5; ++take) {
            std::vector<TableMapping> prefix(ms.begin(), ms.begin() + static_cast<long>(take));
            CandidateEvaluation eval = evaluate_candidates(X, wrap(std::move(prefix)), 2, exact_policy());
            LearnResult res = term_learn(eval, sample, y);
            CHECK(res.empirical_loss <= prev + 1e-15);
            prev = res.empirical_loss;
        }
    }
}

TEST_CASE("term_learn rejects malformed samples") {
    Rng rng(149);
    Dataset X = random_dataset(rng, 6, 1);
    Clustering c_star = random_clustering(rng, 6, 2);
    CandidateEvaluation eval =
        evaluate_candidates(X, wrap({collapse_mapping(c_star, 2)}), 2, exact_policy());

    CHECK_THROWS_AS(term_learn(eval, {}, restrict_to(c_star, {})), std::invalid_argument);
    // Labels covering more than the sample are rejected.
    CHECK_THROWS_AS(term_learn(eval, {0, 1}, restrict_to(c_star, {0, 1, 2})), std::invalid_argument);
}
