#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "srlk/kmeans.hpp"
#include "srlk/mapping_class.hpp"
#include "srlk/partition_distance.hpp"
#include "srlk/rng.hpp"
#include "srlk/uniqueness.hpp"
#include "test_util.hpp"

using namespace srlk;
using testutil::make_dataset;
using testutil::random_dataset;

namespace {

SolvePolicy exact_policy() {
    SolvePolicy p;
    p.prefer_exact = true;
    return p;
}

}  // namespace

TEST_CASE("separated pairs are unique below the enumerated cost gap") {
    Dataset X = make_dataset({{0.0}, {1.0}, {10.0}, {11.0}});
    LinearMapping id = LinearMapping::identity(1, 20.0);
    KMeansSolution exact = solve_exact(X, id, 2);
    double gap = *exact.second_cost - exact.cost;
    CHECK(gap > 0.0);

    UniquenessVerdict v = check_uniqueness(X, id, 2, 0.9 * gap, 0.1, exact_policy());
    CHECK(v.unique);
    CHECK(v.method == VerdictMethod::ExactEnumeration);
    CHECK_FALSE(v.degenerate_optimum);

    // Raising eta past the gap pulls in the runner-up, whose delta exceeds a
    // small eps.
    UniquenessVerdict w = check_uniqueness(X, id, 2, 1.1 * gap, 1e-9, exact_policy());
    CHECK_FALSE(w.unique);
    REQUIRE(w.witness.has_value());
    CHECK(w.witness->cost < w.opt_cost + w.eta);
    CHECK(w.witness->delta_to_opt >= w.eps);
}

TEST_CASE("degenerate optimum is never unique") {
    Dataset X = make_dataset({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});
    UniquenessVerdict v = check_uniqueness(X, LinearMapping::identity(2), 2, 1e-6, 1.9, exact_policy());
    CHECK_FALSE(v.unique);
    CHECK(v.degenerate_optimum);
}

TEST_CASE("extreme eta admits every partition") {
    Dataset X = make_dataset({{0.0}, {1.0}, {10.0}, {11.0}});
    LinearMapping id = LinearMapping::identity(1, 20.0);

    // All partitions fall within eta, and generic data has far-away ones.
    UniquenessVerdict v = check_uniqueness(X, id, 2, 1e9, 0.5, exact_policy());
    CHECK_FALSE(v.unique);

    // With eps beyond the delta range the quantifier is vacuous again.
    UniquenessVerdict w = check_uniqueness(X, id, 2, 1e9, 2.0000001, exact_policy());
    CHECK(w.unique);
}

TEST_CASE("exact verdicts are monotone in eta and eps") {
    Rng rng(97);
    for (int t = 0; t < 15; ++t) {
        Dataset X = random_dataset(rng, 7, 2);
        LinearMapping id = LinearMapping::identity(2);
        double eta = rng.uniform(0.001, 0.2);
        double eps = rng.uniform(0.1, 1.0);
        UniquenessVerdict v = check_uniqueness(X, id, 2, eta, eps, exact_policy());
        if (!v.unique) continue;
        CHECK(check_uniqueness(X, id, 2, eta * 0.5, eps, exact_policy()).unique);
        CHECK(check_uniqueness(X, id, 2, eta, eps * 2.0, exact_policy()).unique);
    }
}

TEST_CASE("local-search mode flags its method and finds obvious witnesses") {
    SolvePolicy heuristic;
    heuristic.exact_guard = 0;  // force the search path
    heuristic.restarts = 20;

    Dataset corners = make_dataset({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});
    UniquenessVerdict v = check_uniqueness(corners, LinearMapping::identity(2), 2, 1e-6, 0.5, heuristic);
    CHECK(v.method == VerdictMethod::LocalSearch);
    CHECK_FALSE(v.unique);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->cost < v.opt_cost + v.eta);
    CHECK(v.witness->delta_to_opt >= v.eps);
    // The witness inequalities hold under this module's own operations.
    CHECK(cost_partition(corners, LinearMapping::identity(2), v.witness->partition) ==
          doctest::Approx(v.witness->cost));

    Dataset pairs = make_dataset({{0.0}, {1.0}, {10.0}, {11.0}});
    UniquenessVerdict u =
        check_uniqueness(pairs, LinearMapping::identity(1, 20.0), 2, 0.05, 0.25, heuristic);
    CHECK(u.method == VerdictMethod::LocalSearch);
    CHECK(u.unique);  // no counterexample found
}

TEST_CASE("check_uniqueness rejects nonpositive parameters") {
    Dataset X = make_dataset({{0.0}, {1.0}});
    LinearMapping id = LinearMapping::identity(1);
    CHECK_THROWS_AS(check_uniqueness(X, id, 2, 0.0, 0.1, exact_policy()), std::invalid_argument);
    CHECK_THROWS_AS(check_uniqueness(X, id, 2, 0.1, -1.0, exact_policy()), std::invalid_argument);
}

TEST_CASE("lemma-3 style cost perturbation bound") {
    Rng rng(101);
    Box box({-1.0, -1.0}, {1.0, 1.0});
    MappingClass F(2, 2, 1.0, 0.5, box);
    Dataset X = random_dataset(rng, 8, 2);

    LinearMapping f = F.random_member(1);
    CenterSet mu(std::vector<std::vector<double>>{{0.3, 0.4}, {0.7, 0.6}});
    Lemma3Report same = verify_lemma3(f, f, mu, X);
    CHECK(same.cost_diff == 0.0);
    CHECK(same.within_bound);

    for (int t = 0; t < 200; ++t) {
        LinearMapping f1 = F.random_member(rng.next_u64());
        LinearMapping f2 = F.random_member(rng.next_u64());
        std::vector<std::vector<double>> centers;
        for (int j = 0; j < 2; ++j) centers.push_back({rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95)});
        Lemma3Report rep = verify_lemma3(f1, f2, CenterSet(centers), X);
        CHECK(rep.within_bound);  // codomain dimension 2 keeps the factor-3 bound a theorem
    }
}

TEST_CASE("lemma-3 verifier rejects out-of-box inputs") {
    Dataset X = make_dataset({{5.0}});
    LinearMapping id = LinearMapping::identity(1, 10.0);  // image 5.0 is outside (0,1)
    CenterSet mu(std::vector<std::vector<double>>{{0.5}});
    CHECK_THROWS_AS(verify_lemma3(id, id, mu, X), std::invalid_argument);
}

TEST_CASE("close certified-unique mappings induce close clusterings") {
    // Two tight separated clusters on the line; class members are normalized
    // scalar maps, so the induced optimum is the two clusters for any
    // positive coefficient.
    Dataset X = make_dataset({{0.0}, {0.5}, {1.0}, {10.0}, {10.5}, {11.0}});
    Box box({-0.5}, {11.5});
    MappingClass F(1, 1, 1.0, 0.1, box);

    LinearMapping f1 = F.member({0.8});
    KMeansSolution exact = solve_exact(X, f1, 2);
    double gap = *exact.second_cost - exact.cost;
    double eta = 0.5 * gap;
    double eps = 0.3;

    // Perturbation sized so that the l1 distance stays below eta / 12.
    LinearMapping probe = F.member({0.8 + 1e-3});
    double d_unit = l1_distance(f1, probe, X) / 1e-3;
    double step = 0.5 * (eta / 12.0) / d_unit;
    LinearMapping f2 = F.member({0.8 + step});

    Lemma1Report rep = verify_lemma1(X, f1, f2, 2, eta, eps);
    CHECK(rep.hypotheses_hold);
    CHECK(rep.d_l1 < eta / 12.0);
    CHECK(rep.conclusion_ok);
    CHECK(rep.first_term_ok);
    CHECK(rep.second_term_ok);
    CHECK(rep.delta_total == 0.0);

    Lemma1Report trivial = verify_lemma1(X, f1, f1, 2, eta, eps);
    CHECK(trivial.hypotheses_hold);
    CHECK(trivial.delta_total == 0.0);
}
