#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "srlk/partition_distance.hpp"
#include "srlk/rng.hpp"
#include "test_util.hpp"

using namespace srlk;
using testutil::random_clustering;

namespace {

std::vector<PointId> full_ids(int n) {
    std::vector<PointId> ids(static_cast<size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

}  // namespace

TEST_CASE("delta of identical clusterings is zero with identity sigma") {
    Clustering c = Clustering::from_blocks(3, 6, {{0, 1}, {2, 3}, {4, 5}});
    DeltaResult r = delta(c, c);
    CHECK(r.value == 0.0);
    CHECK(r.match.sigma == std::vector<int>{0, 1, 2});
    CHECK(r.match.mismatch_total == 0);
}

TEST_CASE("delta of crossing pair partitions is 1") {
    // {{a,b},{c,d}} vs {{a,c},{b,d}}: both permutations give (2+2)/4.
    Clustering c1 = Clustering::from_blocks(2, 4, {{0, 1}, {2, 3}});
    Clustering c2 = Clustering::from_blocks(2, 4, {{0, 2}, {1, 3}});
    CHECK(delta_value(c1, c2) == 1.0);
    CHECK(delta_bruteforce(c1, c2) == 1.0);
}

TEST_CASE("delta is invariant to block relabeling") {
    Clustering c1 = Clustering::from_blocks(2, 4, {{0, 1, 2, 3}, {}});
    Clustering c2 = Clustering::from_blocks(2, 4, {{}, {0, 1, 2, 3}});
    DeltaResult r = delta(c1, c2);
    CHECK(r.value == 0.0);
    CHECK(r.match.sigma == std::vector<int>{1, 0});
}

TEST_CASE("delta input validation") {
    Clustering c1 = Clustering::from_blocks(2, 2, {{0}, {1}});
    Clustering c3 = Clustering::from_blocks(3, 2, {{0}, {1}, {}});
    CHECK_THROWS_AS(delta(c1, c3), std::invalid_argument);

    Clustering empty = restrict_to(c1, {});
    CHECK_THROWS_AS(delta(empty, empty), std::invalid_argument);
    CHECK_THROWS_AS(delta_sample(c1, c1, {}), std::invalid_argument);
}

TEST_CASE("delta_sample restriction identity and local agreement") {
    Clustering c1 = Clustering::from_blocks(2, 4, {{0, 1}, {2, 3}});
    Clustering c2 = Clustering::from_blocks(2, 4, {{0, 2}, {1, 3}});
    CHECK(delta_sample(c1, c2, full_ids(4)) == delta_value(c1, c2));

    // Globally different but agreeing on the sample.
    CHECK(delta_sample(c1, c2, {0, 3}) == 0.0);

    // Hand-enumerated: restrictions to {a,b} give {{a,b},{}} vs {{a},{b}};
    // both permutations cost (1+1)/2.
    CHECK(delta_sample(c1, c2, {0, 1}) == 1.0);
}

TEST_CASE("single-block delta is always zero") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        Clustering c1 = random_clustering(rng, 8, 1);
        Clustering c2 = random_clustering(rng, 8, 1);
        CHECK(delta_value(c1, c2) == 0.0);
    }
}

TEST_CASE("assignment solver matches brute force exactly on random instances") {
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        int k = 2 + static_cast<int>(rng.uniform_int(0, 4));
        int n = 2 + static_cast<int>(rng.uniform_int(0, 10));
        Clustering c1 = random_clustering(rng, n, k);
        Clustering c2 = random_clustering(rng, n, k);
        CHECK(delta(c1, c2).match.mismatch_total == delta_bruteforce_numerator(c1, c2));
    }
}

TEST_CASE("delta metric properties on random instances") {
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        int k = 2 + static_cast<int>(rng.uniform_int(0, 3));
        int n = 3 + static_cast<int>(rng.uniform_int(0, 9));
        Clustering a = random_clustering(rng, n, k);
        Clustering b = random_clustering(rng, n, k);
        Clustering c = random_clustering(rng, n, k);

        double ab = delta_value(a, b);
        CHECK(ab >= 0.0);
        CHECK(ab <= 2.0);
        CHECK(ab == delta_value(b, a));
        CHECK(delta_value(a, c) <= ab + delta_value(b, c) + 1e-12);
        CHECK(delta_value(a, a) == 0.0);
    }
}

TEST_CASE("zero delta means equal up to relabeling") {
    Rng rng(29);
    for (int t = 0; t < 100; ++t) {
        int k = 2 + static_cast<int>(rng.uniform_int(0, 2));
        int n = 4 + static_cast<int>(rng.uniform_int(0, 6));
        Clustering a = random_clustering(rng, n, k);
        Clustering b = random_clustering(rng, n, k);
        DeltaResult r = delta(a, b);
        bool relabel_equal = true;
        for (int i = 0; i < n; ++i)
            if (r.match.sigma[static_cast<size_t>(a.label(i))] != b.label(i)) relabel_equal = false;
        CHECK((r.value == 0.0) == relabel_equal);
    }
}

TEST_CASE("h_value counts both mismatched symmetric differences") {
    Clustering c1 = Clustering::from_blocks(2, 2, {{0}, {1}});
    Clustering c2 = Clustering::from_blocks(2, 2, {{1}, {0}});

    // Matched labels under the swap permutation.
    CHECK(h_value(c1, c2, {1, 0}, 0) == 0);
    CHECK(h_value(c1, c2, {1, 0}, 1) == 0);

    // Full disagreement under the identity: each point lies in both block
    // symmetric differences, so it carries mass 2.
    CHECK(h_value(c1, c2, {0, 1}, 0) == 2);
    CHECK(h_value(c1, c2, {0, 1}, 1) == 2);
    CHECK(h_mean(c1, c2, {0, 1}, {0, 1}) == 2.0);
    CHECK(h_mean(c1, c2, {1, 0}, {0, 1}) == 0.0);

    CHECK(delta_value(c1, c2) == 0.0);  // the swap wins
}

TEST_CASE("h identical clusterings vanish under identity") {
    Clustering c = Clustering::from_blocks(2, 4, {{0, 1}, {2, 3}});
    for (PointId x : full_ids(4)) CHECK(h_value(c, c, {0, 1}, x) == 0);
}

TEST_CASE("delta equals the minimum of h_mean over permutations") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        int k = 2 + static_cast<int>(rng.uniform_int(0, 1));
        int n = 3 + static_cast<int>(rng.uniform_int(0, 7));
        Clustering a = random_clustering(rng, n, k);
        Clustering b = random_clustering(rng, n, k);
        std::vector<PointId> ids = full_ids(n);

        std::vector<int> sigma(static_cast<size_t>(k));
        std::iota(sigma.begin(), sigma.end(), 0);
        long long best = -1;
        do {
            long long mass = h_mass(a, b, sigma, ids);
            if (best < 0 || mass < best) best = mass;
        } while (std::next_permutation(sigma.begin(), sigma.end()));

        CHECK(delta(a, b).match.mismatch_total == best);

        // Same identity on a random nonempty sample.
        int m = 1 + static_cast<int>(rng.uniform_int(0, n - 1));
        std::vector<PointId> sample = rng.sample_without_replacement(n, m);
        std::iota(sigma.begin(), sigma.end(), 0);
        best = -1;
        do {
            long long mass = h_mass(a, b, sigma, sample);
            if (best < 0 || mass < best) best = mass;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK(delta_on(a, b, sample).match.mismatch_total == best);
    }
}

TEST_CASE("permutation match reports consistent pieces") {
    Rng rng(37);
    for (int t = 0; t < 50; ++t) {
        int k = 2 + static_cast<int>(rng.uniform_int(0, 3));
        int n = 4 + static_cast<int>(rng.uniform_int(0, 8));
        Clustering a = random_clustering(rng, n, k);
        Clustering b = random_clustering(rng, n, k);
        DeltaResult r = delta(a, b);

        long long sum = 0;
        std::vector<char> seen(static_cast<size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
            sum += r.match.per_block[static_cast<size_t>(i)];
            seen[static_cast<size_t>(r.match.sigma[static_cast<size_t>(i)])] = 1;
        }
        CHECK(sum == r.match.mismatch_total);
        for (char s : seen) CHECK(s == 1);  // sigma is a bijection
        CHECK(r.match.domain_size == n);
    }
}

TEST_CASE("brute force rejects large k") {
    Rng rng(1);
    Clustering c1 = random_clustering(rng, 10, 9);
    Clustering c2 = random_clustering(rng, 10, 9);
    CHECK_THROWS_AS(delta_bruteforce(c1, c2), std::invalid_argument);
}
