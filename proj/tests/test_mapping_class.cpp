#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "srlk/mapping_class.hpp"
#include "srlk/rng.hpp"
#include "test_util.hpp"

using namespace srlk;
using testutil::make_dataset;
using testutil::random_dataset;

TEST_CASE("l1_distance closed form for scalar maps") {
    Dataset X = make_dataset({{0.1}, {0.4}, {0.9}});
    double mean_abs = (0.1 + 0.4 + 0.9) / 3.0;

    LinearMapping fa = LinearMapping::scalar(1, 0.3);
    LinearMapping fb = LinearMapping::scalar(1, 0.8);
    CHECK(l1_distance(fa, fa, X) == 0.0);
    CHECK(l1_distance(fa, fb, X) == doctest::Approx(0.5 * mean_abs).epsilon(1e-12));
}

TEST_CASE("l1_distance is a pseudometric on random triples") {
    Rng rng(71);
    MappingClass F(2, 2, 1.0, 0.5);
    Dataset X = random_dataset(rng, 10, 2);
    for (int t = 0; t < 50; ++t) {
        LinearMapping a = F.random_member(rng.next_u64());
        LinearMapping b = F.random_member(rng.next_u64());
        LinearMapping c = F.random_member(rng.next_u64());
        double ab = l1_distance(a, b, X);
        CHECK(ab >= 0.0);
        CHECK(ab == l1_distance(b, a, X));
        CHECK(l1_distance(a, c, X) <= ab + l1_distance(b, c, X) + 1e-12);
    }
}

TEST_CASE("grid enumeration matches the size formula") {
    MappingClass F(2, 1, 1.0, 0.3);
    unsigned long long per_axis = F.grid_axis_count();
    CHECK(per_axis == 7);  // ceil(2 / 0.3)
    auto grid = F.enumerate_grid();
    CHECK(grid.size() == 49);
    for (const auto& f : grid)
        for (double e : f.entries) CHECK(std::abs(e) <= 1.0);

    MappingClass big(3, 3, 1.0, 0.01);
    CHECK_THROWS_AS(big.enumerate_grid(1000), std::invalid_argument);
}

TEST_CASE("normalized class members land strictly inside the unit box") {
    Rng rng(73);
    Box box({-2.0, -3.0}, {2.0, 3.0});
    MappingClass F(2, 2, 1.5, 0.5, box);
    Dataset X = random_dataset(rng, 20, 2, -2.0, 2.0);
    for (int t = 0; t < 20; ++t) {
        LinearMapping f = F.random_member(rng.next_u64());
        CHECK(images_in_unit_box(f, X));
    }
}

TEST_CASE("build_cover covers spot samples and scales with eps") {
    Rng rng(79);
    Dataset X = random_dataset(rng, 12, 1, 0.0, 1.0);
    MappingClass F(1, 1, 1.0, 0.5);

    Cover fine = build_cover(F, 0.05, X);
    CHECK(fine.verified);
    CHECK(fine.worst_spot_distance <= 0.05 + 1e-12);

    // Direct check on fresh random members, not just the builder's samples.
    for (int t = 0; t < 100; ++t) {
        LinearMapping f = F.random_member(rng.next_u64());
        double best = 1e18;
        for (const auto& g : fine.members) best = std::min(best, l1_distance(f, g, X));
        CHECK(best <= 0.05 + 1e-12);
    }

    // A cover radius beyond the class diameter needs only one member.
    Cover single = build_cover(F, 10.0, X);
    CHECK(single.members.size() == 1);

    // Halving eps multiplies the size by at most 2 per matrix entry.
    Cover half = build_cover(F, 0.025, X);
    CHECK(half.members.size() <= 2 * fine.members.size());
}

TEST_CASE("cover_size_bound_check arithmetic") {
    Rng rng(83);
    Dataset X = random_dataset(rng, 6, 1, 0.0, 1.0);
    MappingClass F(1, 1, 1.0, 0.5);

    CoverSizeReport r2 = cover_size_bound_check(F, 0.1, 2, X);
    CHECK(r2.k_factorial == 2);
    CHECK(r2.h_cover_bound == 2 * r2.cover_size);

    CoverSizeReport r3 = cover_size_bound_check(F, 0.1, 3, X);
    CHECK(r3.k_factorial == 6);
    CHECK(r3.h_cover_bound == 6 * r3.cover_size);
}

TEST_CASE("scalar class shatters one point but not incompatible thresholds") {
    CoordinateClass cls{1, 1.0, false};

    // Both signs of f(1) - 0 are achievable with a in [-1, 1].
    ShatterCheck one = pdim_shatter_check(cls, {{1.0}}, {0.0});
    CHECK(one.shattered);

    // Pattern (f(1) < 1, f(2) >= 3) needs a < 1 and a >= 1.5 at once.
    ShatterCheck two = pdim_shatter_check(cls, {{1.0}, {2.0}}, {1.0, 3.0});
    CHECK_FALSE(two.shattered);
    CHECK(two.first_infeasible_pattern == 2);  // bit 0 clear, bit 1 set
}

TEST_CASE("affine class on the line shatters two generic points") {
    CoordinateClass cls{1, 1.0, true};
    ShatterCheck r = pdim_shatter_check(cls, {{0.3}, {0.8}}, {0.0, 0.0});
    CHECK(r.shattered);
}

TEST_CASE("linear functionals on the plane shatter two points, not three") {
    CoordinateClass cls{2, 1.0, false};
    ShatterCheck two = pdim_shatter_check(cls, {{1.0, 0.2}, {0.1, 0.9}}, {0.0, 0.0});
    CHECK(two.shattered);

    ShatterCheck three = pdim_shatter_check(
        cls, {{0.9, 0.1}, {0.2, 0.8}, {0.5, 0.45}}, {0.02, -0.03, 0.01});
    CHECK_FALSE(three.shattered);

    // Threshold search does not rescue an unshatterable set.
    ShatterCheck searched = pdim_shatter_check_search(cls, {{0.9, 0.1}, {0.2, 0.8}, {0.5, 0.45}});
    CHECK_FALSE(searched.shattered);
}

TEST_CASE("shattering is monotone under subsets") {
    Rng rng(89);
    for (int t = 0; t < 20; ++t) {
        CoordinateClass cls{2, 1.0, false};
        std::vector<std::vector<double>> pts = {{rng.uniform(-1, 1), rng.uniform(-1, 1)},
                                                {rng.uniform(-1, 1), rng.uniform(-1, 1)}};
        std::vector<double> thr = {rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
        if (!pdim_shatter_check(cls, pts, thr).shattered) continue;
        CHECK(pdim_shatter_check(cls, {pts[0]}, {thr[0]}).shattered);
        CHECK(pdim_shatter_check(cls, {pts[1]}, {thr[1]}).shattered);
    }
}

TEST_CASE("pdim_vector returns the product dimension") {
    CHECK(pdim_vector(MappingClass(2, 3, 1.0, 0.5)).total == 6);
    CHECK(pdim_vector(MappingClass(2, 3, 1.0, 0.5)).per_coordinate == 2);
    CHECK(pdim_vector(MappingClass(1, 1, 1.0, 0.5)).total == 1);
}
