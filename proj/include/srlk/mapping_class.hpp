#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srlk/core.hpp"

namespace srlk {

// Axis-aligned box; the declared input domain of a mapping class.
struct Box {
    std::vector<double> lo, hi;

    Box() = default;
    Box(std::vector<double> lo, std::vector<double> hi);
    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const std::vector<double>& x) const;
};

// Bounded linear mappings R^d_in -> R^d_out with entries in [-B, B],
// enumerable on an entry-wise grid of resolution grid_step. When a domain
// box is declared, every member carries a fixed affine squeeze (shared by
// the whole class) placing images strictly inside (0,1)^d_out; the squeeze
// is a positive scale plus translation, so induced k-means clusterings are
// unchanged by it.
struct MappingClass {
    int d_in = 0, d_out = 0;
    double entry_bound = 1.0;  // B
    double grid_step = 0.5;
    std::optional<Box> domain_box;

    MappingClass() = default;
    MappingClass(int d_in, int d_out, double entry_bound, double grid_step,
                 std::optional<Box> domain_box = std::nullopt);

    double post_scale() const;
    std::vector<double> post_offset() const;

    // Wraps raw entries as a class member (applies the squeeze metadata).
    LinearMapping member(std::vector<double> entries) const;
    LinearMapping random_member(uint64_t seed) const;

    unsigned long long grid_axis_count() const;  // ceil(2B / grid_step)
    unsigned long long grid_total_count() const;
    std::vector<LinearMapping> enumerate_grid(unsigned long long guard = 100000) const;
};

// True when every image f(x), x in X, lies strictly inside (0,1)^d_out.
bool images_in_unit_box(const Mapping& f, const Dataset& X);

// Mean over X of the Euclidean distance between the two images.
double l1_distance(const Mapping& f1, const Mapping& f2, const Dataset& X);

struct Cover {
    std::vector<LinearMapping> members;
    double step = 0.0;  // per-entry grid spacing actually used
    unsigned long long per_axis = 0;
    double worst_spot_distance = 0.0;
    bool verified = false;  // spot-sampled members were all within eps of the cover
};

// Entry-wise grid whose step is chosen so the l1-ball of radius eps around
// each grid member covers its cell (entry-wise Lipschitz bound); verified by
// spot-sampling random class members. Rejected (with the required size in
// the message) when the grid would exceed `guard`.
Cover build_cover(const MappingClass& F, double eps, const Dataset& X,
                  unsigned long long guard = 200000, int spot_checks = 64, uint64_t seed = 1);

struct CoverSizeReport {
    unsigned long long cover_size = 0;
    unsigned long long k_factorial = 0;
    unsigned long long h_cover_bound = 0;  // k! * cover_size
    double eps = 0.0;
    int k = 0;
};

// Constructed cover size against the k!-multiplier relation for the induced
// binary-function class. Informational.
CoverSizeReport cover_size_bound_check(const MappingClass& F, double eps, int k, const Dataset& X,
                                       unsigned long long guard = 200000);

// Real-valued restriction of a mapping class: functions x -> w . phi(x) with
// w in [-B, B]^feature_dim, phi(x) = x (linear) or (x, 1) (affine).
struct CoordinateClass {
    int d_in = 0;
    double bound = 1.0;
    bool affine = false;

    int feature_dim() const { return affine ? d_in + 1 : d_in; }
    std::vector<double> features(const std::vector<double>& x) const;
};

struct ShatterCheck {
    bool shattered = false;
    int patterns_total = 0;
    int patterns_feasible = 0;
    int first_infeasible_pattern = -1;  // bitmask; -1 when shattered
};

// Pseudo-shattering check: 1 iff every sign pattern b in {0,1}^m is realized
// by some class member, i.e. sgn(f(x_i) - r_i) = b_i for all i (sgn(z) = 1
// iff z >= 0). Positive answers are witness-based: each pattern's witness is
// constructed (interpolating linear system when m <= feature_dim, grid
// search otherwise) and its signs re-verified directly. A negative answer
// means no witness was found for the reported pattern.
ShatterCheck pdim_shatter_check(const CoordinateClass& cls, const std::vector<std::vector<double>>& pts,
                                const std::vector<double>& thresholds, int grid_per_axis = 9);

// As above but searching thresholds over a small grid per point when none
// are supplied; returns 1 if any threshold combination is shattered.
ShatterCheck pdim_shatter_check_search(const CoordinateClass& cls,
                                       const std::vector<std::vector<double>>& pts,
                                       int thresholds_per_point = 5, int grid_per_axis = 9);

struct PdimReport {
    int per_coordinate = 0;  // pseudo-dimension of each coordinate class
    int total = 0;           // d_out * per_coordinate
};

// Pseudo-dimension of the full linear class: each coordinate class is a
// d_in-dimensional vector space of functionals, so per_coordinate = d_in and
// the vector-valued value is d_out * d_in.
PdimReport pdim_vector(const MappingClass& F);

}  // namespace srlk
