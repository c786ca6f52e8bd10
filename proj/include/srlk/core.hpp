#pragma once

#include <memory>
#include <vector>

namespace srlk {

using PointId = int;

// Finite point set in R^dim. Points carry implicit ids 0..n-1 by position, so
// duplicate coordinates are distinct points.
struct Dataset {
    int dim = 0;
    std::vector<std::vector<double>> points;

    Dataset() = default;
    Dataset(int dim, std::vector<std::vector<double>> pts);

    int size() const { return static_cast<int>(points.size()); }
    const std::vector<double>& operator[](PointId i) const { return points[static_cast<size_t>(i)]; }
};

// k-block partition of a subset of point ids. labels[i] is the block of point
// i, or kExcluded for ids outside the clustering's domain (used by
// restrictions to a sample). Empty blocks are legal.
struct Clustering {
    static constexpr int kExcluded = -1;

    int k = 0;
    std::vector<int> labels;

    Clustering() = default;
    Clustering(int k, std::vector<int> labels);

    static Clustering from_blocks(int k, int n_total,
                                  const std::vector<std::vector<PointId>>& blocks);

    int size() const { return static_cast<int>(labels.size()); }
    bool in_domain(PointId i) const { return labels[static_cast<size_t>(i)] != kExcluded; }
    int label(PointId i) const { return labels[static_cast<size_t>(i)]; }
    int domain_size() const;
    std::vector<PointId> domain() const;
    std::vector<std::vector<PointId>> blocks() const;
    bool same_domain(const Clustering& other) const;

    bool operator==(const Clustering& other) const = default;
};

struct CenterSet {
    std::vector<std::vector<double>> centers;

    CenterSet() = default;
    explicit CenterSet(std::vector<std::vector<double>> c);

    int k() const { return static_cast<int>(centers.size()); }
    int dim() const { return centers.empty() ? 0 : static_cast<int>(centers[0].size()); }
    const std::vector<double>& operator[](int i) const { return centers[static_cast<size_t>(i)]; }
};

// A mapping from domain points into R^d_out. Linear mappings form the
// learnable classes; table mappings (per-id lookup) exist as test fixtures.
class Mapping {
  public:
    virtual ~Mapping() = default;
    // Expected input dimension; -1 means id-based (accepts any coordinates).
    virtual int d_in() const = 0;
    virtual int d_out() const = 0;
    virtual std::vector<double> apply(PointId id, const std::vector<double>& x) const = 0;
};

// f(x) = post_scale * (A x) + post_offset with A a rows x cols matrix whose
// entries are bounded by `bound` in absolute value. post_scale/post_offset
// default to the identity; a MappingClass with a declared domain box sets
// them so that images land in (0,1)^rows (see mapping_class.hpp).
class LinearMapping final : public Mapping {
  public:
    int rows = 0, cols = 0;
    std::vector<double> entries;  // row-major
    double bound = 0.0;
    double post_scale = 1.0;
    std::vector<double> post_offset;  // size rows; empty means zeros

    LinearMapping() = default;
    LinearMapping(int d_out, int d_in, std::vector<double> entries, double bound);

    static LinearMapping identity(int d, double bound = 1.0);
    static LinearMapping scalar(int d, double c);

    double entry(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
    double& entry(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }

    int d_in() const override { return cols; }
    int d_out() const override { return rows; }
    std::vector<double> apply(PointId id, const std::vector<double>& x) const override;
};

// Per-point-id lookup table; not a member of any linear class.
class TableMapping final : public Mapping {
  public:
    std::vector<std::vector<double>> images;  // indexed by point id

    TableMapping() = default;
    explicit TableMapping(std::vector<std::vector<double>> images);

    int d_in() const override { return -1; }
    int d_out() const override { return images.empty() ? 0 : static_cast<int>(images[0].size()); }
    std::vector<double> apply(PointId id, const std::vector<double>& x) const override;
};

// Materializes f(x) for every x in X, preserving id order.
Dataset apply_mapping(const Mapping& f, const Dataset& X);

// Partition of X induced by the Voronoi cells of `centers` in image space.
// Ties break to the lowest center index, making the result a function.
Clustering voronoi_partition(const Mapping& f, const CenterSet& centers, const Dataset& X);

// {C_1 cap S, ..., C_k cap S} over S, preserving block indices. S must be a
// subset of the clustering's domain. S may be empty.
Clustering restrict_to(const Clustering& c, const std::vector<PointId>& sample);

// Mapping g with g(x) determined only by x's block, images pairwise distinct
// points in (0,1)^d_out, so that exact k-means on g(X) recovers c with cost 0
// whenever all blocks are nonempty. Uses scaled standard basis vectors when
// k <= d_out, a diagonal layout otherwise.
TableMapping collapse_mapping(const Clustering& c, int d_out);

double squared_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace srlk
