#include "srlk/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace srlk {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

Dataset::Dataset(int dim_, std::vector<std::vector<double>> pts) : dim(dim_), points(std::move(pts)) {
    require(dim >= 1, "Dataset: dimension must be positive");
    require(!points.empty(), "Dataset: needs at least one point");
    for (const auto& p : points) {
        require(static_cast<int>(p.size()) == dim, "Dataset: inconsistent point dimension");
        require(all_finite(p), "Dataset: non-finite coordinate");
    }
}

Clustering::Clustering(int k_, std::vector<int> labels_) : k(k_), labels(std::move(labels_)) {
    require(k >= 1, "Clustering: k must be positive");
    for (int l : labels)
        require(l == kExcluded || (l >= 0 && l < k), "Clustering: label out of range");
}

Clustering Clustering::from_blocks(int k, int n_total, const std::vector<std::vector<PointId>>& blocks) {
    require(k >= 1, "Clustering: k must be positive");
    require(static_cast<int>(blocks.size()) == k, "Clustering: block count != k");
    std::vector<int> labels(static_cast<size_t>(n_total), kExcluded);
    for (int b = 0; b < k; ++b) {
        for (PointId id : blocks[static_cast<size_t>(b)]) {
            require(id >= 0 && id < n_total, "Clustering: id out of range");
            require(labels[static_cast<size_t>(id)] == kExcluded, "Clustering: blocks not disjoint");
            labels[static_cast<size_t>(id)] = b;
        }
    }
    return Clustering(k, std::move(labels));
}

int Clustering::domain_size() const {
    int n = 0;
    for (int l : labels)
        if (l != kExcluded) ++n;
    return n;
}

std::vector<PointId> Clustering::domain() const {
    std::vector<PointId> ids;
    for (int i = 0; i < size(); ++i)
        if (labels[static_cast<size_t>(i)] != kExcluded) ids.push_back(i);
    return ids;
}

std::vector<std::vector<PointId>> Clustering::blocks() const {
    std::vector<std::vector<PointId>> out(static_cast<size_t>(k));
    for (int i = 0; i < size(); ++i) {
        int l = labels[static_cast<size_t>(i)];
        if (l != kExcluded) out[static_cast<size_t>(l)].push_back(i);
    }
    return out;
}

bool Clustering::same_domain(const Clustering& other) const {
    if (size() != other.size()) return false;
    for (int i = 0; i < size(); ++i)
        if (in_domain(i) != other.in_domain(i)) return false;
    return true;
}

CenterSet::CenterSet(std::vector<std::vector<double>> c) : centers(std::move(c)) {
    require(!centers.empty(), "CenterSet: needs at least one center");
    size_t d = centers[0].size();
    for (const auto& mu : centers) {
        require(mu.size() == d, "CenterSet: inconsistent center dimension");
        require(all_finite(mu), "CenterSet: non-finite coordinate");
    }
}

LinearMapping::LinearMapping(int d_out, int d_in, std::vector<double> entries_, double bound_)
    : rows(d_out), cols(d_in), entries(std::move(entries_)), bound(bound_) {
    require(rows >= 1 && cols >= 1, "LinearMapping: dimensions must be positive");
    require(bound > 0.0, "LinearMapping: bound must be positive");
    require(entries.size() == static_cast<size_t>(rows) * static_cast<size_t>(cols),
            "LinearMapping: entry count mismatch");
    for (double e : entries) {
        require(std::isfinite(e), "LinearMapping: non-finite entry");
        require(std::abs(e) <= bound, "LinearMapping: entry exceeds bound");
    }
}

LinearMapping LinearMapping::identity(int d, double bound) {
    std::vector<double> e(static_cast<size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) e[static_cast<size_t>(i) * d + i] = 1.0;
    return LinearMapping(d, d, std::move(e), std::max(bound, 1.0));
}

LinearMapping LinearMapping::scalar(int d, double c) {
    std::vector<double> e(static_cast<size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) e[static_cast<size_t>(i) * d + i] = c;
    return LinearMapping(d, d, std::move(e), std::max(std::abs(c), 1.0));
}

std::vector<double> LinearMapping::apply(PointId, const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != cols)
        throw std::invalid_argument("LinearMapping: input dimension mismatch");
    std::vector<double> y(static_cast<size_t>(rows), 0.0);
    for (int r = 0; r < rows; ++r) {
        double acc = 0.0;
        const double* row = entries.data() + static_cast<size_t>(r) * cols;
        for (int c = 0; c < cols; ++c) acc += row[c] * x[static_cast<size_t>(c)];
        acc *= post_scale;
        if (!post_offset.empty()) acc += post_offset[static_cast<size_t>(r)];
        y[static_cast<size_t>(r)] = acc;
    }
    return y;
}

TableMapping::TableMapping(std::vector<std::vector<double>> images_) : images(std::move(images_)) {
    require(!images.empty(), "TableMapping: empty table");
    size_t d = images[0].size();
    for (const auto& v : images) {
        require(v.size() == d, "TableMapping: inconsistent image dimension");
        require(all_finite(v), "TableMapping: non-finite image");
    }
}

std::vector<double> TableMapping::apply(PointId id, const std::vector<double>&) const {
    if (id < 0 || static_cast<size_t>(id) >= images.size())
        throw std::invalid_argument("TableMapping: point id out of range");
    return images[static_cast<size_t>(id)];
}

Dataset apply_mapping(const Mapping& f, const Dataset& X) {
    if (f.d_in() >= 0 && f.d_in() != X.dim)
        throw std::invalid_argument("apply_mapping: dimension mismatch");
    std::vector<std::vector<double>> out;
    out.reserve(X.points.size());
    for (int i = 0; i < X.size(); ++i) out.push_back(f.apply(i, X[i]));
    return Dataset(f.d_out(), std::move(out));
}

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

Clustering voronoi_partition(const Mapping& f, const CenterSet& centers, const Dataset& X) {
    Dataset image = apply_mapping(f, X);
    if (image.dim != centers.dim())
        throw std::invalid_argument("voronoi_partition: center dimension mismatch");
    std::vector<int> labels(static_cast<size_t>(X.size()), 0);
    for (int i = 0; i < X.size(); ++i) {
        double best = squared_distance(image[i], centers[0]);
        int arg = 0;
        for (int j = 1; j < centers.k(); ++j) {
            double d = squared_distance(image[i], centers[j]);
            if (d < best) {
                best = d;
                arg = j;
            }
        }
        labels[static_cast<size_t>(i)] = arg;
    }
    return Clustering(centers.k(), std::move(labels));
}

Clustering restrict_to(const Clustering& c, const std::vector<PointId>& sample) {
    std::vector<int> labels(c.labels.size(), Clustering::kExcluded);
    for (PointId id : sample) {
        if (id < 0 || id >= c.size() || !c.in_domain(id))
            throw std::invalid_argument("restrict_to: id outside clustering domain");
        labels[static_cast<size_t>(id)] = c.label(id);
    }
    return Clustering(c.k, std::move(labels));
}

TableMapping collapse_mapping(const Clustering& c, int d_out) {
    if (d_out < 1) throw std::invalid_argument("collapse_mapping: d_out must be positive");
    if (c.domain_size() != c.size())
        throw std::invalid_argument("collapse_mapping: clustering must cover the full domain");

    // One distinct vertex in (0,1)^d_out per block.
    std::vector<std::vector<double>> vertices(static_cast<size_t>(c.k));
    for (int b = 0; b < c.k; ++b) {
        std::vector<double> v(static_cast<size_t>(d_out));
        if (c.k <= d_out) {
            for (int j = 0; j < d_out; ++j) v[static_cast<size_t>(j)] = 0.25 + (j == b ? 0.5 : 0.0);
        } else {
            double t = static_cast<double>(b + 1) / static_cast<double>(c.k + 1);
            for (int j = 0; j < d_out; ++j) v[static_cast<size_t>(j)] = t;
        }
        vertices[static_cast<size_t>(b)] = std::move(v);
    }

    std::vector<std::vector<double>> images(c.labels.size());
    for (int i = 0; i < c.size(); ++i)
        images[static_cast<size_t>(i)] = vertices[static_cast<size_t>(c.label(i))];
    return TableMapping(std::move(images));
}

}  // namespace srlk
