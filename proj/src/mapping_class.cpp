#include "srlk/mapping_class.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "srlk/rng.hpp"

namespace srlk {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double max_l1_norm(const Dataset& X) {
    double best = 0.0;
    for (const auto& p : X.points) {
        double s = 0.0;
        for (double v : p) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

// Gaussian elimination with partial pivoting; nullopt when near-singular.
std::optional<std::vector<double>> solve_linear(std::vector<std::vector<double>> a,
                                                std::vector<double> b) {
    int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[static_cast<size_t>(r)][static_cast<size_t>(col)]) >
                std::abs(a[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
                piv = r;
        if (std::abs(a[static_cast<size_t>(piv)][static_cast<size_t>(col)]) < 1e-12) return std::nullopt;
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
        std::swap(b[static_cast<size_t>(piv)], b[static_cast<size_t>(col)]);
        for (int r = col + 1; r < n; ++r) {
            double m = a[static_cast<size_t>(r)][static_cast<size_t>(col)] / a[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int c = col; c < n; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] -= m * a[static_cast<size_t>(col)][static_cast<size_t>(c)];
            b[static_cast<size_t>(r)] -= m * b[static_cast<size_t>(col)];
        }
    }
    std::vector<double> x(static_cast<size_t>(n), 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[static_cast<size_t>(r)];
        for (int c = r + 1; c < n; ++c) s -= a[static_cast<size_t>(r)][static_cast<size_t>(c)] * x[static_cast<size_t>(c)];
        x[static_cast<size_t>(r)] = s / a[static_cast<size_t>(r)][static_cast<size_t>(r)];
    }
    return x;
}

}  // namespace

Box::Box(std::vector<double> lo_, std::vector<double> hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    require(!lo.empty() && lo.size() == hi.size(), "Box: inconsistent bounds");
    for (size_t i = 0; i < lo.size(); ++i) {
        require(std::isfinite(lo[i]) && std::isfinite(hi[i]), "Box: non-finite bound");
        require(lo[i] <= hi[i], "Box: lo > hi");
    }
}

bool Box::contains(const std::vector<double>& x) const {
    if (x.size() != lo.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
}

MappingClass::MappingClass(int d_in_, int d_out_, double entry_bound_, double grid_step_,
                           std::optional<Box> domain_box_)
    : d_in(d_in_), d_out(d_out_), entry_bound(entry_bound_), grid_step(grid_step_),
      domain_box(std::move(domain_box_)) {
    require(d_in >= 1 && d_out >= 1, "MappingClass: dimensions must be positive");
    require(entry_bound > 0.0, "MappingClass: entry bound must be positive");
    require(grid_step > 0.0, "MappingClass: grid step must be positive");
    if (domain_box) require(domain_box->dim() == d_in, "MappingClass: box dimension mismatch");
}

double MappingClass::post_scale() const {
    if (!domain_box) return 1.0;
    double l1 = 0.0;
    for (int j = 0; j < d_in; ++j)
        l1 += std::max(std::abs(domain_box->lo[static_cast<size_t>(j)]),
                       std::abs(domain_box->hi[static_cast<size_t>(j)]));
    double reach = entry_bound * l1;  // |(Ax)_r| <= B * ||x||_1 over the box
    if (reach <= 0.0) return 1.0;
    return 0.49 / reach;
}

std::vector<double> MappingClass::post_offset() const {
    if (!domain_box) return {};
    return std::vector<double>(static_cast<size_t>(d_out), 0.5);
}

LinearMapping MappingClass::member(std::vector<double> entries) const {
    LinearMapping f(d_out, d_in, std::move(entries), entry_bound);
    f.post_scale = post_scale();
    f.post_offset = post_offset();
    return f;
}

LinearMapping MappingClass::random_member(uint64_t seed) const {
    Rng rng(seed);
    std::vector<double> e(static_cast<size_t>(d_in) * static_cast<size_t>(d_out));
    for (double& v : e) v = rng.uniform(-entry_bound, entry_bound);
    return member(std::move(e));
}

unsigned long long MappingClass::grid_axis_count() const {
    return static_cast<unsigned long long>(std::ceil(2.0 * entry_bound / grid_step));
}

unsigned long long MappingClass::grid_total_count() const {
    unsigned long long per_axis = std::max<unsigned long long>(grid_axis_count(), 1);
    unsigned long long total = 1;
    for (int i = 0; i < d_in * d_out; ++i) {
        if (total > (1ULL << 62) / per_axis) return 1ULL << 62;
        total *= per_axis;
    }
    return total;
}

std::vector<LinearMapping> MappingClass::enumerate_grid(unsigned long long guard) const {
    unsigned long long total = grid_total_count();
    if (total > guard)
        throw std::invalid_argument("MappingClass: grid of " + std::to_string(total) +
                                    " members exceeds guard " + std::to_string(guard));
    unsigned long long per_axis = std::max<unsigned long long>(grid_axis_count(), 1);
    double h = 2.0 * entry_bound / static_cast<double>(per_axis);
    int dims = d_in * d_out;

    std::vector<LinearMapping> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<unsigned long long> idx(static_cast<size_t>(dims), 0);
    while (true) {
        std::vector<double> e(static_cast<size_t>(dims));
        for (int j = 0; j < dims; ++j)
            e[static_cast<size_t>(j)] =
                -entry_bound + (static_cast<double>(idx[static_cast<size_t>(j)]) + 0.5) * h;
        out.push_back(member(std::move(e)));
        int j = dims - 1;
        while (j >= 0 && idx[static_cast<size_t>(j)] + 1 == per_axis) {
            idx[static_cast<size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++idx[static_cast<size_t>(j)];
    }
    return out;
}

bool images_in_unit_box(const Mapping& f, const Dataset& X) {
    for (int i = 0; i < X.size(); ++i) {
        for (double v : f.apply(i, X[i]))
            if (!(v > 0.0 && v < 1.0)) return false;
    }
    return true;
}

double l1_distance(const Mapping& f1, const Mapping& f2, const Dataset& X) {
    if (f1.d_out() != f2.d_out()) throw std::invalid_argument("l1_distance: output dimension mismatch");
    double total = 0.0;
    for (int i = 0; i < X.size(); ++i) {
        std::vector<double> a = f1.apply(i, X[i]);
        std::vector<double> b = f2.apply(i, X[i]);
        total += std::sqrt(squared_distance(a, b));
    }
    return total / static_cast<double>(X.size());
}

Cover build_cover(const MappingClass& F, double eps, const Dataset& X, unsigned long long guard,
                  int spot_checks, uint64_t seed) {
    require(eps > 0.0, "build_cover: eps must be positive");
    require(X.dim == F.d_in, "build_cover: dataset dimension mismatch");

    // Entry-wise Lipschitz bound: per-entry offsets of at most delta move any
    // image by at most scale * sqrt(d_out) * delta * ||x||_1.
    double lip = F.post_scale() * std::sqrt(static_cast<double>(F.d_out)) * max_l1_norm(X);
    unsigned long long per_axis = 1;
    if (lip > 0.0) {
        double delta = eps / lip;  // admissible half-width of a grid cell
        per_axis = static_cast<unsigned long long>(std::ceil(2.0 * F.entry_bound / (2.0 * delta)));
        per_axis = std::max<unsigned long long>(per_axis, 1);
    }

    MappingClass grid = F;
    grid.grid_step = 2.0 * F.entry_bound / static_cast<double>(per_axis);

    Cover cover;
    cover.per_axis = per_axis;
    cover.step = grid.grid_step;
    cover.members = grid.enumerate_grid(guard);

    // Spot verification: random members must be within eps of their nearest
    // grid member (nearest found by rounding each entry).
    cover.verified = true;
    for (int s = 0; s < spot_checks; ++s) {
        LinearMapping f = F.random_member(mix_seed(seed, static_cast<uint64_t>(s)));
        std::vector<double> rounded(f.entries.size());
        double h = grid.grid_step;
        for (size_t j = 0; j < f.entries.size(); ++j) {
            double t = std::floor((f.entries[j] + F.entry_bound) / h);
            t = std::clamp(t, 0.0, static_cast<double>(per_axis - 1));
            rounded[j] = -F.entry_bound + (t + 0.5) * h;
        }
        double d = l1_distance(f, F.member(std::move(rounded)), X);
        cover.worst_spot_distance = std::max(cover.worst_spot_distance, d);
        if (d > eps + 1e-12) cover.verified = false;
    }
    return cover;
}

CoverSizeReport cover_size_bound_check(const MappingClass& F, double eps, int k, const Dataset& X,
                                       unsigned long long guard) {
    require(k >= 1, "cover_size_bound_check: k must be positive");
    Cover cover = build_cover(F, eps, X, guard);
    CoverSizeReport rep;
    rep.cover_size = cover.members.size();
    rep.k_factorial = 1;
    for (int i = 2; i <= k; ++i) rep.k_factorial *= static_cast<unsigned long long>(i);
    rep.h_cover_bound = rep.k_factorial * rep.cover_size;
    rep.eps = eps;
    rep.k = k;
    return rep;
}

std::vector<double> CoordinateClass::features(const std::vector<double>& x) const {
    std::vector<double> phi = x;
    if (affine) phi.push_back(1.0);
    return phi;
}

namespace {

bool sign_bit(double z) { return z >= 0.0; }

bool pattern_realized(const std::vector<double>& w, const std::vector<std::vector<double>>& feats,
                      const std::vector<double>& thresholds, unsigned pattern) {
    for (size_t i = 0; i < feats.size(); ++i) {
        double v = 0.0;
        for (size_t j = 0; j < w.size(); ++j) v += w[j] * feats[i][j];
        if (sign_bit(v - thresholds[i]) != (((pattern >> i) & 1u) != 0)) return false;
    }
    return true;
}

// Minimum-norm interpolating witness: w = Phi^T alpha with (Phi Phi^T) alpha
// = r + t * s; valid only when returned entries respect the bound and the
// realized signs check out.
std::optional<std::vector<double>> interpolating_witness(
    const std::vector<std::vector<double>>& feats, const std::vector<double>& thresholds,
    unsigned pattern, double bound) {
    size_t m = feats.size();
    size_t dim = feats[0].size();
    if (m > dim) return std::nullopt;

    std::vector<std::vector<double>> gram(m, std::vector<double>(m, 0.0));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            for (size_t j = 0; j < dim; ++j) gram[a][b] += feats[a][j] * feats[b][j];

    double scale = 1.0;
    for (double r : thresholds) scale = std::max(scale, std::abs(r));
    for (double t : {1.0, 0.25, 1e-2, 1e-4}) {
        std::vector<double> rhs(m);
        for (size_t i = 0; i < m; ++i)
            rhs[i] = thresholds[i] + t * scale * ((((pattern >> i) & 1u) != 0) ? 1.0 : -1.0);
        auto alpha = solve_linear(gram, rhs);
        if (!alpha) return std::nullopt;  // dependent features; retrying t will not help
        std::vector<double> w(dim, 0.0);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < dim; ++j) w[j] += (*alpha)[i] * feats[i][j];
        bool in_box = true;
        for (double v : w)
            if (std::abs(v) > bound) in_box = false;
        if (in_box && pattern_realized(w, feats, thresholds, pattern)) return w;
    }
    return std::nullopt;
}

}  // namespace

ShatterCheck pdim_shatter_check(const CoordinateClass& cls, const std::vector<std::vector<double>>& pts,
                                const std::vector<double>& thresholds, int grid_per_axis) {
    require(!pts.empty() && pts.size() <= 20, "pdim_shatter_check: need 1..20 points");
    require(pts.size() == thresholds.size(), "pdim_shatter_check: threshold count mismatch");
    int m = static_cast<int>(pts.size());
    std::vector<std::vector<double>> feats;
    feats.reserve(pts.size());
    for (const auto& p : pts) {
        require(static_cast<int>(p.size()) == cls.d_in, "pdim_shatter_check: point dimension mismatch");
        feats.push_back(cls.features(p));
    }

    int dim = cls.feature_dim();

    // Per-axis sweep values: cell centers plus both bound endpoints, since
    // extreme weights realize many sign patterns exactly at the boundary.
    std::vector<double> axis_values;
    axis_values.push_back(-cls.bound);
    double h = 2.0 * cls.bound / static_cast<double>(grid_per_axis);
    for (int t = 0; t < grid_per_axis; ++t) axis_values.push_back(-cls.bound + (t + 0.5) * h);
    axis_values.push_back(cls.bound);
    size_t per_axis = axis_values.size();

    double total_grid = std::pow(static_cast<double>(per_axis), dim);
    if (total_grid > 2e6)
        throw std::invalid_argument("pdim_shatter_check: class enumeration too large");

    unsigned patterns = 1u << m;
    std::vector<char> feasible(patterns, 0);

    // One pass over the weight grid marks every pattern it realizes.
    std::vector<size_t> idx(static_cast<size_t>(dim), 0);
    std::vector<double> w(static_cast<size_t>(dim), 0.0);
    while (true) {
        for (int j = 0; j < dim; ++j) w[static_cast<size_t>(j)] = axis_values[idx[static_cast<size_t>(j)]];
        unsigned pat = 0;
        for (int i = 0; i < m; ++i) {
            double v = 0.0;
            for (int j = 0; j < dim; ++j) v += w[static_cast<size_t>(j)] * feats[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (sign_bit(v - thresholds[static_cast<size_t>(i)])) pat |= 1u << i;
        }
        feasible[pat] = 1;
        int j = dim - 1;
        while (j >= 0 && idx[static_cast<size_t>(j)] + 1 == per_axis) {
            idx[static_cast<size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++idx[static_cast<size_t>(j)];
    }

    ShatterCheck res;
    res.patterns_total = static_cast<int>(patterns);
    for (unsigned pat = 0; pat < patterns; ++pat) {
        if (!feasible[pat] && interpolating_witness(feats, thresholds, pat, cls.bound)) feasible[pat] = 1;
        if (feasible[pat]) {
            ++res.patterns_feasible;
        } else if (res.first_infeasible_pattern < 0) {
            res.first_infeasible_pattern = static_cast<int>(pat);
        }
    }
    res.shattered = res.patterns_feasible == res.patterns_total;
    if (res.shattered) res.first_infeasible_pattern = -1;
    return res;
}

ShatterCheck pdim_shatter_check_search(const CoordinateClass& cls,
                                       const std::vector<std::vector<double>>& pts,
                                       int thresholds_per_point, int grid_per_axis) {
    require(thresholds_per_point >= 1, "pdim_shatter_check_search: need thresholds");
    size_t m = pts.size();
    require(m >= 1 && m <= 6, "pdim_shatter_check_search: threshold search limited to 6 points");

    // Candidate thresholds per point span the achievable value range.
    std::vector<std::vector<double>> grids(m);
    for (size_t i = 0; i < m; ++i) {
        auto phi = cls.features(pts[i]);
        double reach = 0.0;
        for (double v : phi) reach += std::abs(v);
        reach *= cls.bound;
        for (int t = 0; t < thresholds_per_point; ++t) {
            double frac = (static_cast<double>(t) + 0.5) / static_cast<double>(thresholds_per_point);
            grids[i].push_back(-0.9 * reach + 1.8 * reach * frac);
        }
    }

    std::vector<int> pick(m, 0);
    ShatterCheck last;
    while (true) {
        std::vector<double> thresholds(m);
        for (size_t i = 0; i < m; ++i) thresholds[i] = grids[i][static_cast<size_t>(pick[i])];
        last = pdim_shatter_check(cls, pts, thresholds, grid_per_axis);
        if (last.shattered) return last;
        size_t j = m;
        while (j > 0 && pick[j - 1] + 1 == thresholds_per_point) {
            pick[j - 1] = 0;
            --j;
        }
        if (j == 0) break;
        ++pick[j - 1];
    }
    return last;
}

PdimReport pdim_vector(const MappingClass& F) {
    return PdimReport{F.d_in, F.d_out * F.d_in};
}

}  // namespace srlk
