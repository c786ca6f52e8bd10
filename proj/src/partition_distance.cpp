#include "srlk/partition_distance.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace srlk {

namespace {

// Contingency counts and block sizes over the common domain.
struct Tables {
    int k = 0;
    long long n = 0;                            // domain size
    std::vector<long long> size1, size2;        // per-block sizes
    std::vector<std::vector<long long>> joint;  // joint[i][j] = |C1_i cap C2_j|
};

Tables tables_init(const Clustering& c1, const Clustering& c2) {
    if (c1.k != c2.k) throw std::invalid_argument("delta: clusterings have different k");
    Tables t;
    t.k = c1.k;
    t.size1.assign(static_cast<size_t>(t.k), 0);
    t.size2.assign(static_cast<size_t>(t.k), 0);
    t.joint.assign(static_cast<size_t>(t.k), std::vector<long long>(static_cast<size_t>(t.k), 0));
    return t;
}

void tables_add(Tables& t, int a, int b) {
    ++t.size1[static_cast<size_t>(a)];
    ++t.size2[static_cast<size_t>(b)];
    ++t.joint[static_cast<size_t>(a)][static_cast<size_t>(b)];
    ++t.n;
}

Tables build_tables(const Clustering& c1, const Clustering& c2) {
    if (!c1.same_domain(c2)) throw std::invalid_argument("delta: clusterings have different domains");
    Tables t = tables_init(c1, c2);
    for (int i = 0; i < c1.size(); ++i) {
        if (!c1.in_domain(i)) continue;
        tables_add(t, c1.label(i), c2.label(i));
    }
    if (t.n == 0) throw std::invalid_argument("delta: empty domain");
    return t;
}

Tables build_tables_on(const Clustering& c1, const Clustering& c2, const std::vector<PointId>& ids) {
    Tables t = tables_init(c1, c2);
    for (PointId i : ids) {
        if (i < 0 || i >= c1.size() || i >= c2.size() || !c1.in_domain(i) || !c2.in_domain(i))
            throw std::invalid_argument("delta_on: id outside both domains");
        tables_add(t, c1.label(i), c2.label(i));
    }
    if (t.n == 0) throw std::invalid_argument("delta_on: empty id set");
    return t;
}

std::vector<std::vector<long long>> cost_matrix(const Tables& t) {
    std::vector<std::vector<long long>> cost(static_cast<size_t>(t.k),
                                             std::vector<long long>(static_cast<size_t>(t.k), 0));
    for (int i = 0; i < t.k; ++i)
        for (int j = 0; j < t.k; ++j)
            cost[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                t.size1[static_cast<size_t>(i)] + t.size2[static_cast<size_t>(j)] -
                2 * t.joint[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return cost;
}

// Hungarian algorithm with potentials, O(k^3). All arithmetic stays integral,
// so the minimum assignment cost is exact.
std::pair<long long, std::vector<int>> solve_assignment(const std::vector<std::vector<long long>>& a) {
    int n = static_cast<int>(a.size());
    const long long kInf = LLONG_MAX / 4;
    std::vector<long long> u(static_cast<size_t>(n) + 1, 0), v(static_cast<size_t>(n) + 1, 0);
    std::vector<int> p(static_cast<size_t>(n) + 1, 0), way(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long long> minv(static_cast<size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<size_t>(n) + 1, 0);
        do {
            used[static_cast<size_t>(j0)] = 1;
            int i0 = p[static_cast<size_t>(j0)], j1 = -1;
            long long d = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<size_t>(j)]) continue;
                long long cur = a[static_cast<size_t>(i0 - 1)][static_cast<size_t>(j - 1)] -
                                u[static_cast<size_t>(i0)] - v[static_cast<size_t>(j)];
                if (cur < minv[static_cast<size_t>(j)]) {
                    minv[static_cast<size_t>(j)] = cur;
                    way[static_cast<size_t>(j)] = j0;
                }
                if (minv[static_cast<size_t>(j)] < d) {
                    d = minv[static_cast<size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<size_t>(j)]) {
                    u[static_cast<size_t>(p[static_cast<size_t>(j)])] += d;
                    v[static_cast<size_t>(j)] -= d;
                } else {
                    minv[static_cast<size_t>(j)] -= d;
                }
            }
            j0 = j1;
        } while (p[static_cast<size_t>(j0)] != 0);
        do {
            int j1 = way[static_cast<size_t>(j0)];
            p[static_cast<size_t>(j0)] = p[static_cast<size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> row_to_col(static_cast<size_t>(n), -1);
    for (int j = 1; j <= n; ++j)
        if (p[static_cast<size_t>(j)] > 0) row_to_col[static_cast<size_t>(p[static_cast<size_t>(j)] - 1)] = j - 1;
    long long sum = 0;
    for (int i = 0; i < n; ++i) sum += a[static_cast<size_t>(i)][static_cast<size_t>(row_to_col[static_cast<size_t>(i)])];
    return {sum, row_to_col};
}

DeltaResult delta_from_tables(const Tables& t) {
    auto cost = cost_matrix(t);
    auto [sum, sigma] = solve_assignment(cost);

    DeltaResult res;
    res.match.sigma = sigma;
    res.match.per_block.resize(static_cast<size_t>(t.k));
    for (int i = 0; i < t.k; ++i)
        res.match.per_block[static_cast<size_t>(i)] =
            cost[static_cast<size_t>(i)][static_cast<size_t>(sigma[static_cast<size_t>(i)])];
    res.match.mismatch_total = sum;
    res.match.domain_size = t.n;
    res.value = res.match.value();
    return res;
}

}  // namespace

DeltaResult delta(const Clustering& c1, const Clustering& c2) {
    return delta_from_tables(build_tables(c1, c2));
}

double delta_value(const Clustering& c1, const Clustering& c2) { return delta(c1, c2).value; }

DeltaResult delta_on(const Clustering& c1, const Clustering& c2, const std::vector<PointId>& ids) {
    return delta_from_tables(build_tables_on(c1, c2, ids));
}

double delta_sample(const Clustering& c1, const Clustering& c2, const std::vector<PointId>& sample) {
    if (sample.empty()) throw std::invalid_argument("delta_sample: empty sample");
    return delta_on(c1, c2, sample).value;
}

long long delta_bruteforce_numerator(const Clustering& c1, const Clustering& c2) {
    Tables t = build_tables(c1, c2);
    if (t.k > 8) throw std::invalid_argument("delta_bruteforce: k too large (max 8)");
    auto cost = cost_matrix(t);
    std::vector<int> perm(static_cast<size_t>(t.k));
    std::iota(perm.begin(), perm.end(), 0);
    long long best = LLONG_MAX;
    do {
        long long s = 0;
        for (int i = 0; i < t.k; ++i) s += cost[static_cast<size_t>(i)][static_cast<size_t>(perm[static_cast<size_t>(i)])];
        best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double delta_bruteforce(const Clustering& c1, const Clustering& c2) {
    Tables t = build_tables(c1, c2);
    return static_cast<double>(delta_bruteforce_numerator(c1, c2)) / static_cast<double>(t.n);
}

int h_value(const Clustering& c1, const Clustering& c2, const std::vector<int>& sigma, PointId x) {
    if (x < 0 || x >= c1.size() || !c1.in_domain(x) || x >= c2.size() || !c2.in_domain(x))
        throw std::invalid_argument("h_value: point outside domain");
    if (static_cast<int>(sigma.size()) != c1.k)
        throw std::invalid_argument("h_value: sigma size mismatch");
    int i = c1.label(x), j = c2.label(x);
    return sigma[static_cast<size_t>(i)] == j ? 0 : 2;
}

long long h_mass(const Clustering& c1, const Clustering& c2, const std::vector<int>& sigma,
                 const std::vector<PointId>& sample) {
    long long s = 0;
    for (PointId x : sample) s += h_value(c1, c2, sigma, x);
    return s;
}

double h_mean(const Clustering& c1, const Clustering& c2, const std::vector<int>& sigma,
              const std::vector<PointId>& sample) {
    if (sample.empty()) throw std::invalid_argument("h_mean: empty sample");
    return static_cast<double>(h_mass(c1, c2, sigma, sample)) / static_cast<double>(sample.size());
}

}  // namespace srlk
