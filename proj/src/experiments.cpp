#include "srlk/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "srlk/io.hpp"
#include "srlk/partition_distance.hpp"
#include "srlk/rng.hpp"

namespace srlk {

namespace {

using nlohmann::json;

constexpr uint64_t kSeedData = 0xDA7AULL;
constexpr uint64_t kSeedSolve = 0x501EULL;
constexpr uint64_t kSeedCStar = 0xC57AULL;
constexpr uint64_t kSeedTrial = 0x791AULL;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double quantile(std::vector<double> v, double p) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    double idx = p * static_cast<double>(v.size() - 1);
    size_t lo = static_cast<size_t>(std::floor(idx));
    size_t hi = std::min(lo + 1, v.size() - 1);
    double frac = idx - static_cast<double>(lo);
    return v[lo] * (1.0 - frac) + v[hi] * frac;
}

// Least-squares slope of log(median) vs log(m); skips zero medians.
std::pair<double, bool> loglog_slope(const std::vector<SummaryRow>& rows,
                                     double (*pick)(const SummaryRow&)) {
    std::vector<double> xs, ys;
    for (const auto& row : rows) {
        double y = pick(row);
        if (y > 0.0 && row.m > 0) {
            xs.push_back(std::log(static_cast<double>(row.m)));
            ys.push_back(std::log(y));
        }
    }
    if (xs.size() < 2) return {0.0, false};
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den <= 0.0) return {0.0, false};
    return {num / den, true};
}

// One-sided exact binomial tail P(X >= c) for X ~ Binom(n, p).
double binomial_upper_tail(int n, int c, double p) {
    if (c <= 0) return 1.0;
    if (c > n) return 0.0;
    double tail = 0.0;
    for (int i = c; i <= n; ++i) {
        double log_term = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) +
                          i * std::log(p) + (n - i) * std::log1p(-p);
        tail += std::exp(log_term);
    }
    return std::min(tail, 1.0);
}

std::vector<double> parse_number_array(const json& j, const std::string& what) {
    require(j.is_array() && !j.empty(), what + " must be a nonempty array");
    std::vector<double> out;
    for (const auto& v : j) {
        require(v.is_number(), what + " must contain numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

GeneratorSpec parse_generator(const json& j) {
    require(j.contains("components"), "generator needs components");
    GeneratorSpec spec;
    for (const auto& cj : j.at("components")) {
        ComponentSpec c;
        c.mean = parse_number_array(cj.at("mean"), "component mean");
        if (cj.contains("stddev") && cj.at("stddev").is_number()) {
            c.stddev.assign(c.mean.size(), cj.at("stddev").get<double>());
        } else {
            c.stddev = parse_number_array(cj.at("stddev"), "component stddev");
        }
        require(c.stddev.size() == c.mean.size(), "component stddev dimension mismatch");
        for (double s : c.stddev) require(s > 0.0, "degenerate component covariance");
        c.size = cj.at("size").get<int>();
        require(c.size >= 1, "component size must be >= 1");
        spec.components.push_back(std::move(c));
    }
    require(!spec.components.empty(), "generator needs at least one component");
    size_t d = spec.components[0].mean.size();
    for (const auto& c : spec.components)
        require(c.mean.size() == d, "components have inconsistent dimensions");
    return spec;
}

MappingClass parse_class(const json& j) {
    int d_in = j.at("d_in").get<int>();
    int d_out = j.at("d_out").get<int>();
    double bound = j.at("bound").get<double>();
    double step = j.at("grid_step").get<double>();
    std::optional<Box> box;
    if (j.contains("domain_box")) {
        box = Box(parse_number_array(j.at("domain_box").at("lo"), "box lo"),
                  parse_number_array(j.at("domain_box").at("hi"), "box hi"));
    }
    return MappingClass(d_in, d_out, bound, step, std::move(box));
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }

    ExperimentConfig cfg;
    try {
        if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();
        if (j.contains("k")) cfg.k = j.at("k").get<int>();
        require(cfg.k >= 1, "config: k must be positive");
        if (j.contains("generator")) cfg.generator = parse_generator(j.at("generator"));
        if (j.contains("dataset_path")) cfg.dataset_path = j.at("dataset_path").get<std::string>();
        if (j.contains("class")) cfg.mapping_class = parse_class(j.at("class"));
        if (j.contains("cover_guard")) cfg.cover_guard = j.at("cover_guard").get<unsigned long long>();
        require(cfg.cover_guard >= 1 && cfg.cover_guard <= 10'000'000,
                "config: cover_guard must be in [1, 1e7]");
        if (j.contains("sample_sizes")) {
            for (const auto& v : j.at("sample_sizes")) {
                int m = v.get<int>();
                require(m >= 1, "config: sample sizes must be >= 1");
                cfg.sample_sizes.push_back(m);
            }
        }
        if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
        require(cfg.trials >= 1, "config: trials must be >= 1");
        if (j.contains("eta")) cfg.eta = j.at("eta").get<double>();
        if (j.contains("eps")) cfg.eps = j.at("eps").get<double>();
        if (j.contains("delta")) cfg.delta = j.at("delta").get<double>();
        require(cfg.eta > 0.0 && cfg.eps > 0.0 && cfg.delta > 0.0, "config: eta/eps/delta must be positive");
        if (j.contains("instances")) cfg.instances = j.at("instances").get<int>();
        require(cfg.instances >= 1, "config: instances must be >= 1");
        if (j.contains("output_path")) cfg.output_path = j.at("output_path").get<std::string>();
        if (j.contains("solver")) {
            const auto& s = j.at("solver");
            if (s.contains("restarts")) cfg.solver.restarts = s.at("restarts").get<int>();
            if (s.contains("prefer_exact")) cfg.solver.prefer_exact = s.at("prefer_exact").get<bool>();
            if (s.contains("exact_guard"))
                cfg.solver.exact_guard = s.at("exact_guard").get<unsigned long long>();
            if (s.contains("max_iterations")) cfg.solver.max_iterations = s.at("max_iterations").get<int>();
            if (s.contains("tolerance")) cfg.solver.tolerance = s.at("tolerance").get<double>();
            require(cfg.solver.restarts >= 1, "config: solver restarts must be >= 1");
            require(cfg.solver.exact_guard <= 1'000'000'000ULL,
                    "config: exact_guard must be at most 1e9");
            require(cfg.solver.max_iterations >= 1, "config: max_iterations must be >= 1");
        }
        if (j.contains("cstar")) {
            const auto& c = j.at("cstar");
            std::string mode = c.at("mode").get<std::string>();
            if (mode == "components") {
                cfg.cstar.mode = CStarSpec::Mode::Components;
            } else if (mode == "member") {
                cfg.cstar.mode = CStarSpec::Mode::Member;
                if (c.contains("member_index")) cfg.cstar.member_index = c.at("member_index").get<int>();
                if (c.contains("entries"))
                    cfg.cstar.member_entries = parse_number_array(c.at("entries"), "cstar entries");
                require(cfg.cstar.member_index.has_value() || cfg.cstar.member_entries.has_value(),
                        "config: member cstar needs member_index or entries");
            } else if (mode == "file") {
                cfg.cstar.mode = CStarSpec::Mode::File;
                cfg.cstar.path = c.at("path").get<std::string>();
            } else {
                throw std::invalid_argument("config: unknown cstar mode '" + mode + "'");
            }
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    return cfg;
}

std::pair<Dataset, Clustering> gen_synthetic(const GeneratorSpec& spec, uint64_t seed) {
    require(!spec.components.empty(), "gen_synthetic: no components");
    size_t d = spec.components[0].mean.size();
    Rng rng(seed);
    std::vector<std::vector<double>> points;
    std::vector<int> labels;
    for (size_t c = 0; c < spec.components.size(); ++c) {
        const auto& comp = spec.components[c];
        require(comp.mean.size() == d, "gen_synthetic: dimension mismatch");
        for (int i = 0; i < comp.size; ++i) {
            std::vector<double> p(d);
            for (size_t dd = 0; dd < d; ++dd) p[dd] = comp.mean[dd] + comp.stddev[dd] * rng.normal();
            points.push_back(std::move(p));
            labels.push_back(static_cast<int>(c));
        }
    }
    Dataset X(static_cast<int>(d), std::move(points));
    Clustering c_star(static_cast<int>(spec.components.size()), std::move(labels));
    return {std::move(X), std::move(c_star)};
}

Instance build_instance(const ExperimentConfig& cfg) {
    Instance inst;

    std::optional<Clustering> component_labels;
    if (cfg.generator) {
        auto [X, labels] = gen_synthetic(*cfg.generator, mix_seed(cfg.seed, kSeedData));
        inst.X = std::move(X);
        component_labels = std::move(labels);
    } else if (cfg.dataset_path) {
        inst.X = read_dataset_csv(*cfg.dataset_path);
    } else {
        throw std::invalid_argument("config: needs a generator or dataset_path");
    }

    require(cfg.mapping_class.has_value(), "config: needs a mapping class");
    require(cfg.mapping_class->d_in == inst.X.dim, "config: class d_in must match the dataset");
    inst.cover = cfg.mapping_class->enumerate_grid(cfg.cover_guard);
    require(!inst.cover.empty(), "config: empty mapping cover");

    std::vector<std::shared_ptr<const Mapping>> candidates;
    candidates.reserve(inst.cover.size());
    for (const auto& f : inst.cover) candidates.push_back(std::make_shared<LinearMapping>(f));
    SolvePolicy policy = cfg.solver;
    policy.seed = mix_seed(cfg.seed, kSeedSolve);
    inst.eval = evaluate_candidates(inst.X, std::move(candidates), cfg.k, policy);

    switch (cfg.cstar.mode) {
        case CStarSpec::Mode::Components: {
            require(component_labels.has_value(), "config: components cstar needs a generator");
            require(component_labels->k == cfg.k, "config: component count must equal k");
            inst.c_star = std::move(*component_labels);
            break;
        }
        case CStarSpec::Mode::Member: {
            if (cfg.cstar.member_index) {
                int idx = *cfg.cstar.member_index;
                require(idx >= 0 && idx < static_cast<int>(inst.cover.size()),
                        "config: cstar member_index out of range");
                inst.c_star = inst.eval.induced[static_cast<size_t>(idx)];
            } else {
                LinearMapping f = cfg.mapping_class->member(*cfg.cstar.member_entries);
                SolvePolicy p = cfg.solver;
                p.seed = mix_seed(cfg.seed, kSeedCStar);
                inst.c_star = induced_clustering(inst.X, f, cfg.k, p).clustering;
            }
            break;
        }
        case CStarSpec::Mode::File: {
            inst.c_star = read_clustering_csv(*cfg.cstar.path, inst.X.size(), cfg.k);
            require(inst.c_star.domain_size() == inst.X.size(),
                    "config: cstar file must label every point");
            break;
        }
    }

    for (int m : cfg.sample_sizes)
        require(m <= inst.X.size(), "config: sample size exceeds dataset size");

    for (const Clustering& cf : inst.eval.induced) {
        if (delta(inst.c_star, cf).match.mismatch_total == 0) {
            inst.realizable = true;
            break;
        }
    }
    return inst;
}

namespace {

// Per-candidate numerators of delta_X(C*, C^f_X); the denominator is |X|.
std::vector<long long> full_loss_numerators(const Instance& inst) {
    std::vector<long long> nums(static_cast<size_t>(inst.eval.size()));
    for (int i = 0; i < inst.eval.size(); ++i)
        nums[static_cast<size_t>(i)] = delta(inst.c_star, inst.eval.induced[static_cast<size_t>(i)]).match.mismatch_total;
    return nums;
}

struct TrialOutcome {
    TrialRecord record;
    long long regret_num = 0;     // over |X|
    long long rep_cross_num = 0;  // max |full*m - sample*n|, over |X|*m
};

TrialOutcome run_trial(const Instance& inst, const std::vector<long long>& full_num, int best_index,
                       int m, int trial, uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);
    std::vector<PointId> sample = rng.sample_without_replacement(inst.X.size(), m);

    long long n = inst.X.size();
    int chosen = -1;
    long long chosen_num = 0;
    long long rep_cross = 0;
    for (int i = 0; i < inst.eval.size(); ++i) {
        long long s_num = delta_on(inst.c_star, inst.eval.induced[static_cast<size_t>(i)], sample)
                              .match.mismatch_total;
        if (chosen < 0 || s_num < chosen_num) {
            chosen = i;
            chosen_num = s_num;
        }
        long long cross = full_num[static_cast<size_t>(i)] * m - s_num * n;
        rep_cross = std::max(rep_cross, std::llabs(cross));
    }

    long long best_num = full_num[static_cast<size_t>(best_index)];
    long long regret_num = full_num[static_cast<size_t>(chosen)] - best_num;

    TrialOutcome out;
    out.regret_num = regret_num;
    out.rep_cross_num = rep_cross;
    out.record.m = m;
    out.record.trial = trial;
    out.record.seed = seed;
    out.record.chosen = chosen;
    out.record.empirical_loss = static_cast<double>(chosen_num) / static_cast<double>(m);
    out.record.learner_loss = static_cast<double>(full_num[static_cast<size_t>(chosen)]) / static_cast<double>(n);
    out.record.best_in_class = static_cast<double>(best_num) / static_cast<double>(n);
    out.record.regret = static_cast<double>(regret_num) / static_cast<double>(n);
    out.record.representativeness = static_cast<double>(rep_cross) / (static_cast<double>(n) * m);
    out.record.exact_solver =
        std::all_of(inst.eval.exact.begin(), inst.eval.exact.end(), [](bool b) { return b; });
    // The regret bound from sample representativeness, checked in exact
    // integer arithmetic: regret <= 2 * representativeness.
    out.record.bound_ok = regret_num * m <= 2 * rep_cross;
    out.record.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

SummaryRow summarize(int m, const std::vector<TrialRecord>& trials, double eps) {
    std::vector<double> regrets, reps;
    for (const auto& t : trials) {
        if (t.m != m) continue;
        regrets.push_back(t.regret);
        reps.push_back(t.representativeness);
    }
    SummaryRow row;
    row.m = m;
    row.trials = static_cast<int>(regrets.size());
    row.regret_q25 = quantile(regrets, 0.25);
    row.regret_median = quantile(regrets, 0.5);
    row.regret_q75 = quantile(regrets, 0.75);
    row.regret_max = regrets.empty() ? 0.0 : *std::max_element(regrets.begin(), regrets.end());
    row.rep_q25 = quantile(reps, 0.25);
    row.rep_median = quantile(reps, 0.5);
    row.rep_q75 = quantile(reps, 0.75);
    row.rep_max = reps.empty() ? 0.0 : *std::max_element(reps.begin(), reps.end());
    int exceed = 0;
    for (double r : reps)
        if (r > eps) ++exceed;
    row.exceed_frac = reps.empty() ? 0.0 : static_cast<double>(exceed) / static_cast<double>(reps.size());
    return row;
}

}  // namespace

SweepResult run_sweep(const ExperimentConfig& cfg) {
    require(!cfg.sample_sizes.empty(), "config: sweep needs sample_sizes");
    Instance inst = build_instance(cfg);
    std::vector<long long> full_num = full_loss_numerators(inst);
    int best_index = static_cast<int>(std::min_element(full_num.begin(), full_num.end()) - full_num.begin());

    SweepResult res;
    res.realizable = inst.realizable;
    for (int m : cfg.sample_sizes) {
        for (int t = 0; t < cfg.trials; ++t) {
            uint64_t seed = mix_seed(mix_seed(cfg.seed, kSeedTrial + static_cast<uint64_t>(m)),
                                     static_cast<uint64_t>(t));
            TrialOutcome out = run_trial(inst, full_num, best_index, m, t, seed);
            if (!out.record.bound_ok) ++res.bound_violations;
            res.trials.push_back(std::move(out.record));
        }
        res.summary.push_back(summarize(m, res.trials, cfg.eps));
    }
    auto [slope, defined] = loglog_slope(res.summary, [](const SummaryRow& r) { return r.rep_median; });
    res.uc_slope = slope;
    res.uc_slope_defined = defined;
    return res;
}

UcReport run_verify_uc(const ExperimentConfig& cfg) {
    require(!cfg.sample_sizes.empty(), "config: verify-uc needs sample_sizes");
    Instance inst = build_instance(cfg);
    std::vector<long long> full_num = full_loss_numerators(inst);
    int best_index = static_cast<int>(std::min_element(full_num.begin(), full_num.end()) - full_num.begin());

    UcReport rep;
    for (int m : cfg.sample_sizes) {
        for (int t = 0; t < cfg.trials; ++t) {
            uint64_t seed = mix_seed(mix_seed(cfg.seed, kSeedTrial + static_cast<uint64_t>(m)),
                                     static_cast<uint64_t>(t));
            TrialOutcome out = run_trial(inst, full_num, best_index, m, t, seed);
            rep.trials.push_back(std::move(out.record));
        }
        rep.summary.push_back(summarize(m, rep.trials, cfg.eps));
    }
    auto [slope, defined] = loglog_slope(rep.summary, [](const SummaryRow& r) { return r.rep_median; });
    rep.slope = slope;
    rep.slope_defined = defined;

    // Rate formula with constant 1: (k + Pdim(F) + ln(1/delta)) / eps^2.
    double pdim = static_cast<double>(pdim_vector(*cfg.mapping_class).total);
    rep.m_formula = static_cast<unsigned long long>(
        std::ceil((cfg.k + pdim + std::log(1.0 / cfg.delta)) / (cfg.eps * cfg.eps)));
    for (const auto& row : rep.summary) {
        if (static_cast<unsigned long long>(row.m) >= rep.m_formula &&
            (rep.checked_m < 0 || row.m < rep.checked_m)) {
            rep.checked_m = row.m;
            rep.exceed_frac_at_checked = row.exceed_frac;
            rep.exceed_within_delta = row.exceed_frac <= cfg.delta;
            int exceed = static_cast<int>(std::llround(row.exceed_frac * row.trials));
            rep.binomial_consistent = binomial_upper_tail(row.trials, exceed, cfg.delta) >= 0.05;
        }
    }
    return rep;
}

namespace {

std::vector<std::vector<int>> all_permutations(int k) {
    std::vector<int> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Joint block counts of two full-domain clusterings over a set of ids.
std::vector<std::vector<long long>> joint_counts(const Clustering& a, const Clustering& b,
                                                 const std::vector<PointId>& ids) {
    std::vector<std::vector<long long>> joint(static_cast<size_t>(a.k),
                                              std::vector<long long>(static_cast<size_t>(b.k), 0));
    for (PointId x : ids) ++joint[static_cast<size_t>(a.label(x))][static_cast<size_t>(b.label(x))];
    return joint;
}

// h-mass over the id set for one permutation: twice the number of ids whose
// block pair disagrees under sigma.
long long mass_for_sigma(const std::vector<std::vector<long long>>& joint, const std::vector<int>& sigma,
                         long long n_ids) {
    long long agree = 0;
    for (size_t a = 0; a < sigma.size(); ++a) agree += joint[a][static_cast<size_t>(sigma[a])];
    return 2 * (n_ids - agree);
}

}  // namespace

Thm2Report run_verify_thm2(const ExperimentConfig& cfg) {
    require(cfg.k <= 4, "verify-thm2: k must be at most 4 (sigma enumeration)");
    require(!cfg.sample_sizes.empty(), "config: verify-thm2 needs sample_sizes");

    Thm2Report rep;
    auto sigmas = all_permutations(cfg.k);

    for (int it = 0; it < cfg.instances; ++it) {
        ExperimentConfig icfg = cfg;
        icfg.seed = mix_seed(cfg.seed, static_cast<uint64_t>(it));
        Instance inst = build_instance(icfg);
        require(inst.cover.size() <= 64, "verify-thm2: cover too large for pair enumeration");
        rep.realizable = inst.realizable;

        int n_cand = inst.eval.size();
        long long n = inst.X.size();
        std::vector<PointId> all_ids(static_cast<size_t>(n));
        std::iota(all_ids.begin(), all_ids.end(), 0);

        int m = cfg.sample_sizes[static_cast<size_t>(it) % cfg.sample_sizes.size()];
        uint64_t seed = mix_seed(icfg.seed, kSeedTrial);
        Rng rng(seed);
        std::vector<PointId> sample = rng.sample_without_replacement(inst.X.size(), m);

        // sup over pairs and permutations of |h(S) - h(X)|, and the pairwise
        // representativeness, both as integer numerators over n*m.
        long long sup_h = 0, rep_pair = 0;
        for (int i = 0; i < n_cand; ++i) {
            for (int j = i; j < n_cand; ++j) {
                const Clustering& ci = inst.eval.induced[static_cast<size_t>(i)];
                const Clustering& cj = inst.eval.induced[static_cast<size_t>(j)];
                auto joint_x = joint_counts(ci, cj, all_ids);
                auto joint_s = joint_counts(ci, cj, sample);
                long long min_x = -1, min_s = -1;
                for (const auto& sigma : sigmas) {
                    long long hx = mass_for_sigma(joint_x, sigma, n);
                    long long hs = mass_for_sigma(joint_s, sigma, m);
                    sup_h = std::max(sup_h, std::llabs(hx * m - hs * n));
                    if (min_x < 0 || hx < min_x) min_x = hx;
                    if (min_s < 0 || hs < min_s) min_s = hs;
                }
                // Reduction consistency: the assignment-solver numerator must
                // equal the minimum h-mass over permutations, on both scopes.
                long long dx = delta(ci, cj).match.mismatch_total;
                long long ds = delta_on(ci, cj, sample).match.mismatch_total;
                if (dx != min_x || ds != min_s) ++rep.reduction_mismatches;
                rep_pair = std::max(rep_pair, std::llabs(dx * m - ds * n));
            }
        }

        long long rep_def2 = 0;
        for (int i = 0; i < n_cand; ++i) {
            const Clustering& ci = inst.eval.induced[static_cast<size_t>(i)];
            long long dx = delta(inst.c_star, ci).match.mismatch_total;
            long long ds = delta_on(inst.c_star, ci, sample).match.mismatch_total;
            rep_def2 = std::max(rep_def2, std::llabs(dx * m - ds * n));
        }

        Thm2Record record;
        record.instance = it;
        record.seed = seed;
        record.m = m;
        double scale = static_cast<double>(n) * m;
        record.sup_h_gap = static_cast<double>(sup_h) / scale;
        record.rep_pairwise = static_cast<double>(rep_pair) / scale;
        record.rep_def2 = static_cast<double>(rep_def2) / scale;
        record.ok = rep_pair <= sup_h && (!inst.realizable || rep_def2 <= sup_h);
        if (!record.ok) ++rep.violations;
        rep.records.push_back(record);
    }
    return rep;
}

namespace {

json record_to_json(const TrialRecord& t) {
    return json{{"m", t.m},
                {"trial", t.trial},
                {"seed", t.seed},
                {"chosen", t.chosen},
                {"empirical_loss", t.empirical_loss},
                {"learner_loss", t.learner_loss},
                {"best_in_class", t.best_in_class},
                {"regret", t.regret},
                {"representativeness", t.representativeness},
                {"exact", t.exact_solver},
                {"bound_ok", t.bound_ok}};
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "m,trials,regret_q25,regret_median,regret_q75,regret_max,"
           "rep_q25,rep_median,rep_q75,rep_max,exceed_frac\n";
    for (const auto& r : rows) {
        out << r.m << ',' << r.trials << ',' << fmt_double(r.regret_q25) << ','
            << fmt_double(r.regret_median) << ',' << fmt_double(r.regret_q75) << ','
            << fmt_double(r.regret_max) << ',' << fmt_double(r.rep_q25) << ','
            << fmt_double(r.rep_median) << ',' << fmt_double(r.rep_q75) << ','
            << fmt_double(r.rep_max) << ',' << fmt_double(r.exceed_frac) << '\n';
    }
    return out.str();
}

}  // namespace

std::string sweep_records_jsonl(const SweepResult& r) {
    std::ostringstream out;
    for (const auto& t : r.trials) out << record_to_json(t).dump() << '\n';
    return out.str();
}

std::string sweep_summary_csv(const SweepResult& r) { return summary_csv(r.summary); }

std::string sweep_report_json(const SweepResult& r, const ExperimentConfig& cfg) {
    json j{{"trials", r.trials.size()},
           {"bound_violations", r.bound_violations},
           {"uc_slope", r.uc_slope},
           {"uc_slope_defined", r.uc_slope_defined},
           {"realizable", r.realizable},
           {"eps", cfg.eps},
           {"delta", cfg.delta},
           {"seed", cfg.seed}};
    return j.dump(2) + "\n";
}

std::string uc_records_jsonl(const UcReport& r) {
    std::ostringstream out;
    for (const auto& t : r.trials) {
        json j{{"m", t.m},
               {"trial", t.trial},
               {"seed", t.seed},
               {"sup_gap", t.representativeness},
               {"exact", t.exact_solver}};
        out << j.dump() << '\n';
    }
    return out.str();
}

std::string uc_summary_csv(const UcReport& r) { return summary_csv(r.summary); }

std::string uc_report_json(const UcReport& r, const ExperimentConfig& cfg) {
    json j{{"slope", r.slope},
           {"slope_defined", r.slope_defined},
           {"m_formula", r.m_formula},
           {"checked_m", r.checked_m},
           {"exceed_frac_at_checked", r.exceed_frac_at_checked},
           {"exceed_within_delta", r.exceed_within_delta},
           {"binomial_consistent", r.binomial_consistent},
           {"eps", cfg.eps},
           {"delta", cfg.delta},
           {"seed", cfg.seed}};
    return j.dump(2) + "\n";
}

std::string thm2_records_jsonl(const Thm2Report& r) {
    std::ostringstream out;
    for (const auto& t : r.records) {
        json j{{"instance", t.instance},
               {"seed", t.seed},
               {"m", t.m},
               {"sup_h_gap", t.sup_h_gap},
               {"rep_pairwise", t.rep_pairwise},
               {"rep_def2", t.rep_def2},
               {"ok", t.ok}};
        out << j.dump() << '\n';
    }
    return out.str();
}

std::string thm2_report_json(const Thm2Report& r, const ExperimentConfig& cfg) {
    json j{{"instances", r.records.size()},
           {"violations", r.violations},
           {"reduction_mismatches", r.reduction_mismatches},
           {"realizable", r.realizable},
           {"seed", cfg.seed}};
    return j.dump(2) + "\n";
}

}  // namespace srlk
