#include <cctype>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srlk/experiments.hpp"
#include "srlk/io.hpp"
#include "srlk/kmeans.hpp"
#include "srlk/learner.hpp"
#include "srlk/mapping_class.hpp"
#include "srlk/partition_distance.hpp"
#include "srlk/rng.hpp"
#include "srlk/uniqueness.hpp"

namespace {

using nlohmann::json;
using namespace srlk;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitAssertion = 3;

struct CommonOpts {
    std::string config_path;
    std::string out_prefix;
    std::optional<uint64_t> seed;
};

ExperimentConfig load_config(const CommonOpts& opts) {
    ExperimentConfig cfg = parse_config(read_file(opts.config_path));
    if (opts.seed) cfg.seed = *opts.seed;
    return cfg;
}

// Optional config for the file-oriented subcommands: supplies defaults that
// explicit flags override.
std::optional<ExperimentConfig> maybe_config(const CommonOpts& opts) {
    if (opts.config_path.empty()) return std::nullopt;
    return load_config(opts);
}

// --out wins; the config's output_path is the fallback.
std::string resolve_out(const CommonOpts& opts, const ExperimentConfig& cfg) {
    if (!opts.out_prefix.empty()) return opts.out_prefix;
    if (cfg.output_path && !cfg.output_path->empty()) return *cfg.output_path;
    throw std::invalid_argument("pass --out or set output_path in the config");
}

std::vector<PointId> parse_id_list(const std::string& text) {
    std::vector<PointId> ids;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) ids.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    return ids;
}

int cmd_gen_data(const CommonOpts& opts) {
    ExperimentConfig cfg = load_config(opts);
    if (!cfg.generator) throw std::invalid_argument("gen-data: config needs a generator");
    std::string out = resolve_out(opts, cfg);
    auto [X, c_star] = gen_synthetic(*cfg.generator, mix_seed(cfg.seed, 0xDA7AULL));
    write_dataset_csv(out + ".data.csv", X);
    write_clustering_csv(out + ".cstar.csv", c_star);
    json j{{"points", X.size()}, {"dim", X.dim}, {"k", c_star.k}, {"seed", cfg.seed}};
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_diff(const CommonOpts& opts, const std::string& path_a, const std::string& path_b,
             const std::string& sample_list, int k) {
    if (k <= 0) {
        if (auto cfg = maybe_config(opts)) k = cfg->k;
    }
    Clustering a = read_clustering_csv_auto(path_a, k);
    Clustering b = read_clustering_csv_auto(path_b, k);
    if (a.size() != b.size()) {
        int n = std::max(a.size(), b.size());
        a = read_clustering_csv(path_a, n, a.k);
        b = read_clustering_csv(path_b, n, b.k);
    }
    if (k <= 0 && a.k != b.k)
        throw std::invalid_argument("diff: files disagree on k; pass --k explicitly");

    DeltaResult res;
    if (sample_list.empty()) {
        res = delta(a, b);
    } else {
        res = delta_on(a, b, parse_id_list(sample_list));
    }
    std::string report;
    report += "delta " + fmt_double(res.value) + "\n";
    report += "sigma";
    for (int s : res.match.sigma) report += ' ' + std::to_string(s);
    report += "\nper_block";
    for (long long c : res.match.per_block) report += ' ' + std::to_string(c);
    report += "\ndomain_size " + std::to_string(res.match.domain_size) + "\n";
    std::cout << report;
    if (!opts.out_prefix.empty()) write_file(opts.out_prefix + ".diff.txt", report);
    return kExitOk;
}

int cmd_kmeans(const CommonOpts& opts, const std::string& data_path, const std::string& mapping_path,
               int k, std::optional<uint64_t> seed, std::optional<int> restarts, bool exact) {
    SolvePolicy policy;
    if (auto cfg = maybe_config(opts)) {
        policy = cfg->solver;
        policy.seed = cfg->seed;
        if (k <= 0) k = cfg->k;
    }
    if (seed) policy.seed = *seed;
    if (restarts) policy.restarts = *restarts;
    if (k <= 0) throw std::invalid_argument("kmeans: pass -k or a config with k");

    Dataset X = read_dataset_csv(data_path);
    LinearMapping f = read_mapping_csv(mapping_path);
    KMeansSolution sol = exact ? solve_exact(X, f, k, policy.exact_guard)
                               : solve(X, f, k, policy.seed, policy.restarts, policy.max_iterations,
                                       policy.tolerance);
    if (!opts.out_prefix.empty()) write_clustering_csv(opts.out_prefix + ".clustering.csv", sol.clustering);
    json j{{"cost", sol.cost},
           {"exact", sol.is_exact},
           {"empty_blocks", sol.empty_blocks},
           {"restarts", sol.restarts_used}};
    if (sol.second_cost) j["second_cost"] = *sol.second_cost;
    if (sol.delta_to_second) j["delta_to_second"] = *sol.delta_to_second;
    if (sol.is_exact) j["degenerate_optimum"] = sol.degenerate_optimum;
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_learn(const CommonOpts& opts, const std::string& data_path, const std::string& labels_path) {
    ExperimentConfig cfg = load_config(opts);
    if (!cfg.mapping_class) throw std::invalid_argument("learn: config needs a mapping class");
    Dataset X = read_dataset_csv(data_path);
    Clustering sample_labels = read_clustering_csv(labels_path, X.size(), cfg.k);
    std::vector<PointId> sample = sample_labels.domain();
    if (sample.empty()) throw std::invalid_argument("learn: sample labels file is empty");

    std::vector<LinearMapping> cover = cfg.mapping_class->enumerate_grid(cfg.cover_guard);
    std::vector<std::shared_ptr<const Mapping>> candidates;
    for (const auto& f : cover) candidates.push_back(std::make_shared<LinearMapping>(f));
    SolvePolicy policy = cfg.solver;
    policy.seed = mix_seed(cfg.seed, 0x501EULL);
    CandidateEvaluation eval = evaluate_candidates(X, std::move(candidates), cfg.k, policy);
    LearnResult res = term_learn(eval, sample, sample_labels);

    std::string out = resolve_out(opts, cfg);
    write_mapping_csv(out + ".mapping.csv", cover[static_cast<size_t>(res.chosen_index)]);
    write_clustering_csv(out + ".clustering.csv", res.full_clustering);
    std::string losses = "candidate,loss\n";
    for (size_t i = 0; i < res.per_candidate_losses.size(); ++i)
        losses += std::to_string(i) + "," + fmt_double(res.per_candidate_losses[i]) + "\n";
    write_file(out + ".losses.csv", losses);

    json j{{"chosen", res.chosen_index},
           {"empirical_loss", res.empirical_loss},
           {"candidates", eval.size()},
           {"sample_size", sample.size()}};
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_check_unique(const CommonOpts& opts, const std::string& data_path,
                     const std::string& mapping_path, int k, std::optional<double> eta,
                     std::optional<double> eps, std::optional<uint64_t> seed,
                     std::optional<int> restarts) {
    SolvePolicy policy;
    if (auto cfg = maybe_config(opts)) {
        policy = cfg->solver;
        policy.seed = cfg->seed;
        if (k <= 0) k = cfg->k;
        if (!eta) eta = cfg->eta;
        if (!eps) eps = cfg->eps;
    }
    if (seed) policy.seed = *seed;
    if (restarts) policy.restarts = *restarts;
    if (k <= 0 || !eta || !eps)
        throw std::invalid_argument("check-unique: pass -k/--eta/--eps or a config providing them");

    Dataset X = read_dataset_csv(data_path);
    LinearMapping f = read_mapping_csv(mapping_path);
    UniquenessVerdict v = check_uniqueness(X, f, k, *eta, *eps, policy);

    json j{{"unique", v.unique},
           {"method", v.method == VerdictMethod::ExactEnumeration ? "exact-enumeration" : "local-search"},
           {"opt_cost", v.opt_cost},
           {"eta", v.eta},
           {"eps", v.eps},
           {"degenerate_optimum", v.degenerate_optimum}};
    if (v.second_cost) j["second_cost"] = *v.second_cost;
    if (v.witness) {
        j["witness_cost"] = v.witness->cost;
        j["witness_delta"] = v.witness->delta_to_opt;
        if (!opts.out_prefix.empty()) {
            std::string path = opts.out_prefix + ".witness.csv";
            write_clustering_csv(path, v.witness->partition);
            j["witness_path"] = path;
        }
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_sweep(const CommonOpts& opts) {
    ExperimentConfig cfg = load_config(opts);
    std::string out = resolve_out(opts, cfg);
    SweepResult res = run_sweep(cfg);
    write_file(out + ".trials.jsonl", sweep_records_jsonl(res));
    write_file(out + ".summary.csv", sweep_summary_csv(res));
    write_file(out + ".report.json", sweep_report_json(res, cfg));
    std::cerr << "sweep: " << res.trials.size() << " trials, " << res.bound_violations
              << " bound violations\n";
    return res.bound_violations == 0 ? kExitOk : kExitAssertion;
}

int cmd_verify_uc(const CommonOpts& opts) {
    ExperimentConfig cfg = load_config(opts);
    std::string out = resolve_out(opts, cfg);
    UcReport rep = run_verify_uc(cfg);
    write_file(out + ".trials.jsonl", uc_records_jsonl(rep));
    write_file(out + ".summary.csv", uc_summary_csv(rep));
    write_file(out + ".report.json", uc_report_json(rep, cfg));
    std::cerr << "verify-uc: " << rep.trials.size() << " trials\n";
    return kExitOk;
}

int cmd_verify_thm2(const CommonOpts& opts) {
    ExperimentConfig cfg = load_config(opts);
    std::string out = resolve_out(opts, cfg);
    Thm2Report rep = run_verify_thm2(cfg);
    write_file(out + ".trials.jsonl", thm2_records_jsonl(rep));
    write_file(out + ".report.json", thm2_report_json(rep, cfg));
    std::cerr << "verify-thm2: " << rep.records.size() << " instances, " << rep.violations
              << " violations, " << rep.reduction_mismatches << " reduction mismatches\n";
    return rep.violations == 0 && rep.reduction_mismatches == 0 ? kExitOk : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Representation learning for k-means: solvers, distances, and experiment harness"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string data_path, mapping_path, labels_path, path_a, path_b, sample_list;
    int k = 0;
    uint64_t seed = 0;
    int restarts = 0;
    double eta = 0.0, eps = 0.0;
    bool exact = false;
    std::optional<uint64_t> seed_opt;
    std::optional<int> restarts_opt;
    std::optional<double> eta_opt, eps_opt;

    auto add_common = [&](CLI::App* cmd, bool config_required, bool out_required) {
        auto* c = cmd->add_option("--config", opts.config_path, "JSON config file");
        if (config_required) c->required();
        auto* s = cmd->add_option("--seed", seed, "Override the config seed");
        s->each([&](const std::string&) {
            opts.seed = seed;
            seed_opt = seed;
        });
        cmd->add_option("--out", opts.out_prefix,
                        out_required ? "Output path prefix (or output_path in the config)"
                                     : "Output path prefix");
    };
    auto add_restarts = [&](CLI::App* cmd) {
        cmd->add_option("--restarts", restarts, "Lloyd restarts")
            ->each([&](const std::string&) { restarts_opt = restarts; });
    };

    auto* gen = app.add_subcommand("gen-data", "Generate a synthetic dataset and target clustering");
    add_common(gen, true, true);

    auto* diff = app.add_subcommand("diff", "Delta-difference between two clustering files");
    add_common(diff, false, false);
    diff->add_option("first", path_a, "First clustering CSV")->required();
    diff->add_option("second", path_b, "Second clustering CSV")->required();
    diff->add_option("--sample", sample_list, "Comma-separated point ids to restrict to");
    diff->add_option("-k,--k", k, "Block count (default: inferred from the files)");

    auto* km = app.add_subcommand("kmeans", "Cluster a dataset under a linear mapping");
    add_common(km, false, false);
    km->add_option("--data", data_path, "Dataset CSV")->required();
    km->add_option("--mapping", mapping_path, "Mapping matrix CSV")->required();
    km->add_option("-k,--k", k, "Number of clusters");
    add_restarts(km);
    km->add_flag("--exact", exact, "Use the enumeration solver");

    auto* learn = app.add_subcommand("learn", "Pick the cover member matching a clustered sample");
    add_common(learn, true, true);
    learn->add_option("--data", data_path, "Dataset CSV")->required();
    learn->add_option("--sample-labels", labels_path, "Sample clustering CSV")->required();

    auto* cu = app.add_subcommand("check-unique", "Check (eta, eps)-uniqueness of a mapping's solution");
    add_common(cu, false, false);
    cu->add_option("--data", data_path, "Dataset CSV")->required();
    cu->add_option("--mapping", mapping_path, "Mapping matrix CSV")->required();
    cu->add_option("-k,--k", k, "Number of clusters");
    cu->add_option("--eta", eta, "Cost slack")->each([&](const std::string&) { eta_opt = eta; });
    cu->add_option("--eps", eps, "Delta threshold")->each([&](const std::string&) { eps_opt = eps; });
    add_restarts(cu);

    auto* sweep = app.add_subcommand("sweep", "Sample-complexity sweep over sample sizes");
    add_common(sweep, true, true);
    auto* uc = app.add_subcommand("verify-uc", "Measure uniform convergence of sample losses");
    add_common(uc, true, true);
    auto* thm2 = app.add_subcommand("verify-thm2", "Check the binary-function reduction bound");
    add_common(thm2, true, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen_data(opts);
        if (diff->parsed()) return cmd_diff(opts, path_a, path_b, sample_list, k);
        if (km->parsed()) return cmd_kmeans(opts, data_path, mapping_path, k, seed_opt, restarts_opt, exact);
        if (learn->parsed()) return cmd_learn(opts, data_path, labels_path);
        if (cu->parsed())
            return cmd_check_unique(opts, data_path, mapping_path, k, eta_opt, eps_opt, seed_opt,
                                    restarts_opt);
        if (sweep->parsed()) return cmd_sweep(opts);
        if (uc->parsed()) return cmd_verify_uc(opts);
        if (thm2->parsed()) return cmd_verify_thm2(opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
