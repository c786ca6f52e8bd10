#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srlk/core.hpp"
#include "srlk/kmeans.hpp"
#include "srlk/learner.hpp"
#include "srlk/mapping_class.hpp"

namespace srlk {

struct ComponentSpec {
    std::vector<double> mean;
    std::vector<double> stddev;  // per-dimension, all positive
    int size = 0;
};

struct GeneratorSpec {
    std::vector<ComponentSpec> components;
};

// How the target clustering C* is produced: the generator's component labels,
// or the k-means clustering induced by a designated class member (realizable
// experiments), or a CSV file.
struct CStarSpec {
    enum class Mode { Components, Member, File };
    Mode mode = Mode::Components;
    std::optional<int> member_index;                  // index into the enumerated grid
    std::optional<std::vector<double>> member_entries;  // or explicit entries
    std::optional<std::string> path;
};

struct ExperimentConfig {
    uint64_t seed = 0;
    int k = 2;
    std::optional<GeneratorSpec> generator;
    std::optional<std::string> dataset_path;
    std::optional<MappingClass> mapping_class;
    unsigned long long cover_guard = 10000;
    std::vector<int> sample_sizes;
    int trials = 1;
    double eta = 0.05, eps = 0.1, delta = 0.1;
    SolvePolicy solver;
    CStarSpec cstar;
    int instances = 200;  // randomized-instance count for the reduction check
    std::optional<std::string> output_path;  // default --out prefix
};

// Parses and validates the JSON config text; throws std::invalid_argument
// with a readable message on any violation.
ExperimentConfig parse_config(const std::string& json_text);

// Samples points per mixture component (deterministic per seed); the target
// clustering is the component labels, point ids grouped by component.
std::pair<Dataset, Clustering> gen_synthetic(const GeneratorSpec& spec, uint64_t seed);

// Materialized experiment inputs shared by the sweep and verifier runs.
struct Instance {
    Dataset X;
    Clustering c_star;
    std::vector<LinearMapping> cover;
    CandidateEvaluation eval;
    bool realizable = false;  // some cover member attains delta_X(C*, C^f_X) = 0
};

Instance build_instance(const ExperimentConfig& cfg);

struct TrialRecord {
    int m = 0;
    int trial = 0;
    uint64_t seed = 0;
    int chosen = -1;
    double empirical_loss = 0.0;
    double learner_loss = 0.0;
    double best_in_class = 0.0;
    double regret = 0.0;
    double representativeness = 0.0;
    bool exact_solver = false;
    bool bound_ok = true;   // regret <= 2 * representativeness, checked in integers
    double wall_ms = 0.0;   // volatile; never serialized
};

struct SummaryRow {
    int m = 0;
    int trials = 0;
    double regret_q25 = 0, regret_median = 0, regret_q75 = 0, regret_max = 0;
    double rep_q25 = 0, rep_median = 0, rep_q75 = 0, rep_max = 0;
    double exceed_frac = 0;  // trials with representativeness > eps
};

struct SweepResult {
    std::vector<TrialRecord> trials;
    std::vector<SummaryRow> summary;
    int bound_violations = 0;  // zero unless the regret bound broke, which is a defect
    double uc_slope = 0.0;     // log-log slope of median representativeness vs m
    bool uc_slope_defined = false;
    bool realizable = false;
};

SweepResult run_sweep(const ExperimentConfig& cfg);

struct UcReport {
    std::vector<TrialRecord> trials;  // representativeness is the sup-gap
    std::vector<SummaryRow> summary;
    double slope = 0.0;
    bool slope_defined = false;
    // Informational check at the smallest configured m above the rate
    // formula (k + Pdim + ln(1/delta)) / eps^2 evaluated with constant 1.
    unsigned long long m_formula = 0;
    int checked_m = -1;               // -1 when no configured m reaches m_formula
    double exceed_frac_at_checked = 0.0;
    bool exceed_within_delta = false;
    bool binomial_consistent = false;  // exceedances consistent with rate <= delta at 95%
};

UcReport run_verify_uc(const ExperimentConfig& cfg);

struct Thm2Record {
    int instance = 0;
    uint64_t seed = 0;
    int m = 0;
    double sup_h_gap = 0.0;
    double rep_pairwise = 0.0;
    double rep_def2 = 0.0;  // only meaningful when the instance is realizable
    bool ok = true;
};

struct Thm2Report {
    std::vector<Thm2Record> records;
    int violations = 0;            // representativeness exceeded the sup h-gap
    int reduction_mismatches = 0;  // min over sigma of h-mass differed from the assignment value
    bool realizable = false;
};

Thm2Report run_verify_thm2(const ExperimentConfig& cfg);

// Canonical serializations (byte-stable across reruns with the same config
// and seed; no volatile fields).
std::string sweep_records_jsonl(const SweepResult& r);
std::string sweep_summary_csv(const SweepResult& r);
std::string sweep_report_json(const SweepResult& r, const ExperimentConfig& cfg);
std::string uc_records_jsonl(const UcReport& r);
std::string uc_summary_csv(const UcReport& r);
std::string uc_report_json(const UcReport& r, const ExperimentConfig& cfg);
std::string thm2_records_jsonl(const Thm2Report& r);
std::string thm2_report_json(const Thm2Report& r, const ExperimentConfig& cfg);

}  // namespace srlk
