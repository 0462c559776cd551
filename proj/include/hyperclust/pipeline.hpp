#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperclust/clusterer.hpp"
#include "hyperclust/corruption.hpp"
#include "hyperclust/dataset.hpp"
#include "hyperclust/fusion.hpp"
#include "hyperclust/params.hpp"

namespace hyperclust {

struct SynthSpec {
    int kappa = 3;
    int per_cluster = 50;
    int dim = 4;
    double separation = 6.0;
    std::uint64_t seed = 42;
};

/// Everything one experiment sweep needs: the data source, the pipeline
/// parameters, the corruption ladder and the seed list.
struct ExperimentConfig {
    std::string data_path;                 // exactly one of data_path / synth
    std::optional<SynthSpec> synth;
    HyperParams params;                    // params.sigma == 0 means automatic
    std::optional<Ablation> ablation;      // overrides params.weights
    Criterion criterion = Criterion::Dhpc;
    bool sigma_grid_search = false;        // tune sigma by NMI on the clean data
    std::vector<std::pair<CorruptionKind, double>> corruption;  // empty: clean only
    std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    int workers = 0;                       // 0: one per hardware thread

    void validate() const;
    FusionWeights effective_weights() const;
};

/// Flat `key = value` config file, one key per line, `#` comments.
ExperimentConfig parse_config_file(const std::string& path);

/// Scale-grid search: the grid value whose mean NMI over the config's seeds
/// is highest on the uncorrupted dataset. Needs ground-truth labels.
double tune_sigma_by_nmi(const Dataset& dataset, const ExperimentConfig& config);

/// Stable 64-bit hex digest of the canonical config serialization.
std::string config_fingerprint(const ExperimentConfig& config);

/// Outcome of one sweep cell (seed x corruption level). Failed cells carry
/// the error text in `status` and never abort the sweep.
struct ResultRecord {
    std::string fingerprint;
    std::uint64_t seed = 0;
    std::string corruption_kind = "none";
    double corruption_level = 0.0;
    double sigma = 0.0;
    std::optional<double> nmi;
    std::optional<double> accuracy;
    double rho = 0.0;
    int solver_iterations = 0;
    int refine_iterations = 0;
    double seconds = 0.0;
    std::string status = "ok";
};

/// Record plus the partition that produced it (absent when the cell failed).
struct CellOutcome {
    ResultRecord record;
    std::optional<Partition> partition;
};

/// One full pipeline pass on an in-memory dataset:
/// corrupt -> pairwise kernel -> kNN hypergraph -> communities and
/// over-clustering hypergraph -> fuse -> cluster -> metrics.
CellOutcome run_cell(const Dataset& dataset, const ExperimentConfig& config, std::uint64_t seed,
                     CorruptionKind kind, double level, double tuned_sigma = 0.0);

/// Runs every (seed x corruption level) cell, concurrently up to the worker
/// cap, and returns records in deterministic sweep order.
std::vector<ResultRecord> run_pipeline(const Dataset& dataset, const ExperimentConfig& config);

/// Loads the configured data source, then runs the sweep.
std::vector<ResultRecord> run_pipeline(const ExperimentConfig& config);

/// Writes results.csv (one row per record), summary.csv (mean/std grouped
/// by corruption level) and per-metric series files into out_dir.
void emit_results(const std::vector<ResultRecord>& records, const std::string& out_dir);

/// Exact inverse of the results.csv writer.
std::vector<ResultRecord> parse_results_csv(const std::string& path);

}  // namespace hyperclust
