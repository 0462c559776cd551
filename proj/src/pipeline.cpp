#include "hyperclust/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "hyperclust/csv_io.hpp"
#include "hyperclust/errors.hpp"
#include "hyperclust/knn_hypergraph.hpp"
#include "hyperclust/metrics.hpp"
#include "hyperclust/overclustering.hpp"
#include "hyperclust/pairwise.hpp"
#include "hyperclust/synth.hpp"

namespace hyperclust {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_optional(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace

void ExperimentConfig::validate() const {
    if (data_path.empty() == !synth.has_value())
        throw InvalidParameterError("experiment config: set exactly one of data file and synth spec");
    if (seeds.empty()) throw InvalidParameterError("experiment config: seed list must be non-empty");
    if (workers < 0) throw InvalidParameterError("experiment config: workers must be >= 0");
    effective_weights().validate();
    for (const auto& [kind, level] : corruption) CorruptionSpec{kind, level, 0}.validate();
}

FusionWeights ExperimentConfig::effective_weights() const {
    return ablation ? ablation_config(*ablation, params.weights) : params.weights;
}

std::string config_fingerprint(const ExperimentConfig& config) {
    std::ostringstream canon;
    canon << "data=" << config.data_path;
    if (config.synth)
        canon << ";synth=" << config.synth->kappa << ',' << config.synth->per_cluster << ','
              << config.synth->dim << ',' << format_double(config.synth->separation) << ','
              << config.synth->seed;
    const FusionWeights w = config.effective_weights();
    canon << ";kappa=" << config.params.kappa << ";alpha=" << format_double(w.alpha)
          << ";beta=" << format_double(w.beta) << ";k=" << config.params.k
          << ";nset=" << config.params.neighbor_set_size
          << ";cpm=" << config.params.effective_communities()
          << ";eps=" << format_double(config.params.epsilon)
          << ";sigma=" << format_double(config.params.sigma)
          << ";grid=" << (config.sigma_grid_search ? 1 : 0)
          << ";criterion=" << criterion_name(config.criterion);
    if (config.ablation) canon << ";ablation=" << ablation_name(*config.ablation);
    canon << ";seeds=";
    for (auto s : config.seeds) canon << s << ',';
    canon << ";corruption=";
    for (const auto& [kind, level] : config.corruption)
        canon << corruption_kind_name(kind) << ':' << format_double(level) << ',';

    // FNV-1a 64
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char ch : canon.str()) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

CellOutcome run_cell(const Dataset& dataset, const ExperimentConfig& config, std::uint64_t seed,
                     CorruptionKind kind, double level, double tuned_sigma) {
    CellOutcome out;
    ResultRecord& record = out.record;
    record.fingerprint = config_fingerprint(config);
    record.seed = seed;
    record.corruption_kind = level > 0 ? corruption_kind_name(kind) : "none";
    record.corruption_level = level;

    const auto start = std::chrono::steady_clock::now();
    try {
        const CorruptionSpec spec{kind, level, derive_seed(seed, 0x10000 + static_cast<std::uint64_t>(level * 1000))};
        const Dataset working = corrupt(dataset, spec);

        HyperParams params = config.params;
        params.seed = seed;
        params.weights = config.effective_weights();
        double sigma = params.sigma;
        if (sigma == 0.0) sigma = tuned_sigma > 0.0 ? tuned_sigma : default_sigma(working);
        record.sigma = sigma;
        params.sigma = sigma;
        params.validate(working.size());

        const SymmetricMatrix a = pairwise_similarity(working, KernelSpec{KernelKind::Gaussian, sigma});
        const FusionWeights& w = params.weights;
        Eigen::MatrixXd fused = w.alpha * a.values();
        if (w.beta > 0.0) fused += w.beta * knn_similarity(a, params.k).values();
        if (w.gamma() > 0.0) {
            const CommunitySet comms = build_communities(a, params);
            fused += w.gamma() *
                     overclustering_similarity(a, comms, params.neighbor_set_size).values();
        }
        const SymmetricMatrix s{std::move(fused)};

        ClusterResult clustered = cluster(s, params.kappa, params, config.criterion);
        record.rho = clustered.rho;
        record.solver_iterations = clustered.solver_iterations;
        record.refine_iterations = clustered.refine_iterations;
        if (!clustered.converged) record.status = "ok(unconverged)";
        if (dataset.labels) {
            record.nmi = nmi(clustered.partition.labels, *dataset.labels);
            record.accuracy = accuracy(clustered.partition.labels, *dataset.labels);
        }
        out.partition = std::move(clustered.partition);
    } catch (const std::exception& err) {
        record.status = std::string("error: ") + err.what();
    }
    record.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

double tune_sigma_by_nmi(const Dataset& dataset, const ExperimentConfig& config) {
    if (!dataset.labels)
        throw DataError("sigma grid search needs ground-truth labels");
    const std::vector<double> grid = sigma_grid(dataset);

    struct Probe {
        double sigma;
        std::uint64_t seed;
    };
    std::vector<Probe> probes;
    for (double sigma : grid)
        for (std::uint64_t seed : config.seeds) probes.push_back({sigma, seed});
    std::vector<std::optional<double>> scores(probes.size());

    const int worker_count = std::max(
        1, std::min<int>(config.workers > 0 ? config.workers
                                            : static_cast<int>(std::thread::hardware_concurrency()),
                         static_cast<int>(probes.size())));
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i = next.fetch_add(1); i < probes.size(); i = next.fetch_add(1)) {
            ExperimentConfig probe = config;
            probe.sigma_grid_search = false;
            probe.params.sigma = probes[i].sigma;
            scores[i] = run_cell(dataset, probe, probes[i].seed, CorruptionKind::AdditiveNoise, 0.0)
                            .record.nmi;
        }
    };
    if (worker_count == 1) {
        work();
    } else {
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (int t = 0; t < worker_count; ++t) workers.emplace_back(work);
        for (auto& t : workers) t.join();
    }

    double best_sigma = grid.front();
    double best_score = -1.0;
    const size_t per_sigma = config.seeds.size();
    for (size_t g = 0; g < grid.size(); ++g) {
        double mean = 0.0;
        int count = 0;
        for (size_t s = 0; s < per_sigma; ++s) {
            if (const auto& v = scores[g * per_sigma + s]) {
                mean += *v;
                ++count;
            }
        }
        if (count == 0) continue;
        mean /= count;
        if (mean > best_score) {
            best_score = mean;
            best_sigma = grid[g];
        }
    }
    return best_sigma;
}

std::vector<ResultRecord> run_pipeline(const Dataset& dataset, const ExperimentConfig& config) {
    config.validate();

    std::vector<std::pair<CorruptionKind, double>> levels = config.corruption;
    if (levels.empty()) levels.emplace_back(CorruptionKind::AdditiveNoise, 0.0);

    // default scale policy: explicit sigma wins; otherwise labeled data gets
    // the grid search (tuned once on the clean data, reused for every level)
    // and unlabeled data falls back to the automatic per-cell scale
    double tuned_sigma = 0.0;
    if (config.params.sigma == 0.0 && (config.sigma_grid_search || dataset.labels))
        tuned_sigma = tune_sigma_by_nmi(dataset, config);

    struct Cell {
        std::uint64_t seed;
        CorruptionKind kind;
        double level;
    };
    std::vector<Cell> cells;
    for (std::uint64_t seed : config.seeds)
        for (const auto& [kind, level] : levels) cells.push_back({seed, kind, level});

    std::vector<ResultRecord> records(cells.size());
    const int worker_count = std::max(
        1, std::min<int>(config.workers > 0 ? config.workers
                                            : static_cast<int>(std::thread::hardware_concurrency()),
                         static_cast<int>(cells.size())));
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
            records[i] = run_cell(dataset, config, cells[i].seed, cells[i].kind, cells[i].level,
                                  tuned_sigma)
                             .record;
    };
    if (worker_count == 1) {
        work();
    } else {
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (int t = 0; t < worker_count; ++t) workers.emplace_back(work);
        for (auto& t : workers) t.join();
    }
    return records;
}

namespace {

std::string strip_ws(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = strip_ws(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_number(const std::string& value, const std::string& key) {
    try {
        size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw InvalidParameterError("config key '" + key + "': bad number '" + value + "'");
    }
}

SynthSpec parse_synth_spec(const std::string& value) {
    SynthSpec spec;
    for (const std::string& part : split_list(value, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw InvalidParameterError("synth spec entries must look like key:value, got '" + part +
                                        "'");
        const std::string key = strip_ws(part.substr(0, colon));
        const std::string val = strip_ws(part.substr(colon + 1));
        if (key == "kappa") spec.kappa = static_cast<int>(parse_number(val, key));
        else if (key == "per") spec.per_cluster = static_cast<int>(parse_number(val, key));
        else if (key == "dim") spec.dim = static_cast<int>(parse_number(val, key));
        else if (key == "sep") spec.separation = parse_number(val, key);
        else if (key == "seed") spec.seed = static_cast<std::uint64_t>(parse_number(val, key));
        else throw InvalidParameterError("unknown synth spec key '" + key + "'");
    }
    return spec;
}

}  // namespace

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config '" + path + "'");

    ExperimentConfig config;
    config.seeds.clear();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip_ws(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidParameterError("config '" + path + "' line " + std::to_string(line_no) +
                                        ": expected key = value");
        const std::string key = strip_ws(line.substr(0, eq));
        const std::string value = strip_ws(line.substr(eq + 1));

        if (key == "data") config.data_path = value;
        else if (key == "synth") config.synth = parse_synth_spec(value);
        else if (key == "kappa") config.params.kappa = static_cast<int>(parse_number(value, key));
        else if (key == "alpha") config.params.weights.alpha = parse_number(value, key);
        else if (key == "beta") config.params.weights.beta = parse_number(value, key);
        else if (key == "ablation") config.ablation = parse_ablation(value);
        else if (key == "criterion") config.criterion = parse_criterion(value);
        else if (key == "k") config.params.k = static_cast<int>(parse_number(value, key));
        else if (key == "neighbor_set")
            config.params.neighbor_set_size = static_cast<int>(parse_number(value, key));
        else if (key == "communities_per_method")
            config.params.communities_per_method = static_cast<int>(parse_number(value, key));
        else if (key == "epsilon") config.params.epsilon = parse_number(value, key);
        else if (key == "workers") config.workers = static_cast<int>(parse_number(value, key));
        else if (key == "sigma") {
            if (value == "grid") config.sigma_grid_search = true;
            else if (value == "auto") config.params.sigma = 0.0;
            else config.params.sigma = parse_number(value, key);
        } else if (key == "seeds") {
            for (const std::string& s : split_list(value, ','))
                config.seeds.push_back(static_cast<std::uint64_t>(parse_number(s, key)));
        } else if (key == "noise_levels") {
            for (const std::string& s : split_list(value, ','))
                config.corruption.emplace_back(CorruptionKind::AdditiveNoise, parse_number(s, key));
        } else if (key == "zero_levels") {
            for (const std::string& s : split_list(value, ','))
                config.corruption.emplace_back(CorruptionKind::OutlierZeroing, parse_number(s, key));
        } else {
            throw InvalidParameterError("config '" + path + "' line " + std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
        }
    }
    if (config.seeds.empty()) config.seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    config.validate();
    return config;
}

std::vector<ResultRecord> run_pipeline(const ExperimentConfig& config) {
    config.validate();
    const Dataset dataset = config.synth
                                ? synth_blobs(config.synth->kappa, config.synth->per_cluster,
                                              config.synth->dim, config.synth->separation,
                                              config.synth->seed)
                                : load_csv(config.data_path);
    return run_pipeline(dataset, config);
}

namespace {

constexpr const char* kResultsHeader =
    "fingerprint,seed,corruption_kind,corruption_level,sigma,nmi,accuracy,rho,"
    "solver_iterations,refine_iterations,seconds,status";

double mean_of(double sum, int n) { return n > 0 ? sum / n : 0.0; }

double std_of(double sum, double sq, int n) {
    if (n <= 0) return 0.0;
    const double mean = sum / n;
    const double var = std::max(0.0, sq / n - mean * mean);
    return std::sqrt(var);
}

}  // namespace

void emit_results(const std::vector<ResultRecord>& records, const std::string& out_dir) {
    if (records.empty()) throw InvalidInputError("emit_results: no records");
    std::filesystem::create_directories(out_dir);

    const auto path = [&out_dir](const char* name) {
        return (std::filesystem::path(out_dir) / name).string();
    };

    {
        std::ofstream out(path("results.csv"), std::ios::binary);
        if (!out) throw DataError("cannot write results.csv in '" + out_dir + "'");
        out << kResultsHeader << '\n';
        for (const ResultRecord& r : records) {
            out << r.fingerprint << ',' << r.seed << ',' << r.corruption_kind << ','
                << format_double(r.corruption_level) << ',' << format_double(r.sigma) << ','
                << format_optional(r.nmi) << ',' << format_optional(r.accuracy) << ','
                << format_double(r.rho) << ',' << r.solver_iterations << ','
                << r.refine_iterations << ',' << format_double(r.seconds) << ',' << r.status
                << '\n';
        }
    }

    // group by (kind, level) in first-appearance order
    std::vector<std::pair<std::string, double>> group_keys;
    std::map<std::pair<std::string, double>, std::vector<const ResultRecord*>> groups;
    for (const ResultRecord& r : records) {
        const auto key = std::make_pair(r.corruption_kind, r.corruption_level);
        if (!groups.count(key)) group_keys.push_back(key);
        groups[key].push_back(&r);
    }

    std::ofstream summary(path("summary.csv"), std::ios::binary);
    std::ofstream series_nmi(path("series_nmi.csv"), std::ios::binary);
    std::ofstream series_acc(path("series_accuracy.csv"), std::ios::binary);
    if (!summary || !series_nmi || !series_acc)
        throw DataError("cannot write summary files in '" + out_dir + "'");
    summary << "fingerprint,corruption_kind,corruption_level,n,nmi_mean,nmi_std,"
               "accuracy_mean,accuracy_std,seconds_mean\n";
    series_nmi << "corruption_kind,corruption_level,mean,std\n";
    series_acc << "corruption_kind,corruption_level,mean,std\n";

    for (const auto& key : group_keys) {
        const auto& group = groups[key];
        int n_metric = 0;
        double nmi_sum = 0, nmi_sq = 0, acc_sum = 0, acc_sq = 0, sec_sum = 0;
        for (const ResultRecord* r : group) {
            sec_sum += r->seconds;
            if (r->nmi && r->accuracy) {
                ++n_metric;
                nmi_sum += *r->nmi;
                nmi_sq += *r->nmi * *r->nmi;
                acc_sum += *r->accuracy;
                acc_sq += *r->accuracy * *r->accuracy;
            }
        }
        summary << group.front()->fingerprint << ',' << key.first << ','
                << format_double(key.second) << ',' << group.size() << ','
                << format_double(mean_of(nmi_sum, n_metric)) << ','
                << format_double(std_of(nmi_sum, nmi_sq, n_metric)) << ','
                << format_double(mean_of(acc_sum, n_metric)) << ','
                << format_double(std_of(acc_sum, acc_sq, n_metric)) << ','
                << format_double(sec_sum / static_cast<double>(group.size())) << '\n';
        series_nmi << key.first << ',' << format_double(key.second) << ','
                   << format_double(mean_of(nmi_sum, n_metric)) << ','
                   << format_double(std_of(nmi_sum, nmi_sq, n_metric)) << '\n';
        series_acc << key.first << ',' << format_double(key.second) << ','
                   << format_double(mean_of(acc_sum, n_metric)) << ','
                   << format_double(std_of(acc_sum, acc_sq, n_metric)) << '\n';
    }
}

std::vector<ResultRecord> parse_results_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw DataError("'" + path + "': empty file");
    if (line != kResultsHeader) throw DataError("'" + path + "': unexpected header");

    std::vector<ResultRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        // status may contain commas; split only the first 11 fields
        std::vector<std::string> fields;
        size_t pos = 0;
        for (int f = 0; f < 11; ++f) {
            const size_t comma = line.find(',', pos);
            if (comma == std::string::npos)
                throw DataError("'" + path + "' line " + std::to_string(line_no) + ": too few fields");
            fields.push_back(line.substr(pos, comma - pos));
            pos = comma + 1;
        }
        fields.push_back(line.substr(pos));

        ResultRecord r;
        try {
            r.fingerprint = fields[0];
            r.seed = std::stoull(fields[1]);
            r.corruption_kind = fields[2];
            r.corruption_level = std::stod(fields[3]);
            r.sigma = std::stod(fields[4]);
            if (!fields[5].empty()) r.nmi = std::stod(fields[5]);
            if (!fields[6].empty()) r.accuracy = std::stod(fields[6]);
            r.rho = std::stod(fields[7]);
            r.solver_iterations = std::stoi(fields[8]);
            r.refine_iterations = std::stoi(fields[9]);
            r.seconds = std::stod(fields[10]);
            r.status = fields[11];
        } catch (const std::exception&) {
            throw DataError("'" + path + "' line " + std::to_string(line_no) + ": malformed record");
        }
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace hyperclust
