#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>

#include "hyperclust/clusterer.hpp"
#include "hyperclust/csv_io.hpp"
#include "hyperclust/errors.hpp"
#include "hyperclust/pairwise.hpp"
#include "hyperclust/pipeline.hpp"
#include "hyperclust/synth.hpp"

using namespace hyperclust;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("hyperclust_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

// wall-clock column varies between reruns; blank it before comparing
std::string normalize_seconds(const std::string& csv) {
    std::string out;
    std::istringstream in(csv);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!first) {
            // seconds is the 11th comma-separated field
            size_t pos = 0;
            for (int f = 0; f < 10 && pos != std::string::npos; ++f) pos = line.find(',', pos) + 1;
            const size_t end = line.find(',', pos);
            if (pos != std::string::npos && end != std::string::npos)
                line = line.substr(0, pos) + "T" + line.substr(end);
        }
        first = false;
        out += line + "\n";
    }
    return out;
}

ExperimentConfig blob_config(int kappa = 2) {
    ExperimentConfig config;
    config.synth = SynthSpec{kappa, 8, 3, 8.0, 5};
    config.params.kappa = kappa;
    config.seeds = {1, 2};
    config.workers = 1;
    return config;
}

}  // namespace

TEST_CASE("load_csv labeled, unlabeled, header handling") {
    const auto dir = temp_dir("csv");
    write_file(dir / "labeled.csv", "a,b,label\n1,2,cat\n3,4,dog\n5,6,cat\n");
    const Dataset labeled = load_csv((dir / "labeled.csv").string());
    CHECK(labeled.size() == 3);
    CHECK(labeled.dim() == 2);
    CHECK(labeled.num_classes() == 2);
    CHECK(*labeled.labels == std::vector<int>{0, 1, 0});

    write_file(dir / "plain.csv", "1,2\n3,4\n");
    const Dataset plain = load_csv((dir / "plain.csv").string());
    CHECK_FALSE(plain.labels.has_value());
    CHECK(plain.features(1, 1) == 4.0);

    // header without a label marker: all columns are features
    write_file(dir / "headered.csv", "x,y\n1,2\n3,4\n");
    CHECK(load_csv((dir / "headered.csv").string()).dim() == 2);
}

TEST_CASE("load_csv error reporting carries line numbers") {
    const auto dir = temp_dir("csv_err");
    write_file(dir / "empty.csv", "a,b,label\n");
    CHECK_THROWS_AS(load_csv((dir / "empty.csv").string()), DataError);

    write_file(dir / "ragged.csv", "1,2\n3\n");
    CHECK_THROWS_WITH_AS(load_csv((dir / "ragged.csv").string()), doctest::Contains("line 2"),
                         DataError);

    write_file(dir / "text.csv", "1,2\n3,oops\n");
    CHECK_THROWS_WITH_AS(load_csv((dir / "text.csv").string()), doctest::Contains("line 2"),
                         DataError);

    CHECK_THROWS_AS(load_csv((dir / "missing.csv").string()), DataError);
}

TEST_CASE("load_csv reads the bundled reference dataset") {
    const Dataset iris = load_csv(std::string(HYPERCLUST_DATA_DIR) + "/iris.csv");
    CHECK(iris.size() == 150);
    CHECK(iris.dim() == 4);
    CHECK(iris.num_classes() == 3);
}

TEST_CASE("save_csv and load_csv round-trip") {
    const auto dir = temp_dir("csv_rt");
    const Dataset blobs = synth_blobs(2, 6, 3, 5.0, 77);
    save_csv(blobs, (dir / "blobs.csv").string());
    const Dataset back = load_csv((dir / "blobs.csv").string());
    CHECK((back.features.array() == blobs.features.array()).all());
    CHECK(*back.labels == *blobs.labels);
}

TEST_CASE("synth_blobs contract") {
    const Dataset single = synth_blobs(1, 4, 2, 3.0, 1);
    CHECK(single.num_classes() == 1);

    const Dataset a = synth_blobs(3, 7, 4, 6.0, 9);
    const Dataset b = synth_blobs(3, 7, 4, 6.0, 9);
    CHECK((a.features.array() == b.features.array()).all());

    // separation far beyond the unit spread forces a perfect pipeline run
    ExperimentConfig config = blob_config(3);
    config.synth = SynthSpec{3, 10, 4, 40.0, 3};
    config.params.kappa = 3;
    const auto records = run_pipeline(config);
    for (const auto& r : records) {
        REQUIRE(r.status.substr(0, 2) == "ok");
        CHECK(*r.accuracy == doctest::Approx(1.0));
    }
}

TEST_CASE("run_pipeline determinism and level-zero equivalence") {
    ExperimentConfig config = blob_config();
    config.corruption = {{CorruptionKind::AdditiveNoise, 0.0},
                         {CorruptionKind::AdditiveNoise, 0.6}};
    const Dataset data = synth_blobs(2, 8, 3, 8.0, 5);

    const auto once = run_pipeline(data, config);
    const auto twice = run_pipeline(data, config);
    REQUIRE(once.size() == 4);
    for (size_t i = 0; i < once.size(); ++i) {
        CHECK(once[i].nmi == twice[i].nmi);
        CHECK(once[i].rho == twice[i].rho);
        CHECK(once[i].sigma == twice[i].sigma);
    }

    // a level-0 record equals the clean run bit for bit under the same seed
    ExperimentConfig clean = config;
    clean.corruption.clear();
    const auto clean_records = run_pipeline(data, clean);
    CHECK(clean_records[0].rho == once[0].rho);
    CHECK(clean_records[0].nmi == once[0].nmi);
    CHECK(clean_records[0].sigma == once[0].sigma);

    // concurrent execution returns the same records in the same order
    ExperimentConfig parallel = config;
    parallel.workers = 2;
    const auto concurrent = run_pipeline(data, parallel);
    for (size_t i = 0; i < once.size(); ++i) {
        CHECK(concurrent[i].seed == once[i].seed);
        CHECK(concurrent[i].rho == once[i].rho);
    }
}

TEST_CASE("pairwise-only ablation reproduces clustering the kernel matrix directly") {
    const Dataset data = synth_blobs(2, 9, 3, 7.0, 21);
    ExperimentConfig config = blob_config();
    config.ablation = Ablation::P;
    const auto outcome = run_cell(data, config, 4, CorruptionKind::AdditiveNoise, 0.0);
    REQUIRE(outcome.partition.has_value());

    const double sigma = outcome.record.sigma;
    const SymmetricMatrix a = pairwise_similarity(data, KernelSpec{KernelKind::Gaussian, sigma});
    HyperParams params = config.params;
    params.sigma = sigma;
    params.seed = 4;
    const ClusterResult direct = cluster(a, 2, params, Criterion::Dhpc);
    CHECK(direct.partition.labels == outcome.partition->labels);
    CHECK(direct.rho == outcome.record.rho);
}

TEST_CASE("a failing cell is recorded without touching its neighbors") {
    ExperimentConfig config = blob_config();
    // zeroing everything makes all samples identical, so the scale grid degenerates
    config.corruption = {{CorruptionKind::OutlierZeroing, 0.0},
                         {CorruptionKind::OutlierZeroing, 1.0}};
    const auto records = run_pipeline(config);
    REQUIRE(records.size() == 4);
    CHECK(records[0].status.substr(0, 2) == "ok");
    CHECK(records[1].status.substr(0, 6) == "error:");
    CHECK(records[2].status.substr(0, 2) == "ok");
    CHECK(records[1].nmi.has_value() == false);

    ExperimentConfig clean = config;
    clean.corruption = {{CorruptionKind::OutlierZeroing, 0.0}};
    const auto clean_records = run_pipeline(clean);
    CHECK(clean_records[0].rho == records[0].rho);
}

TEST_CASE("emit_results writes the full file set and round-trips") {
    const auto dir = temp_dir("emit");
    ExperimentConfig config = blob_config();
    config.corruption = {{CorruptionKind::AdditiveNoise, 0.0},
                         {CorruptionKind::AdditiveNoise, 0.4},
                         {CorruptionKind::AdditiveNoise, 0.8},
                         {CorruptionKind::OutlierZeroing, 0.2}};
    config.seeds = {0, 1, 2};
    const auto records = run_pipeline(config);
    emit_results(records, dir.string());

    const auto parsed = parse_results_csv((dir / "results.csv").string());
    REQUIRE(parsed.size() == records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(parsed[i].fingerprint == records[i].fingerprint);
        CHECK(parsed[i].seed == records[i].seed);
        CHECK(parsed[i].corruption_kind == records[i].corruption_kind);
        CHECK(parsed[i].corruption_level == records[i].corruption_level);
        CHECK(parsed[i].sigma == records[i].sigma);
        CHECK(parsed[i].nmi == records[i].nmi);
        CHECK(parsed[i].accuracy == records[i].accuracy);
        CHECK(parsed[i].rho == records[i].rho);
        CHECK(parsed[i].seconds == records[i].seconds);
        CHECK(parsed[i].status == records[i].status);
    }

    // 4 grouped rows: one per configured corruption level
    const std::string summary = read_file(dir / "summary.csv");
    CHECK(std::count(summary.begin(), summary.end(), '\n') == 5);
    CHECK(read_file(dir / "series_nmi.csv").substr(0, 16) == "corruption_kind,");
    CHECK(std::filesystem::exists(dir / "series_accuracy.csv"));

    // single record: one row plus header
    const auto single_dir = temp_dir("emit_single");
    emit_results({records.front()}, single_dir.string());
    const std::string single = read_file(single_dir / "results.csv");
    CHECK(std::count(single.begin(), single.end(), '\n') == 2);
}

TEST_CASE("emit_results reruns are byte-identical apart from wall time") {
    const auto dir_a = temp_dir("emit_a");
    const auto dir_b = temp_dir("emit_b");
    ExperimentConfig config = blob_config();
    emit_results(run_pipeline(config), dir_a.string());
    emit_results(run_pipeline(config), dir_b.string());
    CHECK(normalize_seconds(read_file(dir_a / "results.csv")) ==
          normalize_seconds(read_file(dir_b / "results.csv")));
    CHECK(read_file(dir_a / "series_nmi.csv") == read_file(dir_b / "series_nmi.csv"));
    CHECK(read_file(dir_a / "series_accuracy.csv") == read_file(dir_b / "series_accuracy.csv"));
}

TEST_CASE("parse_config_file accepts the documented keys and rejects others") {
    const auto dir = temp_dir("config");
    write_file(dir / "exp.conf",
               "# comment\n"
               "synth = kappa:2, per:6, dim:3, sep:9.0, seed:4\n"
               "kappa = 2\n"
               "alpha = 0.3\n"
               "beta = 0.3\n"
               "criterion = nc\n"
               "sigma = grid\n"
               "k = 2\n"
               "seeds = 3, 4\n"
               "noise_levels = 0, 0.4\n"
               "workers = 1\n");
    const ExperimentConfig config = parse_config_file((dir / "exp.conf").string());
    CHECK(config.synth->per_cluster == 6);
    CHECK(config.params.kappa == 2);
    CHECK(config.params.weights.alpha == 0.3);
    CHECK(config.criterion == Criterion::Nc);
    CHECK(config.sigma_grid_search);
    CHECK(config.seeds == std::vector<std::uint64_t>{3, 4});
    REQUIRE(config.corruption.size() == 2);
    CHECK(config.corruption[1].second == 0.4);

    write_file(dir / "bad.conf", "synth = kappa:2\nkappa = 2\nwat = 1\n");
    CHECK_THROWS_WITH_AS(parse_config_file((dir / "bad.conf").string()),
                         doctest::Contains("unknown key"), InvalidParameterError);

    write_file(dir / "both.conf", "data = x.csv\nsynth = kappa:2\nkappa = 2\n");
    CHECK_THROWS_AS(parse_config_file((dir / "both.conf").string()), InvalidParameterError);
}

TEST_CASE("config fingerprints are stable and configuration-sensitive") {
    ExperimentConfig config = blob_config();
    const std::string fp = config_fingerprint(config);
    CHECK(fp == config_fingerprint(config));
    CHECK(fp.size() == 16);

    ExperimentConfig other = config;
    other.params.weights.alpha = 0.21;
    CHECK(config_fingerprint(other) != fp);
}
