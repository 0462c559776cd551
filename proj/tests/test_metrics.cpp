#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <utility>

#include "hyperclust/corruption.hpp"
#include "hyperclust/errors.hpp"
#include "hyperclust/metrics.hpp"
#include "hyperclust/synth.hpp"

using namespace hyperclust;

namespace {

// straight-from-formula reference: joint distribution, entropies, ratio
double reference_nmi(const std::vector<int>& a, const std::vector<int>& b) {
    const double m = static_cast<double>(a.size());
    std::map<int, double> pa, pb;
    std::map<std::pair<int, int>, double> joint;
    for (size_t i = 0; i < a.size(); ++i) {
        pa[a[i]] += 1.0 / m;
        pb[b[i]] += 1.0 / m;
        joint[{a[i], b[i]}] += 1.0 / m;
    }
    if (pa.size() == 1 || pb.size() == 1) return pa.size() == 1 && pb.size() == 1 ? 1.0 : 0.0;
    double info = 0.0;
    for (const auto& [key, p] : joint)
        info += p * std::log(p / (pa[key.first] * pb[key.second]));
    double ha = 0.0, hb = 0.0;
    for (const auto& [_, p] : pa) ha -= p * std::log(p);
    for (const auto& [_, p] : pb) hb -= p * std::log(p);
    return info / std::sqrt(ha * hb);
}

std::vector<int> random_labels(int n, int k, std::mt19937_64& rng) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = static_cast<int>(rng() % k);
    return labels;
}

}  // namespace

TEST_CASE("nmi worked examples") {
    CHECK(nmi({0, 1, 2, 0}, {0, 1, 2, 0}) == doctest::Approx(1.0));
    // permuted relabeling
    CHECK(nmi({2, 0, 1, 2}, {0, 1, 2, 0}) == doctest::Approx(1.0));
    // independent labelings
    CHECK(nmi({0, 1, 0, 1}, {0, 0, 1, 1}) == doctest::Approx(0.0));
}

TEST_CASE("nmi degenerate single-cluster conventions") {
    CHECK(nmi({0, 0, 0}, {0, 1, 2}) == 0.0);
    CHECK(nmi({0, 1, 2}, {5, 5, 5}) == 0.0);
    CHECK(nmi({3, 3, 3}, {1, 1, 1}) == 1.0);
}

TEST_CASE("nmi symmetry and permutation invariance") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        const int n = 20 + static_cast<int>(rng() % 30);
        const auto a = random_labels(n, 2 + t % 4, rng);
        const auto b = random_labels(n, 2 + (t + 1) % 4, rng);
        const double value = nmi(a, b);
        CHECK(value == doctest::Approx(nmi(b, a)).epsilon(1e-12));
        CHECK(value >= 0.0);
        CHECK(value <= 1.0);

        // relabel a through a fixed permutation
        std::vector<int> relabeled(a.size());
        for (size_t i = 0; i < a.size(); ++i) relabeled[i] = (a[i] * 7 + 3) % 101;
        CHECK(nmi(relabeled, b) == doctest::Approx(value).epsilon(1e-12));
    }
}

TEST_CASE("nmi agrees with an independent formula implementation") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 200; ++t) {
        const int n = 5 + static_cast<int>(rng() % 40);
        const auto a = random_labels(n, 1 + static_cast<int>(rng() % 5), rng);
        const auto b = random_labels(n, 1 + static_cast<int>(rng() % 5), rng);
        CHECK(nmi(a, b) == doctest::Approx(reference_nmi(b, a)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(nmi({0, 1}, {0, 1, 2}), InvalidInputError);
    CHECK_THROWS_AS(nmi({}, {}), InvalidInputError);
}

TEST_CASE("accuracy worked examples") {
    CHECK(accuracy({0, 1, 0, 1}, {0, 1, 0, 1}) == doctest::Approx(1.0));
    // one predicted cluster over truth (0,0,1): plurality 2 of 3
    CHECK(accuracy({4, 4, 4}, {0, 0, 1}) == doctest::Approx(2.0 / 3.0));
    CHECK(accuracy({0, 0, 0, 1, 1, 1}, {0, 0, 1, 1, 2, 2}) == doctest::Approx(4.0 / 6.0));
}

TEST_CASE("accuracy invariances") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const int n = 30;
        const auto truth = random_labels(n, 3, rng);
        const auto pred = random_labels(n, 4, rng);
        const double value = accuracy(pred, truth);
        std::vector<int> relabeled(pred.size());
        for (size_t i = 0; i < pred.size(); ++i) relabeled[i] = 9 - pred[i];
        CHECK(accuracy(relabeled, truth) == doctest::Approx(value).epsilon(1e-15));
        CHECK(value >= 1.0 / 4.0);
        CHECK(value <= 1.0);
    }
}

TEST_CASE("corrupt level zero is the identity, bit for bit") {
    const Dataset blobs = synth_blobs(2, 10, 3, 4.0, 9);
    for (auto kind : {CorruptionKind::AdditiveNoise, CorruptionKind::OutlierZeroing}) {
        const Dataset same = corrupt(blobs, CorruptionSpec{kind, 0.0, 123});
        CHECK((same.features.array() == blobs.features.array()).all());
    }
}

TEST_CASE("corrupt zeroing ratio one wipes the features") {
    const Dataset blobs = synth_blobs(2, 5, 2, 4.0, 1);
    const Dataset zeroed = corrupt(blobs, CorruptionSpec{CorruptionKind::OutlierZeroing, 1.0, 3});
    CHECK(zeroed.features.isZero(0));
    CHECK(*zeroed.labels == *blobs.labels);
}

TEST_CASE("corrupt zeroing hits the configured fraction") {
    const Dataset big = synth_blobs(2, 500, 10, 4.0, 7);  // 10000 elements
    const Dataset zeroed = corrupt(big, CorruptionSpec{CorruptionKind::OutlierZeroing, 0.4, 11});
    const double fraction =
        static_cast<double>((zeroed.features.array() == 0.0).count()) / zeroed.features.size();
    CHECK(fraction == doctest::Approx(0.4).epsilon(0.05));
}

TEST_CASE("corrupt is reproducible and seed-sensitive") {
    const Dataset blobs = synth_blobs(3, 10, 4, 5.0, 2);
    const CorruptionSpec spec{CorruptionKind::AdditiveNoise, 0.8, 42};
    const Dataset a = corrupt(blobs, spec);
    const Dataset b = corrupt(blobs, spec);
    CHECK((a.features.array() == b.features.array()).all());

    const Dataset c = corrupt(blobs, CorruptionSpec{CorruptionKind::AdditiveNoise, 0.8, 43});
    CHECK_FALSE((a.features.array() == c.features.array()).all());
    CHECK(*a.labels == *blobs.labels);
}

TEST_CASE("corruption spec validation") {
    CHECK_THROWS_AS((CorruptionSpec{CorruptionKind::AdditiveNoise, 2.5, 0}.validate()),
                    InvalidParameterError);
    CHECK_THROWS_AS((CorruptionSpec{CorruptionKind::OutlierZeroing, 1.2, 0}.validate()),
                    InvalidParameterError);
    CHECK_THROWS_AS((CorruptionSpec{CorruptionKind::AdditiveNoise, -0.1, 0}.validate()),
                    InvalidParameterError);
    CHECK_NOTHROW((CorruptionSpec{CorruptionKind::AdditiveNoise, 2.0, 0}.validate()));
}
