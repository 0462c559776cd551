#include <doctest.h>

#include <random>

#include "hyperclust/errors.hpp"
#include "hyperclust/fusion.hpp"

using namespace hyperclust;

namespace {

SymmetricMatrix unit_diag_random(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = unit(rng);
    m = 0.5 * (m + m.transpose().eval());
    m.diagonal().setOnes();
    return SymmetricMatrix(m);
}

}  // namespace

TEST_CASE("fuse weight degeneracies return the inputs exactly") {
    const SymmetricMatrix a = unit_diag_random(5, 1);
    const SymmetricMatrix b = unit_diag_random(5, 2);
    const SymmetricMatrix c = unit_diag_random(5, 3);

    CHECK((fuse(a, b, c, {1.0, 0.0}).values() - a.values()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((fuse(a, b, c, {0.0, 1.0}).values() - b.values()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((fuse(a, b, c, {0.0, 0.0}).values() - c.values()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fuse equals the direct affine combination element-wise") {
    const SymmetricMatrix a = unit_diag_random(7, 4);
    const SymmetricMatrix b = unit_diag_random(7, 5);
    const SymmetricMatrix c = unit_diag_random(7, 6);
    const SymmetricMatrix s = fuse(a, b, c, {0.4, 0.4});
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            CHECK(s(i, j) ==
                  doctest::Approx(0.4 * a(i, j) + 0.4 * b(i, j) + 0.2 * c(i, j)).epsilon(1e-15));
}

TEST_CASE("fuse of three equal inputs is the input; unit diagonal; exact symmetry") {
    const SymmetricMatrix a = unit_diag_random(6, 9);
    const SymmetricMatrix s = fuse(a, a, a, {0.3, 0.45});
    CHECK((s.values() - a.values()).cwiseAbs().maxCoeff() < 1e-15);

    const SymmetricMatrix mix = fuse(a, unit_diag_random(6, 10), unit_diag_random(6, 11), {0.25, 0.5});
    CHECK((mix.values().diagonal().array() - 1.0).abs().maxCoeff() < 1e-12);
    CHECK((mix.values() - mix.values().transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fuse validates weights and dimensions") {
    const SymmetricMatrix a = unit_diag_random(4, 1);
    CHECK_THROWS_AS(fuse(a, a, a, {0.8, 0.4}), InvalidParameterError);
    CHECK_THROWS_AS(fuse(a, a, a, {-0.1, 0.4}), InvalidParameterError);
    CHECK_THROWS_AS(fuse(a, a, unit_diag_random(5, 2), {0.4, 0.4}), InvalidInputError);
}

TEST_CASE("ablation_config weight algebra") {
    const FusionWeights pko = ablation_config(Ablation::PKO, {0.4, 0.4});
    CHECK(pko.alpha == 0.4);
    CHECK(pko.beta == 0.4);

    const FusionWeights p = ablation_config(Ablation::P);
    CHECK(p.alpha == 1.0);
    CHECK(p.beta == 0.0);
    CHECK(p.gamma() == 0.0);

    const FusionWeights pk = ablation_config(Ablation::PK, {0.4, 0.4});
    CHECK(pk.alpha == 0.4);
    CHECK(pk.beta == doctest::Approx(0.6));
    CHECK(pk.gamma() == doctest::Approx(0.0));

    const FusionWeights po = ablation_config(Ablation::PO, {0.4, 0.4});
    CHECK(po.alpha == 0.4);
    CHECK(po.beta == 0.0);
    CHECK(po.gamma() == doctest::Approx(0.6));

    CHECK(parse_ablation("PKO") == Ablation::PKO);
    CHECK_THROWS_AS(parse_ablation("PKX"), InvalidParameterError);
}
