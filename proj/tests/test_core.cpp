#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "hyperclust/dataset.hpp"
#include "hyperclust/incidence.hpp"
#include "hyperclust/errors.hpp"
#include "hyperclust/partition.hpp"
#include "hyperclust/symmetric_matrix.hpp"

using namespace hyperclust;

namespace {

SymmetricMatrix random_similarity(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = unit(rng);
    m.diagonal().setOnes();
    return SymmetricMatrix(m);
}

}  // namespace

TEST_CASE("SymmetricMatrix symmetrizes exactly and rejects bad input") {
    Eigen::MatrixXd m(2, 2);
    m << 1.0, 0.3, 0.7, 1.0;
    const SymmetricMatrix s(m);
    CHECK(s(0, 1) == s(1, 0));
    CHECK(s(0, 1) == doctest::Approx(0.5).epsilon(1e-15));

    Eigen::MatrixXd bad(2, 2);
    bad << 1.0, std::nan(""), 0.0, 1.0;
    CHECK_THROWS_AS(SymmetricMatrix{bad}, InvalidInputError);
    CHECK_THROWS_AS(SymmetricMatrix(Eigen::MatrixXd::Zero(2, 3)), InvalidInputError);

    const SymmetricMatrix r = random_similarity(13, 7);
    CHECK((r.values() - r.values().transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("degree_matrix on identity and all-ones") {
    const SymmetricMatrix d1 = degree_matrix(SymmetricMatrix::identity(3));
    CHECK(d1.values().isApprox(Eigen::MatrixXd::Identity(3, 3)));

    const SymmetricMatrix ones(Eigen::MatrixXd::Ones(2, 2));
    const SymmetricMatrix d2 = degree_matrix(ones);
    Eigen::MatrixXd expected(2, 2);
    expected << 2, 0, 0, 2;
    CHECK(d2.values().isApprox(expected));
}

TEST_CASE("degree_matrix matches an independent per-element summation") {
    const SymmetricMatrix s = random_similarity(5, 42);
    const SymmetricMatrix d = degree_matrix(s);
    for (int i = 0; i < 5; ++i) {
        double sum = 0.0;
        for (int j = 0; j < 5; ++j) sum += s(i, j);
        CHECK(d(i, i) == doctest::Approx(sum).epsilon(1e-15));
        for (int j = 0; j < 5; ++j)
            if (j != i) CHECK(d(i, j) == 0.0);
    }
}

TEST_CASE("laplacian basics") {
    CHECK(laplacian(SymmetricMatrix::identity(3)).values().isZero(0));

    const SymmetricMatrix ones(Eigen::MatrixXd::Ones(2, 2));
    Eigen::MatrixXd expected(2, 2);
    expected << 1, -1, -1, 1;
    CHECK(laplacian(ones).values().isApprox(expected));
}

TEST_CASE("laplacian rows sum to zero and the matrix is positive semidefinite") {
    const SymmetricMatrix s = random_similarity(12, 3);
    const SymmetricMatrix q = laplacian(s);
    CHECK((q.values() * Eigen::VectorXd::Ones(12)).cwiseAbs().maxCoeff() < 1e-10);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(q.values());
    CHECK(solver.eigenvalues().minCoeff() >= -1e-10);
}

TEST_CASE("degree_matrix and laplacian are linear in S") {
    const SymmetricMatrix s1 = random_similarity(8, 11);
    const SymmetricMatrix s2 = random_similarity(8, 12);
    const double a = 0.7, b = 1.9;
    const SymmetricMatrix mix(a * s1.values() + b * s2.values());
    const Eigen::MatrixXd lhs = laplacian(mix).values();
    const Eigen::MatrixXd rhs = a * laplacian(s1).values() + b * laplacian(s2).values();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Dataset validation") {
    Eigen::MatrixXd one_row(1, 2);
    one_row << 1, 2;
    CHECK_THROWS_AS(Dataset{one_row}, InvalidInputError);

    Eigen::MatrixXd ok(3, 2);
    ok << 1, 2, 3, 4, 5, 6;
    CHECK(Dataset(ok).size() == 3);
    CHECK(Dataset(ok).num_classes() == 0);

    CHECK_THROWS_AS(Dataset(ok, std::vector<int>{0, 1}), InvalidInputError);
    CHECK_THROWS_AS(Dataset(ok, std::vector<int>{0, 0, 2}), InvalidInputError);  // class 1 missing
    CHECK_THROWS_AS(Dataset(ok, std::vector<int>{0, -1, 1}), InvalidInputError);
    CHECK(Dataset(ok, std::vector<int>{1, 0, 1}).num_classes() == 2);

    Eigen::MatrixXd inf_row = ok;
    inf_row(1, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Dataset{inf_row}, InvalidInputError);
}

TEST_CASE("Partition construction and validation") {
    const Partition p = Partition::from_labels({0, 2, 1, 0}, 3);
    CHECK(p.X.rows() == 4);
    CHECK(p.X.cols() == 3);
    CHECK((p.X * Eigen::VectorXd::Ones(3)).isApprox(Eigen::VectorXd::Ones(4)));
    // X^T X diagonal with cluster sizes
    const Eigen::MatrixXd gram = p.X.transpose() * p.X;
    CHECK(gram(0, 0) == 2.0);
    CHECK(gram(1, 1) == 1.0);
    CHECK((gram - Eigen::MatrixXd(gram.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
    CHECK(p.cluster_members(0) == std::vector<int>{0, 3});

    CHECK_THROWS_AS(Partition::from_labels({0, 3}, 3), InvalidInputError);

    Eigen::MatrixXd two_ones = Eigen::MatrixXd::Zero(2, 2);
    two_ones(0, 0) = two_ones(0, 1) = 1.0;
    two_ones(1, 0) = 1.0;
    CHECK_THROWS_AS(Partition::from_indicator(two_ones), InvalidInputError);

    Eigen::MatrixXd frac = Eigen::MatrixXd::Zero(2, 2);
    frac(0, 0) = 0.5;
    frac(0, 1) = 0.5;
    frac(1, 0) = 1.0;
    CHECK_THROWS_AS(Partition::from_indicator(frac), InvalidInputError);
}

TEST_CASE("HypergraphIncidence validate flags stray entries") {
    HypergraphIncidence h;
    h.vertices = 3;
    h.hyperedges = {{0, 1}};
    h.incidence = Eigen::MatrixXd::Zero(3, 1);
    h.incidence(0, 0) = 1.0;
    h.incidence(2, 0) = 0.5;  // not a member
    h.edge_weights = Eigen::VectorXd::Ones(1);
    CHECK_THROWS_AS(h.validate(), InvalidInputError);
    h.incidence(2, 0) = 0.0;
    CHECK_NOTHROW(h.validate());
}
