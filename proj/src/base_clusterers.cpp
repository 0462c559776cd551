#include "hyperclust/base_clusterers.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "hyperclust/discretize.hpp"
#include "hyperclust/eigensolvers.hpp"
#include "hyperclust/errors.hpp"
#include "hyperclust/params.hpp"

namespace hyperclust {

namespace {

constexpr int kLloydCap = 300;

// greedy k-means++: sample a few d^2-weighted candidates per step and keep
// the one that shrinks the potential most
Eigen::MatrixXd kmeanspp_centroids(const Eigen::MatrixXd& points, int kappa, std::mt19937_64& rng) {
    const int n = static_cast<int>(points.rows());
    Eigen::MatrixXd centroids(kappa, points.cols());
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int local_trials = 2 + static_cast<int>(std::log(static_cast<double>(kappa)));

    int first = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    centroids.row(0) = points.row(first);
    Eigen::VectorXd min_d2 =
        (points.rowwise() - centroids.row(0)).rowwise().squaredNorm();
    Eigen::VectorXd candidate_d2(n), best_d2(n);
    for (int c = 1; c < kappa; ++c) {
        const double total = min_d2.sum();
        int best_pick = -1;
        double best_potential = std::numeric_limits<double>::infinity();
        for (int t = 0; t < local_trials; ++t) {
            int pick;
            if (total <= 0.0) {
                pick = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            } else {
                // inverse-CDF sample proportional to squared distance
                double target = unit(rng) * total, acc = 0.0;
                pick = n - 1;
                for (int i = 0; i < n; ++i) {
                    acc += min_d2(i);
                    if (acc >= target) {
                        pick = i;
                        break;
                    }
                }
            }
            candidate_d2 =
                min_d2.cwiseMin((points.rowwise() - points.row(pick)).rowwise().squaredNorm());
            const double potential = candidate_d2.sum();
            if (potential < best_potential) {
                best_potential = potential;
                best_pick = pick;
                best_d2 = candidate_d2;
            }
        }
        centroids.row(c) = points.row(best_pick);
        min_d2 = best_d2;
    }
    return centroids;
}

}  // namespace

KmeansResult kmeans(const Eigen::MatrixXd& points, int kappa, std::uint64_t seed) {
    const int n = static_cast<int>(points.rows());
    if (kappa < 1 || kappa > n)
        throw InvalidParameterError("kmeans: kappa must be in [1, N], got " + std::to_string(kappa));

    std::mt19937_64 rng(seed);
    Eigen::MatrixXd centroids = kmeanspp_centroids(points, kappa, rng);
    std::vector<int> labels(n, -1);
    Eigen::MatrixXd d2(n, kappa);

    int it = 0;
    for (; it < kLloydCap; ++it) {
        for (int c = 0; c < kappa; ++c)
            d2.col(c) = (points.rowwise() - centroids.row(c)).rowwise().squaredNorm();
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            int arg = 0;
            d2.row(i).minCoeff(&arg);
            if (arg != labels[i]) {
                labels[i] = arg;
                changed = true;
            }
        }
        if (!changed) break;

        std::vector<int> counts(kappa, 0);
        centroids.setZero();
        for (int i = 0; i < n; ++i) {
            centroids.row(labels[i]) += points.row(i);
            ++counts[labels[i]];
        }
        for (int c = 0; c < kappa; ++c) {
            if (counts[c] > 0) {
                centroids.row(c) /= counts[c];
            } else {
                // reseed an empty cluster to the point farthest from its centroid
                int far = 0;
                Eigen::VectorXd assigned_d2(n);
                for (int i = 0; i < n; ++i) assigned_d2(i) = d2(i, labels[i]);
                assigned_d2.maxCoeff(&far);
                centroids.row(c) = points.row(far);
                labels[far] = c;
                counts[c] = 1;
            }
        }
    }

    // assignment ties on duplicate points can leave a cluster empty at the
    // fixpoint; give any such cluster its farthest available point
    std::vector<int> counts(kappa, 0);
    for (int i = 0; i < n; ++i) ++counts[labels[i]];
    for (int c = 0; c < kappa; ++c) {
        if (counts[c] > 0) continue;
        int far = -1;
        double far_d2 = -1.0;
        for (int i = 0; i < n; ++i) {
            if (counts[labels[i]] <= 1) continue;
            const double dist = (points.row(i) - centroids.row(labels[i])).squaredNorm();
            if (dist > far_d2) {
                far_d2 = dist;
                far = i;
            }
        }
        if (far < 0) throw NumericalError("kmeans: cannot repair empty cluster");
        --counts[labels[far]];
        labels[far] = c;
        counts[c] = 1;
        centroids.row(c) = points.row(far);
    }

    KmeansResult result;
    result.partition = Partition::from_labels(labels, kappa);
    result.iterations = it;
    result.inertia = 0.0;
    for (int i = 0; i < n; ++i)
        result.inertia += (points.row(i) - centroids.row(labels[i])).squaredNorm();
    return result;
}

KmeansResult kmeans_restarts(const Eigen::MatrixXd& points, int kappa, std::uint64_t seed,
                             int restarts) {
    if (restarts < 1) throw InvalidParameterError("kmeans_restarts: restarts must be >= 1");
    KmeansResult best;
    double best_inertia = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        KmeansResult run = kmeans(points, kappa, derive_seed(seed, static_cast<std::uint64_t>(r)));
        if (run.inertia < best_inertia) {
            best_inertia = run.inertia;
            best = std::move(run);
        }
    }
    return best;
}

namespace {

Eigen::VectorXd checked_degrees(const SymmetricMatrix& s) {
    Eigen::VectorXd d = s.values().rowwise().sum();
    for (int i = 0; i < d.size(); ++i)
        if (d(i) <= 0.0)
            throw DegenerateInputError("spectral clustering: vertex " + std::to_string(i) +
                                       " has zero degree");
    return d;
}

constexpr int kSpectralKmeansRestarts = 10;

}  // namespace

Partition classic_spectral(const SymmetricMatrix& s, int kappa, std::uint64_t seed) {
    if (kappa < 1 || kappa > s.dim())
        throw InvalidParameterError("classic_spectral: kappa must be in [1, N]");
    const Eigen::VectorXd d = checked_degrees(s);
    const Eigen::VectorXd inv_sqrt = d.cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd normalized =
        inv_sqrt.asDiagonal() * s.values() * inv_sqrt.asDiagonal();
    EigenPairs pairs = sym_eig(SymmetricMatrix(normalized), kappa);

    Eigen::MatrixXd rows = pairs.vectors;
    for (int i = 0; i < rows.rows(); ++i) {
        const double norm = rows.row(i).norm();
        if (norm > 0) rows.row(i) /= norm;
    }
    return kmeans_restarts(rows, kappa, seed, kSpectralKmeansRestarts).partition;
}

Partition multiclass_spectral(const SymmetricMatrix& s, int kappa, std::uint64_t seed) {
    if (kappa < 1 || kappa > s.dim())
        throw InvalidParameterError("multiclass_spectral: kappa must be in [1, N]");
    const SymmetricMatrix d = degree_matrix(s);
    checked_degrees(s);
    PartitionCandidate z = generalized_eig(s, d, kappa);
    return discrete_refine(candidate_from(z.P), 100, seed).partition;
}

}  // namespace hyperclust
