#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "hyperclust/partition.hpp"
#include "hyperclust/symmetric_matrix.hpp"

namespace hyperclust {

struct KmeansResult {
    Partition partition;
    double inertia = 0.0;
    int iterations = 0;
};

/// Lloyd iterations from k-means++ seeding until the assignment reaches a
/// fixpoint or 300 iterations. Deterministic given the seed; a cluster that
/// empties is reseeded to the point farthest from its assigned centroid.
KmeansResult kmeans(const Eigen::MatrixXd& points, int kappa, std::uint64_t seed);

/// Best of `restarts` independent k-means runs by inertia, with run seeds
/// derived from `seed`.
KmeansResult kmeans_restarts(const Eigen::MatrixXd& points, int kappa, std::uint64_t seed,
                             int restarts);

/// Spectral clustering on the degree-normalized similarity: top-kappa
/// eigenvectors of D^{-1/2} S D^{-1/2}, rows scaled to unit norm, k-means
/// on the embedded rows (10 restarts). Throws DegenerateInputError on a
/// zero-degree vertex.
Partition classic_spectral(const SymmetricMatrix& s, int kappa, std::uint64_t seed);

/// Multi-class spectral clustering: top-kappa generalized eigenvectors of
/// (S, D), rows scaled to unit norm, then rounded by discrete_refine.
Partition multiclass_spectral(const SymmetricMatrix& s, int kappa, std::uint64_t seed);

}  // namespace hyperclust
