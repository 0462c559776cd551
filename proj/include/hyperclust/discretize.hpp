#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "hyperclust/partition.hpp"

namespace hyperclust {

/// Scales every row of P to unit Euclidean norm (the inverse transform of
/// an indicator-derived orthonormal candidate). Throws DegenerateInputError
/// naming the vertex whose row norm falls below 1e-12.
Eigen::MatrixXd candidate_from(const Eigen::MatrixXd& p);

struct RefineResult {
    Partition partition;
    double phi = 0.0;                // alignment objective, sum of singular values
    int iterations = 0;
    bool converged = false;
    std::vector<double> phi_history;
};

/// Rounds a row-normalized continuous candidate to a hard partition by
/// alternating (a) row-wise argmax of Xtilde * R and (b) the orthogonal
/// Procrustes rotation R from the SVD of X^T Xtilde. The rotation is seeded
/// from kappa maximally mutually-orthogonal rows of Xtilde (first row picked
/// by the seed). Clusters that come out empty steal the weakest-margin rows.
/// phi never decreases; hitting max_iter returns the best state with
/// converged == false.
RefineResult discrete_refine(const Eigen::MatrixXd& xtilde, int max_iter = 100,
                             std::uint64_t seed = 0);

}  // namespace hyperclust
