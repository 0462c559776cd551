#pragma once

#include <vector>

#include "hyperclust/partition.hpp"
#include "hyperclust/symmetric_matrix.hpp"

namespace hyperclust {

/// State of the trace-ratio maximization max tr(P^T S P) / tr(P^T Q P)
/// over orthonormal N x kappa matrices P.
struct TraceRatioState {
    PartitionCandidate candidate;   // P, final ratio, iteration count
    std::vector<double> history;    // ratio per iteration, non-decreasing
    bool converged = false;

    double rho() const { return candidate.rho; }
    const Eigen::MatrixXd& P() const { return candidate.P; }
};

/// Newton-type iteration for the trace ratio:
/// start from the top-kappa eigenvectors of (Q + eps I)^{-1} S
/// (orthonormalized), then alternate computing the ratio rho and replacing
/// P with the top-kappa eigenvectors of S - rho Q until the ratio is
/// stationary. The ratio denominator is regularized through Q + eps I
/// whenever it drops below eps.
///
/// Each iterate can only increase the ratio, so the history is monotone,
/// and at convergence the top-kappa eigenvalue sum of S - rho* Q vanishes.
/// If max_iter is hit first, the best state is returned with
/// converged == false rather than throwing.
TraceRatioState newton_lanczos(const SymmetricMatrix& s, const SymmetricMatrix& q, int kappa,
                               double epsilon = 1e-6, double tol = 1e-8, int max_iter = 100);

}  // namespace hyperclust
