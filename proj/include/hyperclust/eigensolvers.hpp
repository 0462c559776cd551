#pragma once

#include <Eigen/Dense>
#include <functional>

#include "hyperclust/partition.hpp"
#include "hyperclust/symmetric_matrix.hpp"

namespace hyperclust {

/// Eigenpairs sorted by descending eigenvalue; vectors are the columns.
struct EigenPairs {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

/// Top-k eigenpairs of a symmetric matrix.
///
/// Small problems use a full dense decomposition truncated to k; large ones
/// go through Lanczos with full reorthogonalization and fall back to the
/// dense path if the Ritz residuals do not converge. Either way the result
/// satisfies ||M v - lambda v|| <= 1e-8 ||M||_F per pair and orthonormality
/// within 1e-8. Each vector is flipped so its largest-magnitude entry is
/// positive.
EigenPairs sym_eig(const SymmetricMatrix& m, int top_k);

/// Overload that checks exact symmetry and throws InvalidInputError otherwise.
EigenPairs sym_eig(const Eigen::MatrixXd& m, int top_k);

/// Dense path only (full decomposition, truncate).
EigenPairs sym_eig_dense(const Eigen::MatrixXd& m, int top_k);

/// Lanczos with full reorthogonalization on an implicit operator.
/// `norm_estimate` scales the residual tolerance (pass ||M||_F).
/// Returns false if the top-k Ritz pairs did not reach the tolerance.
bool lanczos_top_k(const std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>& apply,
                   int n, int top_k, double norm_estimate, EigenPairs& out,
                   std::uint64_t seed = 12345);

/// Threshold policy shared by the auto paths: dense below, Lanczos above.
bool use_lanczos(int n, int top_k);

/// Top-k generalized eigenvectors of (S, D) for positive diagonal D,
/// computed as D^{-1/2} times eigenvectors of D^{-1/2} S D^{-1/2}.
/// The result satisfies Z^T D Z = I and carries rho = tr(Z^T S Z) / k.
PartitionCandidate generalized_eig(const SymmetricMatrix& s, const SymmetricMatrix& d_diag, int top_k);

}  // namespace hyperclust
