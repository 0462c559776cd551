#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hyperclust/dataset.hpp"
#include "hyperclust/incidence.hpp"
#include "hyperclust/params.hpp"
#include "hyperclust/symmetric_matrix.hpp"

namespace hyperclust {

/// exp(-||zi - zj||^2 / (2 sigma^2)); 1 iff the vectors coincide.
/// Values below 1e-300 are clamped to zero.
double gaussian_kernel(const Eigen::VectorXd& zi, const Eigen::VectorXd& zj, double sigma);

/// Candidate kernel scales: {lambda * 0.2 * rho_bar : lambda = 1..steps},
/// where rho_bar is the mean over samples of the mean distance to the
/// other samples. Throws DegenerateInputError when all samples coincide.
std::vector<double> sigma_grid(const Dataset& dataset, int steps = 15);

/// Default scale when the caller fixes none: the first grid value, 0.2 * rho_bar.
double default_sigma(const Dataset& dataset);

/// Full kernel matrix A with unit diagonal. The pairwise-hypergraph
/// similarity equals A itself, so this is also that similarity.
SymmetricMatrix pairwise_similarity(const Dataset& dataset, const KernelSpec& kernel);

/// One binary hyperedge per unordered vertex pair, weighted by the kernel
/// value of the pair. similarity() of the result reproduces A off-diagonal
/// exactly.
HypergraphIncidence pairwise_incidence(const SymmetricMatrix& a);

}  // namespace hyperclust
