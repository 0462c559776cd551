#pragma once

#include <string>
#include <vector>

#include "hyperclust/params.hpp"
#include "hyperclust/partition.hpp"
#include "hyperclust/symmetric_matrix.hpp"

namespace hyperclust {

enum class Criterion { Dhpc, Nc };

std::string criterion_name(Criterion c);
Criterion parse_criterion(const std::string& name);

/// Mean over clusters of intra-cluster similarity mass divided by cut mass.
/// A cluster with zero cut contributes an infinite term and raises the
/// disconnected flag instead of failing.
struct DhpcObjective {
    double value = 0.0;
    bool disconnected = false;
    std::vector<double> per_cluster;
};

DhpcObjective dhpc_objective(const Partition& x, const SymmetricMatrix& s, const SymmetricMatrix& q);

struct ClusterResult {
    Partition partition;
    double rho = 0.0;        // trace ratio (Dhpc) or relaxed objective (Nc)
    int solver_iterations = 0;
    int refine_iterations = 0;
    bool converged = true;
};

/// Partitions the similarity graph S into kappa clusters.
///
/// Dhpc: Laplacian Q = D - S, trace-ratio maximization by newton_lanczos,
/// row-normalized candidate, discrete refinement.
/// Nc: top-kappa generalized eigenvectors of (S, D), row-normalized,
/// discrete refinement.
ClusterResult cluster(const SymmetricMatrix& s, int kappa, const HyperParams& params,
                      Criterion criterion = Criterion::Dhpc);

}  // namespace hyperclust
