#pragma once

#include <Eigen/Dense>
#include <vector>

namespace hyperclust {

/// Hard assignment of N vertices to kappa clusters.
///
/// X is the N x kappa 0/1 indicator with exactly one 1 per row; labels is
/// the row argmax. Clusters may be empty (X^T X stays diagonal either way).
struct Partition {
    Eigen::MatrixXd X;
    std::vector<int> labels;

    static Partition from_labels(const std::vector<int>& labels, int kappa);
    static Partition from_indicator(const Eigen::MatrixXd& X);

    int size() const { return static_cast<int>(labels.size()); }
    int clusters() const { return static_cast<int>(X.cols()); }
    std::vector<int> cluster_members(int c) const;
};

/// How the columns of a continuous candidate are constrained.
enum class OrthoConstraint {
    Identity,        // P^T P = I
    DegreeWeighted,  // Z^T D Z = I
};

/// Continuous orthonormal N x kappa relaxation of a partition, with the
/// objective value it attains and the iteration count that produced it.
struct PartitionCandidate {
    Eigen::MatrixXd P;
    double rho = 0.0;
    int iterations = 0;
    OrthoConstraint constraint = OrthoConstraint::Identity;
};

}  // namespace hyperclust
