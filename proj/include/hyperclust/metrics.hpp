#pragma once

#include <Eigen/Dense>
#include <vector>

namespace hyperclust {

/// Joint label-count table between two labelings of the same samples.
struct ContingencyTable {
    Eigen::MatrixXd counts;     // truth clusters x predicted clusters
    Eigen::VectorXd row_sums;   // per truth cluster
    Eigen::VectorXd col_sums;   // per predicted cluster
    double total = 0.0;

    static ContingencyTable from_labels(const std::vector<int>& truth,
                                        const std::vector<int>& predicted);
};

/// Normalized mutual information I(X,Y)/sqrt(H(X) H(Y)) in [0, 1], natural
/// logs, 0 log 0 := 0. When exactly one side is a single cluster the value
/// is 0 (zero-entropy limit); when both are, the labelings agree and it is 1.
double nmi(const std::vector<int>& predicted, const std::vector<int>& truth);

/// Fraction of samples covered by each predicted cluster's plurality
/// ground-truth label.
double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth);

}  // namespace hyperclust
