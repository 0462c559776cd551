#include "hyperclust/partition.hpp"

#include "hyperclust/errors.hpp"

namespace hyperclust {

Partition Partition::from_labels(const std::vector<int>& labels, int kappa) {
    if (labels.empty()) throw InvalidInputError("Partition: empty label vector");
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(static_cast<int>(labels.size()), kappa);
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0 || labels[i] >= kappa)
            throw InvalidInputError("Partition: label " + std::to_string(labels[i]) +
                                    " outside [0, " + std::to_string(kappa) + ")");
        x(static_cast<int>(i), labels[i]) = 1.0;
    }
    Partition p;
    p.X = std::move(x);
    p.labels = labels;
    return p;
}

Partition Partition::from_indicator(const Eigen::MatrixXd& X) {
    std::vector<int> labels(X.rows());
    for (int i = 0; i < X.rows(); ++i) {
        int ones = 0, where = -1;
        for (int j = 0; j < X.cols(); ++j) {
            const double v = X(i, j);
            if (v == 1.0) {
                ++ones;
                where = j;
            } else if (v != 0.0) {
                throw InvalidInputError("Partition: non-binary entry at row " + std::to_string(i));
            }
        }
        if (ones != 1)
            throw InvalidInputError("Partition: row " + std::to_string(i) +
                                    " has " + std::to_string(ones) + " assignments");
        labels[i] = where;
    }
    Partition p;
    p.X = X;
    p.labels = std::move(labels);
    return p;
}

std::vector<int> Partition::cluster_members(int c) const {
    std::vector<int> out;
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == c) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace hyperclust
