#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace hyperclust {

/// A set of feature vectors with optional ground-truth cluster labels.
///
/// Labels are dense 0-based indices; every index in [0, num_classes) occurs
/// at least once. Validation happens once at construction.
struct Dataset {
    Eigen::MatrixXd features;                        // N x d
    std::optional<std::vector<int>> labels;          // length N, values in [0, num_classes)
    std::optional<std::vector<std::string>> ids;     // length N

    Dataset(Eigen::MatrixXd features, std::optional<std::vector<int>> labels = std::nullopt,
            std::optional<std::vector<std::string>> ids = std::nullopt);

    int size() const { return static_cast<int>(features.rows()); }
    int dim() const { return static_cast<int>(features.cols()); }

    /// Number of distinct ground-truth clusters; 0 when unlabeled.
    int num_classes() const { return num_classes_; }

private:
    int num_classes_ = 0;
};

}  // namespace hyperclust
