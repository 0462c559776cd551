#include "hyperclust/dataset.hpp"

#include <algorithm>

#include "hyperclust/errors.hpp"

namespace hyperclust {

Dataset::Dataset(Eigen::MatrixXd features_in, std::optional<std::vector<int>> labels_in,
                 std::optional<std::vector<std::string>> ids_in)
    : features(std::move(features_in)), labels(std::move(labels_in)), ids(std::move(ids_in)) {
    const auto n = features.rows();
    if (n < 2) throw InvalidInputError("Dataset: need at least 2 samples, got " + std::to_string(n));
    if (features.cols() < 1) throw InvalidInputError("Dataset: need at least 1 feature");
    if (!features.allFinite()) throw InvalidInputError("Dataset: non-finite feature value");
    if (labels) {
        if (static_cast<Eigen::Index>(labels->size()) != n)
            throw InvalidInputError("Dataset: label count " + std::to_string(labels->size()) +
                                    " does not match sample count " + std::to_string(n));
        const int max_label = *std::max_element(labels->begin(), labels->end());
        const int min_label = *std::min_element(labels->begin(), labels->end());
        if (min_label < 0) throw InvalidInputError("Dataset: negative label");
        num_classes_ = max_label + 1;
        std::vector<bool> seen(num_classes_, false);
        for (int l : *labels) seen[l] = true;
        for (int c = 0; c < num_classes_; ++c)
            if (!seen[c])
                throw InvalidInputError("Dataset: cluster index " + std::to_string(c) +
                                        " has no members");
    }
    if (ids && static_cast<Eigen::Index>(ids->size()) != n)
        throw InvalidInputError("Dataset: id count does not match sample count");
}

}  // namespace hyperclust
