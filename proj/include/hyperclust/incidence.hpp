#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hyperclust/symmetric_matrix.hpp"

namespace hyperclust {

/// Vertex-by-hyperedge incidence with one nonnegative weight per hyperedge.
///
/// incidence(i, l) is zero whenever vertex i is not a member of hyperedge l.
struct HypergraphIncidence {
    int vertices = 0;
    std::vector<std::vector<int>> hyperedges;  // member vertex indices per edge
    Eigen::MatrixXd incidence;                 // vertices x |hyperedges|
    Eigen::VectorXd edge_weights;              // |hyperedges|

    int edge_count() const { return static_cast<int>(hyperedges.size()); }

    /// Throws InvalidInputError if any structural invariant is broken.
    void validate() const;

    /// H * diag(w) * H^T, accumulated per hyperedge over member pairs.
    SymmetricMatrix similarity() const;
};

}  // namespace hyperclust
