#pragma once

#include <Eigen/Dense>

namespace hyperclust {

/// Dense N x N symmetric matrix with exact element-wise symmetry.
///
/// Construction averages the input with its transpose, so values(i,j) and
/// values(j,i) are the same IEEE double, and rejects non-finite entries.
/// Similarity matrices, degree matrices and graph Laplacians all live here.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(Eigen::MatrixXd values);

    static SymmetricMatrix identity(int n);
    static SymmetricMatrix zero(int n);

    int dim() const { return static_cast<int>(values_.rows()); }
    double operator()(int i, int j) const { return values_(i, j); }
    const Eigen::MatrixXd& values() const { return values_; }

private:
    Eigen::MatrixXd values_;
};

/// Diagonal matrix of row sums of S.
SymmetricMatrix degree_matrix(const SymmetricMatrix& s);

/// Graph Laplacian degree_matrix(S) - S. Rows sum to zero.
SymmetricMatrix laplacian(const SymmetricMatrix& s);

}  // namespace hyperclust
