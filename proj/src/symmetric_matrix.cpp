#include "hyperclust/symmetric_matrix.hpp"

#include <cmath>

#include "hyperclust/errors.hpp"

namespace hyperclust {

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd values) {
    if (values.rows() != values.cols())
        throw InvalidInputError("SymmetricMatrix: matrix must be square, got " +
                                std::to_string(values.rows()) + "x" + std::to_string(values.cols()));
    if (!values.allFinite())
        throw InvalidInputError("SymmetricMatrix: non-finite entry");
    // (m + m^T)/2 makes (i,j) and (j,i) bit-identical; IEEE addition commutes.
    values_ = 0.5 * (values + values.transpose().eval());
}

SymmetricMatrix SymmetricMatrix::identity(int n) {
    return SymmetricMatrix(Eigen::MatrixXd::Identity(n, n));
}

SymmetricMatrix SymmetricMatrix::zero(int n) {
    return SymmetricMatrix(Eigen::MatrixXd::Zero(n, n));
}

SymmetricMatrix degree_matrix(const SymmetricMatrix& s) {
    const Eigen::VectorXd row_sums = s.values().rowwise().sum();
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(s.dim(), s.dim());
    d.diagonal() = row_sums;
    return SymmetricMatrix(std::move(d));
}

SymmetricMatrix laplacian(const SymmetricMatrix& s) {
    return SymmetricMatrix(degree_matrix(s).values() - s.values());
}

}  // namespace hyperclust
