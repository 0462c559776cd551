#include "hyperclust/eigensolvers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hyperclust/errors.hpp"

namespace hyperclust {

namespace {

void fix_signs(Eigen::MatrixXd& vectors) {
    for (int j = 0; j < vectors.cols(); ++j) {
        int arg = 0;
        vectors.col(j).cwiseAbs().maxCoeff(&arg);
        if (vectors(arg, j) < 0) vectors.col(j) = -vectors.col(j);
    }
}

}  // namespace

EigenPairs sym_eig_dense(const Eigen::MatrixXd& m, int top_k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw NumericalError("sym_eig: dense eigendecomposition failed");
    const int n = static_cast<int>(m.rows());
    EigenPairs out;
    out.values.resize(top_k);
    out.vectors.resize(n, top_k);
    // Eigen returns ascending order; take the tail reversed.
    for (int j = 0; j < top_k; ++j) {
        out.values(j) = solver.eigenvalues()(n - 1 - j);
        out.vectors.col(j) = solver.eigenvectors().col(n - 1 - j);
    }
    fix_signs(out.vectors);
    return out;
}

bool lanczos_top_k(const std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>& apply,
                   int n, int top_k, double norm_estimate, EigenPairs& out, std::uint64_t seed) {
    const double tol = 1e-9 * std::max(norm_estimate, 1e-30);
    const int m_max = std::min(n, std::max(10 * top_k + 120, 240));

    Eigen::MatrixXd basis(n, m_max);
    Eigen::VectorXd alpha(m_max), beta(m_max);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = gauss(rng);
    v.normalize();
    basis.col(0) = v;

    Eigen::VectorXd w(n);
    int m = 0;
    double last_beta = 0.0;
    for (int j = 0; j < m_max; ++j) {
        apply(basis.col(j), w);
        alpha(j) = basis.col(j).dot(w);
        w -= alpha(j) * basis.col(j);
        if (j > 0) w -= last_beta * basis.col(j - 1);
        // full reorthogonalization, two passes
        for (int pass = 0; pass < 2; ++pass) {
            const auto proj = basis.leftCols(j + 1).transpose() * w;
            w -= basis.leftCols(j + 1) * proj;
        }
        m = j + 1;
        const double b = w.norm();
        beta(j) = b;
        last_beta = b;

        const bool invariant = b < tol;  // Krylov space exhausted
        const bool check_now = invariant || m == m_max || (m >= top_k + 2 && m % 10 == 0);
        if (check_now && m >= top_k) {
            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
            for (int i = 0; i < m; ++i) {
                t(i, i) = alpha(i);
                if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta(i);
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tsolver(t);
            bool converged = true;
            for (int r = 0; r < top_k; ++r) {
                // residual of Ritz pair r (largest eigenvalues at the tail)
                const double res = std::abs(b * tsolver.eigenvectors()(m - 1, m - 1 - r));
                if (res > tol) {
                    converged = false;
                    break;
                }
            }
            if (converged || invariant) {
                if (!converged && m < n) return false;  // exhausted without converging
                out.values.resize(top_k);
                out.vectors.resize(n, top_k);
                for (int r = 0; r < top_k; ++r) {
                    out.values(r) = tsolver.eigenvalues()(m - 1 - r);
                    out.vectors.col(r) =
                        basis.leftCols(m) * tsolver.eigenvectors().col(m - 1 - r);
                    out.vectors.col(r).normalize();
                }
                fix_signs(out.vectors);
                return true;
            }
        }
        if (invariant) return false;
        if (j + 1 < m_max) {
            basis.col(j + 1) = w / b;
        }
    }
    return false;
}

bool use_lanczos(int n, int top_k) { return n >= 500 && top_k <= n / 8; }

EigenPairs sym_eig(const SymmetricMatrix& m, int top_k) {
    if (top_k < 1 || top_k > m.dim())
        throw InvalidParameterError("sym_eig: top_k must be in [1, N]");
    const Eigen::MatrixXd& vals = m.values();
    if (use_lanczos(m.dim(), top_k)) {
        EigenPairs out;
        const double scale = vals.norm();
        auto apply = [&vals](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y.noalias() = vals * x; };
        if (lanczos_top_k(apply, m.dim(), top_k, scale, out)) return out;
    }
    return sym_eig_dense(vals, top_k);
}

EigenPairs sym_eig(const Eigen::MatrixXd& m, int top_k) {
    if (m.rows() != m.cols() || (m.array() != m.transpose().array()).any())
        throw InvalidInputError("sym_eig: matrix is not symmetric");
    return sym_eig(SymmetricMatrix(m), top_k);
}

PartitionCandidate generalized_eig(const SymmetricMatrix& s, const SymmetricMatrix& d_diag, int top_k) {
    const int n = s.dim();
    if (d_diag.dim() != n) throw InvalidInputError("generalized_eig: dimension mismatch");
    Eigen::VectorXd d = d_diag.values().diagonal();
    for (int i = 0; i < n; ++i)
        if (d(i) <= 0.0)
            throw DegenerateInputError("generalized_eig: nonpositive degree at vertex " +
                                       std::to_string(i));
    const Eigen::VectorXd inv_sqrt = d.cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd normalized =
        inv_sqrt.asDiagonal() * s.values() * inv_sqrt.asDiagonal();
    EigenPairs pairs = sym_eig(SymmetricMatrix(normalized), top_k);

    PartitionCandidate cand;
    cand.P = inv_sqrt.asDiagonal() * pairs.vectors;
    cand.constraint = OrthoConstraint::DegreeWeighted;
    cand.rho = (cand.P.transpose() * s.values() * cand.P).trace() / top_k;
    cand.iterations = 0;
    return cand;
}

}  // namespace hyperclust
