#include "hyperclust/trace_ratio.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <string>

#include "hyperclust/eigensolvers.hpp"
#include "hyperclust/errors.hpp"

namespace hyperclust {

namespace {

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& p) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(p);
    return qr.householderQ() * Eigen::MatrixXd::Identity(p.rows(), p.cols());
}

// Top-kappa eigenvectors of (Q + eps I)^{-1} S, via the Cholesky-reduced
// symmetric problem L^{-1} S L^{-T} with Q + eps I = L L^T.
Eigen::MatrixXd initial_subspace(const Eigen::MatrixXd& s, const Eigen::MatrixXd& q, int kappa,
                                 double epsilon) {
    const int n = static_cast<int>(s.rows());
    Eigen::MatrixXd reg = q;
    reg.diagonal().array() += epsilon;
    Eigen::LLT<Eigen::MatrixXd> llt(reg);
    if (llt.info() != Eigen::Success)
        throw NumericalError("newton_lanczos: Q + eps I is not positive definite");
    const Eigen::MatrixXd l = llt.matrixL();
    const auto lower = l.triangularView<Eigen::Lower>();

    EigenPairs pairs;
    bool have = false;
    if (use_lanczos(n, kappa)) {
        auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
            Eigen::VectorXd t = l.transpose().triangularView<Eigen::Upper>().solve(x);
            t = s * t;
            y = lower.solve(t);
        };
        // rough spectral scale from a few power steps; the starting subspace
        // does not need contract-level residuals
        Eigen::VectorXd v = Eigen::VectorXd::Ones(n).normalized(), w(n);
        double est = 1.0;
        for (int it = 0; it < 4; ++it) {
            apply(v, w);
            est = w.norm();
            if (est == 0.0) break;
            v = w / est;
        }
        have = lanczos_top_k(apply, n, kappa, std::max(est, 1e-30) * 10.0, pairs);
    }
    if (!have) {
        Eigen::MatrixXd x = lower.solve(s);
        Eigen::MatrixXd c = lower.solve(x.transpose().eval()).transpose();
        pairs = sym_eig_dense(0.5 * (c + c.transpose().eval()), kappa);
    }
    const Eigen::MatrixXd p = l.transpose().triangularView<Eigen::Upper>().solve(pairs.vectors);
    return orthonormalize(p);
}

Eigen::MatrixXd shifted_top_subspace(const Eigen::MatrixXd& s, const Eigen::MatrixXd& q, double rho,
                                     int kappa) {
    const Eigen::MatrixXd m = s - rho * q;
    if (use_lanczos(static_cast<int>(m.rows()), kappa)) {
        EigenPairs pairs;
        auto apply = [&m](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y.noalias() = m * x; };
        if (lanczos_top_k(apply, static_cast<int>(m.rows()), kappa, m.norm(), pairs))
            return pairs.vectors;
    }
    return sym_eig_dense(0.5 * (m + m.transpose().eval()), kappa).vectors;
}

}  // namespace

TraceRatioState newton_lanczos(const SymmetricMatrix& s, const SymmetricMatrix& q, int kappa,
                               double epsilon, double tol, int max_iter) {
    const int n = s.dim();
    if (q.dim() != n) throw InvalidInputError("newton_lanczos: dimension mismatch");
    if (kappa < 1 || kappa > n)
        throw InvalidParameterError("newton_lanczos: kappa must be in [1, N]");
    if (!(epsilon > 0)) throw InvalidParameterError("newton_lanczos: epsilon must be positive");

    const Eigen::MatrixXd& sv = s.values();
    const Eigen::MatrixXd& qv = q.values();

    auto ratio_at = [&](const Eigen::MatrixXd& p) {
        const double num = (p.transpose() * sv * p).trace();
        double den = (p.transpose() * qv * p).trace();
        if (den < epsilon) den += epsilon * kappa;  // tr(P^T (Q + eps I) P) for orthonormal P
        return num / den;
    };

    TraceRatioState state;
    Eigen::MatrixXd p = initial_subspace(sv, qv, kappa, epsilon);
    double rho = ratio_at(p);
    state.history.push_back(rho);

    int updates = 0;
    for (; updates < max_iter; ++updates) {
        Eigen::MatrixXd p_next = shifted_top_subspace(sv, qv, rho, kappa);
        const double rho_next = ratio_at(p_next);
        state.history.push_back(rho_next);
        p = std::move(p_next);
        const bool stationary = std::abs(rho_next - rho) <= tol * std::max(1.0, std::abs(rho));
        rho = rho_next;
        if (stationary) {
            state.converged = true;
            ++updates;
            break;
        }
    }
    state.candidate.P = std::move(p);
    state.candidate.rho = rho;
    state.candidate.iterations = updates;
    state.candidate.constraint = OrthoConstraint::Identity;
    return state;
}

}  // namespace hyperclust
