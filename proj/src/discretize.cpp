#include "hyperclust/discretize.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "hyperclust/errors.hpp"

namespace hyperclust {

Eigen::MatrixXd candidate_from(const Eigen::MatrixXd& p) {
    Eigen::MatrixXd x = p;
    for (int i = 0; i < x.rows(); ++i) {
        const double norm = x.row(i).norm();
        if (norm < 1e-12)
            throw DegenerateInputError("candidate_from: vertex " + std::to_string(i) +
                                       " has a zero candidate row");
        x.row(i) /= norm;
    }
    return x;
}

namespace {

// Rotation seed: pick kappa rows of xtilde that are maximally mutually
// orthogonal, starting from a seed-chosen row, then orthonormalize them.
Eigen::MatrixXd initial_rotation(const Eigen::MatrixXd& xtilde, std::uint64_t seed) {
    const int n = static_cast<int>(xtilde.rows());
    const int kappa = static_cast<int>(xtilde.cols());
    Eigen::MatrixXd r(kappa, kappa);
    std::mt19937_64 rng(seed);
    int row = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    r.col(0) = xtilde.row(row).transpose();
    Eigen::VectorXd overlap = Eigen::VectorXd::Zero(n);
    for (int j = 1; j < kappa; ++j) {
        overlap += (xtilde * r.col(j - 1)).cwiseAbs();
        overlap.minCoeff(&row);
        r.col(j) = xtilde.row(row).transpose();
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(r);
    return qr.householderQ() * Eigen::MatrixXd::Identity(kappa, kappa);
}

}  // namespace

namespace {

RefineResult refine_once(const Eigen::MatrixXd& xtilde, int max_iter, std::uint64_t seed) {
    const int n = static_cast<int>(xtilde.rows());
    const int kappa = static_cast<int>(xtilde.cols());

    Eigen::MatrixXd r = initial_rotation(xtilde, seed);
    RefineResult result;
    std::vector<int> labels(n, 0);
    double phi_prev = -std::numeric_limits<double>::infinity();

    for (int it = 0; it < max_iter; ++it) {
        // (a) hard assignment by rotated argmax
        Eigen::MatrixXd y = xtilde * r;
        std::vector<int> counts(kappa, 0);
        for (int i = 0; i < n; ++i) {
            int arg = 0;
            y.row(i).maxCoeff(&arg);
            labels[i] = arg;
            ++counts[arg];
        }
        // empty clusters steal the rows with the weakest assignment margin
        for (int c = 0; c < kappa; ++c) {
            while (counts[c] == 0) {
                int weakest = -1;
                double weakest_margin = std::numeric_limits<double>::infinity();
                for (int i = 0; i < n; ++i) {
                    if (counts[labels[i]] <= 1) continue;
                    const double margin = y(i, labels[i]);
                    if (margin < weakest_margin) {
                        weakest_margin = margin;
                        weakest = i;
                    }
                }
                if (weakest < 0) throw NumericalError("discrete_refine: cannot repair empty cluster");
                --counts[labels[weakest]];
                labels[weakest] = c;
                ++counts[c];
                y(weakest, c) = std::numeric_limits<double>::infinity();
            }
        }
        Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, kappa);
        for (int i = 0; i < n; ++i) x(i, labels[i]) = 1.0;

        // (b) Procrustes rotation maximizing tr(X^T Xtilde R)
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(x.transpose() * xtilde,
                                              Eigen::ComputeFullU | Eigen::ComputeFullV);
        const double phi = svd.singularValues().sum();
        result.phi_history.push_back(phi);
        result.phi = phi;
        result.iterations = it + 1;
        result.partition = Partition::from_labels(labels, kappa);
        if (std::abs(phi - phi_prev) < 1e-10) {
            result.converged = true;
            break;
        }
        phi_prev = phi;
        r = svd.matrixV() * svd.matrixU().transpose();
    }
    return result;
}

}  // namespace

RefineResult discrete_refine(const Eigen::MatrixXd& xtilde, int max_iter, std::uint64_t seed) {
    if (xtilde.rows() < 1 || xtilde.cols() < 1)
        throw InvalidInputError("discrete_refine: empty candidate");
    if (max_iter < 1) throw InvalidParameterError("discrete_refine: max_iter must be >= 1");
    return refine_once(xtilde, max_iter, seed);
}

}  // namespace hyperclust
