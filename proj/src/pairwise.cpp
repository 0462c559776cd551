#include "hyperclust/pairwise.hpp"

#include <cmath>
#include <string>

#include "hyperclust/errors.hpp"

namespace hyperclust {

double gaussian_kernel(const Eigen::VectorXd& zi, const Eigen::VectorXd& zj, double sigma) {
    if (zi.size() != zj.size())
        throw InvalidInputError("gaussian_kernel: dimension mismatch, " + std::to_string(zi.size()) +
                                " vs " + std::to_string(zj.size()));
    KernelSpec{KernelKind::Gaussian, sigma}.validate();
    const double d2 = (zi - zj).squaredNorm();
    const double v = std::exp(-d2 / (2.0 * sigma * sigma));
    return v < 1e-300 ? 0.0 : v;
}

std::vector<double> sigma_grid(const Dataset& dataset, int steps) {
    if (steps < 1) throw InvalidParameterError("sigma_grid: steps must be >= 1");
    const int n = dataset.size();
    double rho_bar = 0.0;
    for (int i = 0; i < n; ++i) {
        double mean_dist = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            mean_dist += (dataset.features.row(i) - dataset.features.row(j)).norm();
        }
        rho_bar += mean_dist / (n - 1);
    }
    rho_bar /= n;
    if (rho_bar <= 0.0)
        throw DegenerateInputError("sigma_grid: all samples identical, scale is undefined");
    std::vector<double> grid(steps);
    for (int lambda = 1; lambda <= steps; ++lambda) grid[lambda - 1] = lambda * 0.2 * rho_bar;
    return grid;
}

double default_sigma(const Dataset& dataset) { return sigma_grid(dataset, 1)[0]; }

SymmetricMatrix pairwise_similarity(const Dataset& dataset, const KernelSpec& kernel) {
    kernel.validate();
    const int n = dataset.size();
    const double inv = 1.0 / (2.0 * kernel.sigma * kernel.sigma);
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const double d2 = (dataset.features.row(i) - dataset.features.row(j)).squaredNorm();
            double v = std::exp(-d2 * inv);
            if (v < 1e-300) v = 0.0;
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    return SymmetricMatrix(std::move(a));
}

HypergraphIncidence pairwise_incidence(const SymmetricMatrix& a) {
    const int n = a.dim();
    const int edges = n * (n - 1) / 2;
    HypergraphIncidence h;
    h.vertices = n;
    h.hyperedges.reserve(edges);
    h.incidence = Eigen::MatrixXd::Zero(n, edges);
    h.edge_weights.resize(edges);
    int l = 0;
    for (int m = 0; m < n; ++m) {
        for (int v = m + 1; v < n; ++v, ++l) {
            h.hyperedges.push_back({m, v});
            h.incidence(m, l) = 1.0;
            h.incidence(v, l) = 1.0;
            h.edge_weights(l) = a(m, v);
        }
    }
    return h;
}

}  // namespace hyperclust
