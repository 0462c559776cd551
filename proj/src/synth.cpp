#include "hyperclust/synth.hpp"

#include <cmath>
#include <random>

#include "hyperclust/errors.hpp"

namespace hyperclust {

Dataset synth_blobs(int kappa, int per_cluster, int dim, double separation, std::uint64_t seed) {
    if (kappa < 1 || per_cluster < 1 || dim < 1 || !(separation >= 0))
        throw InvalidParameterError("synth_blobs: parameters must be positive");
    if (static_cast<long long>(kappa) * per_cluster < 2)
        throw InvalidParameterError("synth_blobs: need at least 2 samples in total");

    const int n = kappa * per_cluster;
    Eigen::MatrixXd centers = Eigen::MatrixXd::Zero(kappa, dim);
    if (dim >= kappa) {
        // distinct axis coordinates put every center pair exactly `separation` apart
        for (int c = 0; c < kappa; ++c) centers(c, c) = separation / std::sqrt(2.0);
    } else {
        for (int c = 0; c < kappa; ++c) centers(c, 0) = c * separation;
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd features(n, dim);
    std::vector<int> labels(n);
    for (int c = 0; c < kappa; ++c) {
        for (int p = 0; p < per_cluster; ++p) {
            const int row = c * per_cluster + p;
            labels[row] = c;
            for (int j = 0; j < dim; ++j) features(row, j) = centers(c, j) + gauss(rng);
        }
    }
    return Dataset(std::move(features), std::move(labels));
}

}  // namespace hyperclust
