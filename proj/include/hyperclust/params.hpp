#pragma once

#include <cstdint>

namespace hyperclust {

/// Pairwise kernel selection. Only the Gaussian is implemented; the enum
/// leaves room for alternatives without committing to them.
enum class KernelKind { Gaussian };

struct KernelSpec {
    KernelKind kind = KernelKind::Gaussian;
    double sigma = 1.0;  // scale, > 0

    void validate() const;
};

/// Convex weights for combining the three similarity matrices.
/// The over-clustering component receives 1 - alpha - beta.
struct FusionWeights {
    double alpha = 0.4;
    double beta = 0.4;

    double gamma() const { return 1.0 - alpha - beta; }
    void validate() const;
};

/// Everything the end-to-end pipeline needs beyond the data itself.
/// sigma == 0 means "derive the default from the scale grid".
struct HyperParams {
    double sigma = 0.0;
    int k = 3;                        // kNN hyperedge neighbor count
    FusionWeights weights{};
    int kappa = 2;                    // desired cluster count
    int communities_per_method = 0;   // 0 means 2 * kappa
    int neighbor_set_size = 3;        // in-community neighbor set size
    double epsilon = 1e-6;            // regularizer for singular Laplacians
    std::uint64_t seed = 0;

    int effective_communities() const {
        return communities_per_method > 0 ? communities_per_method : 2 * kappa;
    }
    /// Validates ranges against a dataset of n samples.
    void validate(int n) const;
};

/// Deterministic per-purpose seed stream derived from a base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace hyperclust
