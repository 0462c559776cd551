#include "hyperclust/params.hpp"

#include <cmath>
#include <string>

#include "hyperclust/errors.hpp"

namespace hyperclust {

void KernelSpec::validate() const {
    if (!(sigma > 0) || !std::isfinite(sigma))
        throw InvalidParameterError("kernel scale must be positive and finite, got " +
                                    std::to_string(sigma));
}

void FusionWeights::validate() const {
    if (alpha < 0 || beta < 0 || alpha + beta > 1.0)
        throw InvalidParameterError("fusion weights need alpha, beta >= 0 and alpha + beta <= 1, got (" +
                                    std::to_string(alpha) + ", " + std::to_string(beta) + ")");
}

void HyperParams::validate(int n) const {
    weights.validate();
    if (sigma != 0.0) KernelSpec{KernelKind::Gaussian, sigma}.validate();
    if (k < 1 || k >= n)
        throw InvalidParameterError("kNN size k must satisfy 1 <= k < N, got k=" + std::to_string(k) +
                                    ", N=" + std::to_string(n));
    if (kappa < 2 || kappa > n)
        throw InvalidParameterError("cluster count must satisfy 2 <= kappa <= N, got kappa=" +
                                    std::to_string(kappa) + ", N=" + std::to_string(n));
    if (neighbor_set_size < 1)
        throw InvalidParameterError("neighbor set size must be >= 1");
    if (communities_per_method < 0 || effective_communities() > n)
        throw InvalidParameterError("community count per method must be in [1, N]");
    if (!(epsilon > 0))
        throw InvalidParameterError("epsilon must be positive");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 over seed ^ golden-ratio-scaled stream index
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace hyperclust
