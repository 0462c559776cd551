#pragma once

#include <cstdint>

#include "hyperclust/dataset.hpp"

namespace hyperclust {

/// kappa isotropic unit-variance Gaussian blobs with labels from the
/// generating component. Centers are placed axis-aligned so that distinct
/// centers sit `separation` apart (falling back to a line when dim < kappa).
/// Bitwise reproducible for a fixed seed.
Dataset synth_blobs(int kappa, int per_cluster, int dim, double separation, std::uint64_t seed);

}  // namespace hyperclust
