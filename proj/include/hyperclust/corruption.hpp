#pragma once

#include <cstdint>
#include <string>

#include "hyperclust/dataset.hpp"

namespace hyperclust {

enum class CorruptionKind { AdditiveNoise, OutlierZeroing };

std::string corruption_kind_name(CorruptionKind kind);
CorruptionKind parse_corruption_kind(const std::string& name);

/// A reproducible feature corruption. Additive noise scales per-feature
/// Gaussian perturbations by `level` times each feature's standard
/// deviation; outlier zeroing zeroes each feature element independently
/// with probability `level`.
struct CorruptionSpec {
    CorruptionKind kind = CorruptionKind::AdditiveNoise;
    double level = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Applies the corruption to the features; labels and ids pass through.
/// Level 0 returns the dataset unchanged bit-for-bit; equal seeds give
/// bitwise-identical results.
Dataset corrupt(const Dataset& dataset, const CorruptionSpec& spec);

}  // namespace hyperclust
