#pragma once

#include <string>

#include "hyperclust/params.hpp"
#include "hyperclust/symmetric_matrix.hpp"

namespace hyperclust {

/// S = alpha A + beta B + (1 - alpha - beta) C.
SymmetricMatrix fuse(const SymmetricMatrix& a, const SymmetricMatrix& b, const SymmetricMatrix& c,
                     const FusionWeights& w);

/// Named similarity configurations: the full combination and its ablations.
enum class Ablation { PKO, PK, PO, P };

Ablation parse_ablation(const std::string& name);
std::string ablation_name(Ablation ablation);

/// Weights for an ablation, starting from `base` for the full configuration:
/// PKO keeps base, PK drops the over-clustering term (alpha, 1 - alpha),
/// PO drops the kNN term (alpha, 0), P is pairwise only (1, 0).
FusionWeights ablation_config(Ablation ablation, const FusionWeights& base = FusionWeights{});

}  // namespace hyperclust
