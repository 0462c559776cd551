#include "hyperclust/fusion.hpp"

#include "hyperclust/errors.hpp"

namespace hyperclust {

SymmetricMatrix fuse(const SymmetricMatrix& a, const SymmetricMatrix& b, const SymmetricMatrix& c,
                     const FusionWeights& w) {
    w.validate();
    if (a.dim() != b.dim() || a.dim() != c.dim())
        throw InvalidInputError("fuse: dimension mismatch");
    return SymmetricMatrix(w.alpha * a.values() + w.beta * b.values() + w.gamma() * c.values());
}

Ablation parse_ablation(const std::string& name) {
    if (name == "PKO") return Ablation::PKO;
    if (name == "PK") return Ablation::PK;
    if (name == "PO") return Ablation::PO;
    if (name == "P") return Ablation::P;
    throw InvalidParameterError("unknown ablation '" + name + "' (expected PKO, PK, PO or P)");
}

std::string ablation_name(Ablation ablation) {
    switch (ablation) {
        case Ablation::PKO: return "PKO";
        case Ablation::PK: return "PK";
        case Ablation::PO: return "PO";
        case Ablation::P: return "P";
    }
    return "?";
}

FusionWeights ablation_config(Ablation ablation, const FusionWeights& base) {
    base.validate();
    switch (ablation) {
        case Ablation::PKO: return base;
        case Ablation::PK: return FusionWeights{base.alpha, 1.0 - base.alpha};
        case Ablation::PO: return FusionWeights{base.alpha, 0.0};
        case Ablation::P: return FusionWeights{1.0, 0.0};
    }
    throw InvalidParameterError("ablation_config: unknown ablation");
}

}  // namespace hyperclust
