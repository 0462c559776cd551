#include "hyperclust/corruption.hpp"

#include <cmath>
#include <random>

#include "hyperclust/errors.hpp"

namespace hyperclust {

std::string corruption_kind_name(CorruptionKind kind) {
    return kind == CorruptionKind::AdditiveNoise ? "noise" : "zero";
}

CorruptionKind parse_corruption_kind(const std::string& name) {
    if (name == "noise") return CorruptionKind::AdditiveNoise;
    if (name == "zero") return CorruptionKind::OutlierZeroing;
    throw InvalidParameterError("unknown corruption kind '" + name + "' (expected noise or zero)");
}

void CorruptionSpec::validate() const {
    if (!std::isfinite(level) || level < 0)
        throw InvalidParameterError("corruption level must be nonnegative and finite");
    if (kind == CorruptionKind::AdditiveNoise && level > 2.0)
        throw InvalidParameterError("additive noise magnitude must be in [0, 2]");
    if (kind == CorruptionKind::OutlierZeroing && level > 1.0)
        throw InvalidParameterError("zeroing ratio must be in [0, 1]");
}

Dataset corrupt(const Dataset& dataset, const CorruptionSpec& spec) {
    spec.validate();
    if (spec.level == 0.0) return dataset;

    Eigen::MatrixXd features = dataset.features;
    std::mt19937_64 rng(spec.seed);
    if (spec.kind == CorruptionKind::AdditiveNoise) {
        const Eigen::RowVectorXd mean = features.colwise().mean();
        const Eigen::RowVectorXd std_dev =
            ((features.rowwise() - mean).array().square().colwise().mean()).sqrt();
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (Eigen::Index i = 0; i < features.rows(); ++i)
            for (Eigen::Index j = 0; j < features.cols(); ++j)
                features(i, j) += spec.level * std_dev(j) * gauss(rng);
    } else {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (Eigen::Index i = 0; i < features.rows(); ++i)
            for (Eigen::Index j = 0; j < features.cols(); ++j)
                if (unit(rng) < spec.level) features(i, j) = 0.0;
    }
    return Dataset(std::move(features), dataset.labels, dataset.ids);
}

}  // namespace hyperclust
