#include "hyperclust/incidence.hpp"

#include <cmath>

#include "hyperclust/errors.hpp"

namespace hyperclust {

void HypergraphIncidence::validate() const {
    if (incidence.rows() != vertices || incidence.cols() != edge_count())
        throw InvalidInputError("HypergraphIncidence: incidence shape mismatch");
    if (edge_weights.size() != edge_count())
        throw InvalidInputError("HypergraphIncidence: weight count mismatch");
    if (!incidence.allFinite() || !edge_weights.allFinite())
        throw InvalidInputError("HypergraphIncidence: non-finite entry");
    if ((incidence.array() < 0).any() || (edge_weights.array() < 0).any())
        throw InvalidInputError("HypergraphIncidence: negative entry");

    std::vector<char> member(static_cast<size_t>(vertices), 0);
    for (int l = 0; l < edge_count(); ++l) {
        std::fill(member.begin(), member.end(), 0);
        for (int v : hyperedges[l]) {
            if (v < 0 || v >= vertices)
                throw InvalidInputError("HypergraphIncidence: vertex index out of range");
            member[v] = 1;
        }
        for (int i = 0; i < vertices; ++i)
            if (!member[i] && incidence(i, l) != 0.0)
                throw InvalidInputError("HypergraphIncidence: nonzero incidence for non-member vertex " +
                                        std::to_string(i) + " in edge " + std::to_string(l));
    }
}

SymmetricMatrix HypergraphIncidence::similarity() const {
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(vertices, vertices);
    for (int l = 0; l < edge_count(); ++l) {
        const double w = edge_weights(l);
        const auto& members = hyperedges[l];
        for (int a : members) {
            const double ha = incidence(a, l);
            if (ha == 0.0) continue;
            for (int b : members) s(a, b) += w * ha * incidence(b, l);
        }
    }
    return SymmetricMatrix(std::move(s));
}

}  // namespace hyperclust
