#include "hyperclust/overclustering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperclust/base_clusterers.hpp"
#include "hyperclust/errors.hpp"

namespace hyperclust {

CommunitySet build_communities(const SymmetricMatrix& a, const HyperParams& params,
                               CommunityMethods methods) {
    const int per_method = params.effective_communities();
    if (per_method < 1 || per_method > a.dim())
        throw InvalidParameterError("build_communities: community count must be in [1, N]");

    CommunitySet set;
    auto add_partition = [&set](const Partition& p, const std::string& tag) {
        for (int c = 0; c < p.clusters(); ++c) {
            auto members = p.cluster_members(c);
            if (members.empty()) continue;
            set.communities.push_back(std::move(members));
            set.method_tags.push_back(tag);
        }
    };
    if (methods != CommunityMethods::MulticlassOnly)
        add_partition(classic_spectral(a, per_method, params.seed), "classic");
    if (methods != CommunityMethods::ClassicOnly)
        add_partition(multiclass_spectral(a, per_method, params.seed + 1), "multiclass");
    return set;
}

namespace {

struct CommunityAffinity {
    // raw(i, l) = [i in community l] * (1 + mean similarity of i to its
    // neighbor set inside l); mu(l) in (0.5, 1] for non-singleton communities
    Eigen::MatrixXd raw;
    Eigen::VectorXd mu;
};

CommunityAffinity community_affinity(const SymmetricMatrix& a, const CommunitySet& comms,
                                     int neighbor_set_size) {
    if (neighbor_set_size < 1)
        throw InvalidParameterError("overclustering: neighbor set size must be >= 1");
    const int n = a.dim();
    const int total = comms.total();
    CommunityAffinity out;
    out.raw = Eigen::MatrixXd::Zero(n, total);
    out.mu.resize(total);

    std::vector<int> neighbors;
    for (int l = 0; l < total; ++l) {
        const auto& members = comms.communities[l];
        if (members.empty()) throw InvalidInputError("overclustering: empty community");
        double community_mean = 0.0;
        for (int i : members) {
            neighbors.assign(members.begin(), members.end());
            neighbors.erase(std::remove(neighbors.begin(), neighbors.end(), i), neighbors.end());
            const int take = std::min<int>(neighbor_set_size, static_cast<int>(neighbors.size()));
            double avg = 0.0;
            if (take > 0) {
                std::partial_sort(neighbors.begin(), neighbors.begin() + take, neighbors.end(),
                                  [&](int p, int q) {
                                      if (a(p, i) != a(q, i)) return a(p, i) > a(q, i);
                                      return p < q;
                                  });
                for (int t = 0; t < take; ++t) avg += a(neighbors[t], i);
                avg /= take;
            }
            out.raw(i, l) = 1.0 + avg;
            community_mean += avg;
        }
        community_mean /= static_cast<double>(members.size());
        out.mu(l) = 0.5 * (1.0 + community_mean);
    }
    return out;
}

}  // namespace

HypergraphIncidence overclustering_incidence(const SymmetricMatrix& a, const CommunitySet& comms,
                                             int neighbor_set_size) {
    const int n = a.dim();
    const CommunityAffinity aff = community_affinity(a, comms, neighbor_set_size);

    HypergraphIncidence h;
    h.vertices = n;
    h.hyperedges = comms.communities;
    h.edge_weights = aff.mu;
    h.incidence = Eigen::MatrixXd::Zero(n, comms.total());

    // per-vertex normalizer: sum over member communities of mu_l * raw(i, l)
    Eigen::VectorXd norm2 = Eigen::VectorXd::Zero(n);
    for (int l = 0; l < comms.total(); ++l)
        for (int i : comms.communities[l]) norm2(i) += aff.mu(l) * aff.raw(i, l);
    for (int i = 0; i < n; ++i)
        if (norm2(i) <= 0.0)
            throw DegenerateInputError("overclustering_incidence: vertex " + std::to_string(i) +
                                       " belongs to no community");

    for (int l = 0; l < comms.total(); ++l)
        for (int i : comms.communities[l])
            h.incidence(i, l) = std::sqrt(aff.raw(i, l)) / std::sqrt(norm2(i));
    return h;
}

Eigen::VectorXd over_feature_vector(const SymmetricMatrix& a, const CommunitySet& comms,
                                    int neighbor_set_size, int q) {
    const CommunityAffinity aff = community_affinity(a, comms, neighbor_set_size);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(comms.total());
    for (int l = 0; l < comms.total(); ++l)
        if (aff.raw(q, l) != 0.0) y(l) = std::sqrt(aff.mu(l) * aff.raw(q, l));
    return y;
}

SymmetricMatrix overclustering_similarity(const SymmetricMatrix& a, const CommunitySet& comms,
                                          int neighbor_set_size) {
    return overclustering_incidence(a, comms, neighbor_set_size).similarity();
}

}  // namespace hyperclust
