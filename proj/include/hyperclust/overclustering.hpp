#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hyperclust/incidence.hpp"
#include "hyperclust/params.hpp"
#include "hyperclust/symmetric_matrix.hpp"

namespace hyperclust {

/// Vertex communities produced by one or more base clusterers. Communities
/// from a single method are disjoint and cover all vertices; communities
/// from different methods may overlap freely.
struct CommunitySet {
    std::vector<std::vector<int>> communities;
    std::vector<std::string> method_tags;  // one tag per community

    int total() const { return static_cast<int>(communities.size()); }
};

enum class CommunityMethods { Both, ClassicOnly, MulticlassOnly };

/// Runs the configured base clusterers on A with effective_communities()
/// clusters each (classic spectral gets params.seed, multi-class spectral
/// params.seed + 1) and concatenates their non-empty clusters.
CommunitySet build_communities(const SymmetricMatrix& a, const HyperParams& params,
                               CommunityMethods methods = CommunityMethods::Both);

/// Community incidence. A member vertex's raw affinity to a community is
/// 1 + the mean similarity to its neighbor_set_size most similar fellow
/// members (0 for a singleton community); rows are normalized so that
/// sum_l mu_l h(i, l)^2 == 1. The community weight mu_l averages the member
/// neighbor affinities and maps the result through x -> (1 + x) / 2.
HypergraphIncidence overclustering_incidence(const SymmetricMatrix& a, const CommunitySet& comms,
                                             int neighbor_set_size);

/// Per-vertex profile y_q over communities; the similarity below is the
/// cosine between two such profiles.
Eigen::VectorXd over_feature_vector(const SymmetricMatrix& a, const CommunitySet& comms,
                                    int neighbor_set_size, int q);

/// C = H * diag(mu) * H^T. Unit diagonal; entry (i, j) is zero exactly when
/// i and j share no community.
SymmetricMatrix overclustering_similarity(const SymmetricMatrix& a, const CommunitySet& comms,
                                          int neighbor_set_size);

}  // namespace hyperclust
