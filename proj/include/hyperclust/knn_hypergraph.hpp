#pragma once

#include <Eigen/Dense>

#include "hyperclust/incidence.hpp"
#include "hyperclust/symmetric_matrix.hpp"

namespace hyperclust {

/// One hyperedge per vertex: the vertex itself plus its k most similar
/// neighbors under A (ties broken by ascending index). Edge weight is the
/// mean similarity between the center vertex and all edge members,
/// including the center's own unit self-similarity. Incidence holds the
/// raw 0/1 membership; soft values come from knn_incidence.
HypergraphIncidence knn_hyperedges(const SymmetricMatrix& a, int k);

/// Soft membership h(i, l) = a(l, i) / sqrt(sum_t w_t * [i in e_t] * a(t, i)^2)
/// for member vertices, so that sum_l w_l h(i, l)^2 == 1 per vertex.
HypergraphIncidence knn_incidence(const SymmetricMatrix& a, const HypergraphIncidence& edges);

/// Per-vertex profile x_m with l-th entry a(l, m) * sqrt(w_l) for member
/// edges; the similarity below is the cosine between two such profiles.
Eigen::VectorXd knn_feature_vector(const SymmetricMatrix& a, const HypergraphIncidence& edges, int m);

/// B = H * diag(w) * H^T for the soft incidence. Unit diagonal, entries in [0, 1].
SymmetricMatrix knn_similarity(const SymmetricMatrix& a, int k);

}  // namespace hyperclust
