#include "hyperclust/knn_hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hyperclust/errors.hpp"

namespace hyperclust {

HypergraphIncidence knn_hyperedges(const SymmetricMatrix& a, int k) {
    const int n = a.dim();
    if (k < 1 || k >= n)
        throw InvalidParameterError("knn_hyperedges: need 1 <= k < N, got k=" + std::to_string(k) +
                                    ", N=" + std::to_string(n));
    HypergraphIncidence h;
    h.vertices = n;
    h.hyperedges.resize(n);
    h.incidence = Eigen::MatrixXd::Zero(n, n);
    h.edge_weights.resize(n);

    std::vector<int> order(n);
    for (int l = 0; l < n; ++l) {
        std::iota(order.begin(), order.end(), 0);
        // descending similarity to the center, ties by ascending index
        std::sort(order.begin(), order.end(), [&](int p, int q) {
            if (a(l, p) != a(l, q)) return a(l, p) > a(l, q);
            return p < q;
        });
        auto& edge = h.hyperedges[l];
        edge.push_back(l);
        for (int idx : order) {
            if (idx == l) continue;
            edge.push_back(idx);
            if (static_cast<int>(edge.size()) == k + 1) break;
        }
        double mean = 0.0;
        for (int v : edge) {
            h.incidence(v, l) = 1.0;
            mean += a(l, v);
        }
        h.edge_weights(l) = mean / static_cast<double>(edge.size());
    }
    return h;
}

HypergraphIncidence knn_incidence(const SymmetricMatrix& a, const HypergraphIncidence& edges) {
    const int n = a.dim();
    HypergraphIncidence h = edges;
    h.incidence = Eigen::MatrixXd::Zero(n, n);

    // per-vertex normalizer: sum over member edges of w_t * a(t, i)^2
    Eigen::VectorXd norm2 = Eigen::VectorXd::Zero(n);
    for (int t = 0; t < edges.edge_count(); ++t)
        for (int i : edges.hyperedges[t]) norm2(i) += edges.edge_weights(t) * a(t, i) * a(t, i);

    for (int i = 0; i < n; ++i)
        if (norm2(i) <= 0.0)
            throw NumericalError("knn_incidence: vertex " + std::to_string(i) +
                                 " has zero soft-membership norm");

    for (int l = 0; l < edges.edge_count(); ++l)
        for (int i : edges.hyperedges[l]) h.incidence(i, l) = a(l, i) / std::sqrt(norm2(i));
    return h;
}

Eigen::VectorXd knn_feature_vector(const SymmetricMatrix& a, const HypergraphIncidence& edges, int m) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(edges.edge_count());
    for (int l = 0; l < edges.edge_count(); ++l) {
        const auto& e = edges.hyperedges[l];
        if (std::find(e.begin(), e.end(), m) != e.end())
            x(l) = a(l, m) * std::sqrt(edges.edge_weights(l));
    }
    return x;
}

SymmetricMatrix knn_similarity(const SymmetricMatrix& a, int k) {
    const HypergraphIncidence soft = knn_incidence(a, knn_hyperedges(a, k));
    return soft.similarity();
}

}  // namespace hyperclust
