#include "hyperclust/clusterer.hpp"

#include <limits>

#include "hyperclust/discretize.hpp"
#include "hyperclust/eigensolvers.hpp"
#include "hyperclust/errors.hpp"
#include "hyperclust/trace_ratio.hpp"

namespace hyperclust {

std::string criterion_name(Criterion c) { return c == Criterion::Dhpc ? "dhpc" : "nc"; }

Criterion parse_criterion(const std::string& name) {
    if (name == "dhpc") return Criterion::Dhpc;
    if (name == "nc") return Criterion::Nc;
    throw InvalidParameterError("unknown criterion '" + name + "' (expected dhpc or nc)");
}

DhpcObjective dhpc_objective(const Partition& x, const SymmetricMatrix& s,
                             const SymmetricMatrix& q) {
    if (x.size() != s.dim() || s.dim() != q.dim())
        throw InvalidInputError("dhpc_objective: dimension mismatch");
    DhpcObjective out;
    const int kappa = x.clusters();
    double sum = 0.0;
    for (int c = 0; c < kappa; ++c) {
        const Eigen::VectorXd col = x.X.col(c);
        const double intra = col.dot(s.values() * col);
        const double cut = col.dot(q.values() * col);
        double term;
        if (cut <= 0.0) {
            term = std::numeric_limits<double>::infinity();
            out.disconnected = true;
        } else {
            term = intra / cut;
        }
        out.per_cluster.push_back(term);
        sum += term;
    }
    out.value = sum / kappa;
    return out;
}

ClusterResult cluster(const SymmetricMatrix& s, int kappa, const HyperParams& params,
                      Criterion criterion) {
    if (kappa < 2 || kappa > s.dim())
        throw InvalidParameterError("cluster: kappa must be in [2, N]");

    ClusterResult result;
    Eigen::MatrixXd candidate;
    if (criterion == Criterion::Dhpc) {
        const SymmetricMatrix q = laplacian(s);
        TraceRatioState state = newton_lanczos(s, q, kappa, params.epsilon);
        result.rho = state.rho();
        result.solver_iterations = state.candidate.iterations;
        result.converged = state.converged;
        candidate = candidate_from(state.P());
    } else {
        PartitionCandidate z = generalized_eig(s, degree_matrix(s), kappa);
        result.rho = z.rho;
        candidate = candidate_from(z.P);
    }
    RefineResult refined = discrete_refine(candidate, 100, params.seed);
    result.partition = std::move(refined.partition);
    result.refine_iterations = refined.iterations;
    result.converged = result.converged && refined.converged;
    return result;
}

}  // namespace hyperclust
