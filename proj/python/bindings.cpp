#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperclust/base_clusterers.hpp"
#include "hyperclust/clusterer.hpp"
#include "hyperclust/corruption.hpp"
#include "hyperclust/csv_io.hpp"
#include "hyperclust/discretize.hpp"
#include "hyperclust/errors.hpp"
#include "hyperclust/fusion.hpp"
#include "hyperclust/knn_hypergraph.hpp"
#include "hyperclust/metrics.hpp"
#include "hyperclust/overclustering.hpp"
#include "hyperclust/pairwise.hpp"
#include "hyperclust/synth.hpp"
#include "hyperclust/trace_ratio.hpp"

namespace py = pybind11;
using namespace hyperclust;

namespace {

Dataset make_dataset(const Eigen::MatrixXd& features,
                     const std::optional<std::vector<int>>& labels) {
    return Dataset(features, labels);
}

HyperParams params_from_kwargs(double sigma, int k, double alpha, double beta, int kappa,
                               int communities_per_method, int neighbor_set_size, double epsilon,
                               std::uint64_t seed) {
    HyperParams p;
    p.sigma = sigma;
    p.k = k;
    p.weights = FusionWeights{alpha, beta};
    p.kappa = kappa;
    p.communities_per_method = communities_per_method;
    p.neighbor_set_size = neighbor_set_size;
    p.epsilon = epsilon;
    p.seed = seed;
    return p;
}

}  // namespace

PYBIND11_MODULE(_hyperclust, m) {
    m.doc() = "Hypergraph similarity construction and spectral partitioning";

    py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<InvalidParameterError>(m, "InvalidParameterError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_IOError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ArithmeticError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    m.def("gaussian_kernel", &gaussian_kernel, py::arg("zi"), py::arg("zj"), py::arg("sigma"));

    m.def(
        "sigma_grid",
        [](const Eigen::MatrixXd& features, int steps) {
            return sigma_grid(make_dataset(features, std::nullopt), steps);
        },
        py::arg("features"), py::arg("steps") = 15);

    m.def(
        "pairwise_similarity",
        [](const Eigen::MatrixXd& features, double sigma) {
            const Dataset ds = make_dataset(features, std::nullopt);
            const double s = sigma > 0 ? sigma : default_sigma(ds);
            return pairwise_similarity(ds, KernelSpec{KernelKind::Gaussian, s}).values();
        },
        py::arg("features"), py::arg("sigma") = 0.0,
        "Gaussian kernel matrix; sigma <= 0 picks the automatic scale");

    m.def(
        "knn_similarity",
        [](const Eigen::MatrixXd& a, int k) { return knn_similarity(SymmetricMatrix(a), k).values(); },
        py::arg("a"), py::arg("k") = 3);

    m.def(
        "build_communities",
        [](const Eigen::MatrixXd& a, int communities_per_method, std::uint64_t seed) {
            HyperParams p;
            p.kappa = 2;
            p.communities_per_method = communities_per_method;
            p.seed = seed;
            return build_communities(SymmetricMatrix(a), p).communities;
        },
        py::arg("a"), py::arg("communities_per_method"), py::arg("seed") = 0);

    m.def(
        "overclustering_similarity",
        [](const Eigen::MatrixXd& a, const std::vector<std::vector<int>>& communities,
           int neighbor_set_size) {
            CommunitySet comms;
            comms.communities = communities;
            comms.method_tags.assign(communities.size(), "external");
            return overclustering_similarity(SymmetricMatrix(a), comms, neighbor_set_size).values();
        },
        py::arg("a"), py::arg("communities"), py::arg("neighbor_set_size") = 3);

    m.def(
        "fuse",
        [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c,
           double alpha, double beta) {
            return fuse(SymmetricMatrix(a), SymmetricMatrix(b), SymmetricMatrix(c),
                        FusionWeights{alpha, beta})
                .values();
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("alpha") = 0.4, py::arg("beta") = 0.4);

    m.def(
        "newton_lanczos",
        [](const Eigen::MatrixXd& s, const Eigen::MatrixXd& q, int kappa, double epsilon,
           double tol, int max_iter) {
            const TraceRatioState state =
                newton_lanczos(SymmetricMatrix(s), SymmetricMatrix(q), kappa, epsilon, tol, max_iter);
            return py::make_tuple(state.rho(), state.P(), state.history, state.converged);
        },
        py::arg("s"), py::arg("q"), py::arg("kappa"), py::arg("epsilon") = 1e-6,
        py::arg("tol") = 1e-8, py::arg("max_iter") = 100,
        "Returns (rho, P, history, converged)");

    m.def(
        "cluster",
        [](const Eigen::MatrixXd& s, int kappa, const std::string& criterion, std::uint64_t seed,
           double epsilon) {
            HyperParams p;
            p.kappa = kappa;
            p.seed = seed;
            p.epsilon = epsilon;
            const ClusterResult r =
                cluster(SymmetricMatrix(s), kappa, p, parse_criterion(criterion));
            py::dict info;
            info["rho"] = r.rho;
            info["solver_iterations"] = r.solver_iterations;
            info["refine_iterations"] = r.refine_iterations;
            info["converged"] = r.converged;
            return py::make_tuple(r.partition.labels, info);
        },
        py::arg("s"), py::arg("kappa"), py::arg("criterion") = "dhpc", py::arg("seed") = 0,
        py::arg("epsilon") = 1e-6, "Returns (labels, info)");

    m.def(
        "cluster_features",
        [](const Eigen::MatrixXd& features, int kappa, double sigma, int k, double alpha,
           double beta, const std::string& criterion, std::uint64_t seed, int communities_per_method,
           int neighbor_set_size, double epsilon) {
            const Dataset ds = make_dataset(features, std::nullopt);
            HyperParams p = params_from_kwargs(sigma, k, alpha, beta, kappa,
                                               communities_per_method, neighbor_set_size, epsilon,
                                               seed);
            if (p.sigma <= 0) p.sigma = default_sigma(ds);
            p.validate(ds.size());
            const SymmetricMatrix a =
                pairwise_similarity(ds, KernelSpec{KernelKind::Gaussian, p.sigma});
            Eigen::MatrixXd fused = p.weights.alpha * a.values();
            if (p.weights.beta > 0) fused += p.weights.beta * knn_similarity(a, p.k).values();
            if (p.weights.gamma() > 0)
                fused += p.weights.gamma() *
                         overclustering_similarity(a, build_communities(a, p), p.neighbor_set_size)
                             .values();
            const ClusterResult r = cluster(SymmetricMatrix(std::move(fused)), kappa, p,
                                            parse_criterion(criterion));
            py::dict info;
            info["sigma"] = p.sigma;
            info["rho"] = r.rho;
            info["solver_iterations"] = r.solver_iterations;
            info["refine_iterations"] = r.refine_iterations;
            info["converged"] = r.converged;
            return py::make_tuple(r.partition.labels, info);
        },
        py::arg("features"), py::arg("kappa"), py::arg("sigma") = 0.0, py::arg("k") = 3,
        py::arg("alpha") = 0.4, py::arg("beta") = 0.4, py::arg("criterion") = "dhpc",
        py::arg("seed") = 0, py::arg("communities_per_method") = 0,
        py::arg("neighbor_set_size") = 3, py::arg("epsilon") = 1e-6,
        "Full similarity-construction + partitioning pipeline on raw features");

    m.def(
        "kmeans",
        [](const Eigen::MatrixXd& points, int kappa, std::uint64_t seed) {
            const KmeansResult r = kmeans(points, kappa, seed);
            return py::make_tuple(r.partition.labels, r.inertia);
        },
        py::arg("points"), py::arg("kappa"), py::arg("seed") = 0);

    m.def(
        "classic_spectral",
        [](const Eigen::MatrixXd& s, int kappa, std::uint64_t seed) {
            return classic_spectral(SymmetricMatrix(s), kappa, seed).labels;
        },
        py::arg("s"), py::arg("kappa"), py::arg("seed") = 0);

    m.def(
        "multiclass_spectral",
        [](const Eigen::MatrixXd& s, int kappa, std::uint64_t seed) {
            return multiclass_spectral(SymmetricMatrix(s), kappa, seed).labels;
        },
        py::arg("s"), py::arg("kappa"), py::arg("seed") = 0);

    m.def("nmi", &nmi, py::arg("predicted"), py::arg("truth"));
    m.def("accuracy", &accuracy, py::arg("predicted"), py::arg("truth"));

    m.def(
        "corrupt",
        [](const Eigen::MatrixXd& features, const std::string& kind, double level,
           std::uint64_t seed) {
            const Dataset ds = make_dataset(features, std::nullopt);
            return corrupt(ds, CorruptionSpec{parse_corruption_kind(kind), level, seed}).features;
        },
        py::arg("features"), py::arg("kind"), py::arg("level"), py::arg("seed") = 0,
        "kind is 'noise' (additive, scaled by per-feature std) or 'zero' (element zeroing)");

    m.def(
        "synth_blobs",
        [](int kappa, int per_cluster, int dim, double separation, std::uint64_t seed) {
            const Dataset ds = synth_blobs(kappa, per_cluster, dim, separation, seed);
            return py::make_tuple(ds.features, *ds.labels);
        },
        py::arg("kappa"), py::arg("per_cluster"), py::arg("dim"), py::arg("separation"),
        py::arg("seed") = 0, "Returns (features, labels)");

    m.def(
        "load_csv",
        [](const std::string& path) {
            const Dataset ds = load_csv(path);
            return py::make_tuple(ds.features,
                                  ds.labels ? py::cast(*ds.labels) : py::object(py::none()));
        },
        py::arg("path"), "Returns (features, labels-or-None)");

    m.attr("__version__") = "1.0.0";
}
