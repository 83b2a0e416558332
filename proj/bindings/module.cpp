#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specmatch/diagnostics.hpp"
#include "specmatch/harness.hpp"
#include "specmatch/models.hpp"
#include "specmatch/rounding.hpp"
#include "specmatch/similarity.hpp"
#include "specmatch/spectral.hpp"

namespace py = pybind11;
using namespace specmatch;

namespace {

TruthMode truth_mode_from_string(const std::string& s) {
    if (s == "identity") return TruthMode::identity;
    if (s == "random") return TruthMode::random;
    throw ParamError("truth_mode must be identity or random");
}

SimilarityMatrix sim_from_array(const Mat& entries, double eta, const std::string& method) {
    SimilarityMatrix x;
    x.entries = entries;
    x.eta = eta;
    x.method = method_from_string(method);
    return x;
}

py::dict dominance_dict(const DominanceReport& r) {
    py::dict d;
    d["min_true"] = r.min_true;
    d["max_off"] = r.max_off;
    d["margin"] = r.margin;
    d["separated"] = r.separated;
    d["pred_diag"] = r.pred_diag;
    d["diag_mean"] = r.diag_mean;
    d["diag_rel_err"] = r.diag_rel_err;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "spectral graph matching core";

    py::register_exception<Error>(m, "SpecmatchError");

    py::class_<Permutation>(m, "Permutation")
        .def(py::init([](std::vector<int> targets) {
                 Permutation p;
                 p.targets = std::move(targets);
                 if (!p.is_valid()) throw ParamError("not a permutation");
                 return p;
             }),
             py::arg("targets"))
        .def_static("identity", &Permutation::identity, py::arg("n"))
        .def("inverse", &Permutation::inverse)
        .def_property_readonly("targets",
                               [](const Permutation& p) { return p.targets; })
        .def("__len__", &Permutation::size)
        .def("__call__", &Permutation::operator());

    py::class_<CorrelatedPair>(m, "CorrelatedPair")
        .def_readonly("a", &CorrelatedPair::a)
        .def_readonly("b", &CorrelatedPair::b)
        .def_readonly("truth", &CorrelatedPair::truth)
        .def_readonly("n", &CorrelatedPair::n)
        .def_readonly("sigma_emp", &CorrelatedPair::sigma_emp)
        .def_readonly("sigma_thm", &CorrelatedPair::sigma_thm)
        .def_readonly("d", &CorrelatedPair::d)
        .def_readonly("seed", &CorrelatedPair::seed)
        .def_property_readonly("model", [](const CorrelatedPair& p) {
            return to_string(p.model);
        });

    py::class_<Matching>(m, "Matching")
        .def_property_readonly("map", [](const Matching& m_) { return m_.map; })
        .def_readonly("bijective", &Matching::bijective)
        .def("__len__", &Matching::size);

    py::class_<SimilarityMatrix>(m, "SimilarityMatrix")
        .def_readonly("entries", &SimilarityMatrix::entries)
        .def_readonly("eta", &SimilarityMatrix::eta)
        .def_property_readonly("method", [](const SimilarityMatrix& x) {
            return to_string(x.method);
        });

    m.def(
        "gen_er_pair",
        [](int n, double p, double s, uint64_t seed, const std::string& truth_mode) {
            return gen_er_pair(n, p, s, seed, truth_mode_from_string(truth_mode));
        },
        py::arg("n"), py::arg("p"), py::arg("s"), py::arg("seed"),
        py::arg("truth_mode") = "random");
    m.def(
        "gen_gaussian_pair",
        [](int n, double sigma, uint64_t seed, const std::string& truth_mode) {
            return gen_gaussian_pair(n, sigma, seed, truth_mode_from_string(truth_mode));
        },
        py::arg("n"), py::arg("sigma"), py::arg("seed"), py::arg("truth_mode") = "random");
    m.def("noise_params", [](int n, double p, double s) {
        const NoiseParams np = noise_params(n, p, s);
        return py::make_tuple(np.sigma_emp, np.sigma_thm, np.d);
    });
    m.def("center_scale", &center_scale, py::arg("raw"), py::arg("p"));
    m.def("permute_conjugate", &permute_conjugate, py::arg("m"), py::arg("perm"));

    m.def("grampa", &grampa, py::arg("a"), py::arg("b"), py::arg("eta"));
    m.def("rowqp", &rowqp, py::arg("a"), py::arg("b"), py::arg("eta"));
    m.def(
        "grampa_contour",
        [](const Mat& a, const Mat& b, double eta, int points_per_side) {
            ContourSpec spec = ContourSpec::make_default(eta);
            spec.points_per_side = points_per_side;
            return grampa_contour(a, b, eta, spec);
        },
        py::arg("a"), py::arg("b"), py::arg("eta"), py::arg("points_per_side") = 256);
    m.def(
        "rowqp_contour",
        [](const Mat& a, const Mat& b, double eta, int points_per_side) {
            ContourSpec spec = ContourSpec::make_default(eta);
            spec.points_per_side = points_per_side;
            return rowqp_contour(a, b, eta, spec);
        },
        py::arg("a"), py::arg("b"), py::arg("eta"), py::arg("points_per_side") = 256);
    m.def("kkt_oracle_regqp", &kkt_oracle_regqp, py::arg("a"), py::arg("b"), py::arg("eta"));
    m.def("kkt_oracle_rowqp", &kkt_oracle_rowqp, py::arg("a"), py::arg("b"), py::arg("eta"));

    m.def("lap_round", &lap_round);
    m.def("greedy_round", &greedy_round);
    m.def("argmax_round", &argmax_round);
    m.def("brute_force_round", &brute_force_round);
    m.def("overlap", &overlap, py::arg("candidate"), py::arg("truth"));
    m.def("similarity_from_array", &sim_from_array, py::arg("entries"), py::arg("eta"),
          py::arg("method") = "grampa");

    m.def(
        "dominance_report",
        [](const SimilarityMatrix& x, const Permutation& truth, double sigma,
           bool constrained) {
            return dominance_dict(dominance_report(x, truth, sigma, constrained));
        },
        py::arg("x"), py::arg("truth"), py::arg("sigma") = 0.0,
        py::arg("constrained") = false);
    m.def("trace_m0_check", &trace_m0_check, py::arg("a"), py::arg("z"));
    m.def("stieltjes_m0", &stieltjes_m0, py::arg("z"));
    m.def("semicircle_density", &semicircle_density, py::arg("x"));
    m.def("spectral_norm", &spectral_norm, py::arg("a"));
    m.def("resolvent", &resolvent, py::arg("a"), py::arg("z"));
}
