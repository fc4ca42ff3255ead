#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "inar/cls.hpp"
#include "inar/limit_laws.hpp"
#include "inar/mc.hpp"
#include "inar/model.hpp"
#include "inar/moments.hpp"
#include "inar/trajectory.hpp"

namespace py = pybind11;
using namespace inar;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Unstable integer-valued AR(2) simulation and estimation toolkit";

    py::class_<AutoregressiveParams>(m, "Params")
        .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
        .def_property_readonly("alpha", &AutoregressiveParams::alpha)
        .def_property_readonly("beta", &AutoregressiveParams::beta)
        .def_property_readonly("rho", &AutoregressiveParams::rho);

    py::class_<InnovationModel>(m, "Innovation")
        .def_static("poisson", &InnovationModel::poisson, py::arg("lam"))
        .def_static("geometric", &InnovationModel::geometric, py::arg("p"))
        .def_static("categorical", &InnovationModel::categorical, py::arg("probs"))
        .def_static("parse", &parse_innovation, py::arg("spec"))
        .def_property_readonly("mean", &InnovationModel::mean)
        .def_property_readonly("variance", &InnovationModel::variance)
        .def("raw_moment", &InnovationModel::raw_moment, py::arg("j"))
        .def("__repr__", &InnovationModel::spec_string);

    m.def("classify", [](double alpha, double beta) {
        const ModelClass cls = classify(AutoregressiveParams(alpha, beta));
        return py::make_tuple(to_string(cls.stability), to_string(cls.regularity));
    }, py::arg("alpha"), py::arg("beta"));

    m.def("simulate", [](double alpha, double beta, const std::string& innovation, long long n,
                         std::uint64_t seed) {
        const Trajectory traj =
            simulate(AutoregressiveParams(alpha, beta), parse_innovation(innovation), n, seed);
        return traj.values;
    }, py::arg("alpha"), py::arg("beta"), py::arg("innovation"), py::arg("n"), py::arg("seed"),
       "Simulated path as a list [X_-1, X_0, ..., X_n]");

    m.def("estimate", [](const std::vector<long long>& values, double mu) {
        const EstimateResult r = estimate_cls(values, mu);
        py::dict d;
        d["alpha_hat"] = r.alpha_hat;
        d["beta_hat"] = r.beta_hat;
        d["rho_hat"] = r.rho_hat;
        d["case"] = to_string(r.estimate_case);
        return d;
    }, py::arg("values"), py::arg("mu"),
       "CLS estimate from a path [X_-1, X_0, ..., X_n] with known innovation mean");

    m.def("expected_value_exact", &expected_value_exact, py::arg("beta"), py::arg("mu"),
          py::arg("n"));

    m.def("putzer_power", [](double beta, long long k) {
        const auto a = putzer_power(beta, k);
        return py::make_tuple(py::make_tuple(a[0][0], a[0][1]), py::make_tuple(a[1][0], a[1][1]));
    }, py::arg("beta"), py::arg("k"));

    m.def("limit_rho_sample", [](const std::string& regime, double alpha, double beta, double mu,
                                 double sigma2, long long mesh, std::uint64_t seed) {
        if (regime == "positively-regular")
            return limit_rho_positively_regular(alpha, beta, mu, mesh, seed).value1;
        if (regime == "decomposable") return limit_rho_decomposable(mu, sigma2, seed).value1;
        if (regime == "indecomposable") return limit_rho_indecomposable(mu, sigma2, seed).value1;
        if (regime == "dickey-fuller") return dickey_fuller_sample(mesh, seed).value1;
        throw std::invalid_argument("unknown regime: " + regime);
    }, py::arg("regime"), py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("mu") = 0.0,
       py::arg("sigma2") = 0.0, py::arg("mesh") = 1000, py::arg("seed") = 0);

    m.def("ks_distance", [](const std::vector<double>& a, const std::vector<double>& b) {
        return ks_distance(std::span<const double>(a), std::span<const double>(b));
    }, py::arg("sample_a"), py::arg("sample_b"));

    m.def("run_campaign", [](double alpha, double beta, const std::string& innovation, long long n,
                             long long replications, std::uint64_t seed, long long mesh,
                             long long limit_replications, unsigned threads) {
        CampaignConfig config;
        config.params = AutoregressiveParams(alpha, beta);
        config.innovation = parse_innovation(innovation);
        config.n = n;
        config.replications = replications;
        config.master_seed = seed;
        config.mesh = mesh;
        config.limit_replications = limit_replications;
        config.threads = threads;
        const CampaignResult result = run_campaign(config);
        py::dict d;
        d["report"] = report_to_json(result.report);
        d["statistic1"] = result.statistic1;
        d["statistic2"] = result.statistic2;
        d["ks"] = result.report.ks;
        d["empirical_variance"] = result.report.empirical.variance;
        return d;
    }, py::arg("alpha"), py::arg("beta"), py::arg("innovation"), py::arg("n"),
       py::arg("replications"), py::arg("seed") = 0, py::arg("mesh") = 10000,
       py::arg("limit_replications") = 10000, py::arg("threads") = 1);
}
