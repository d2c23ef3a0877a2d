// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mrf/copula.hpp"
#include "mrf/dependence.hpp"
#include "mrf/model.hpp"
#include "mrf/sampler.hpp"
#include "mrf/taildep.hpp"

namespace py = pybind11;

namespace {

py::array_t<double> batch_to_array(const mrf::SampleBatch& batch) {
    py::array_t<double> out({batch.count, batch.components});
    std::copy(batch.values.begin(), batch.values.end(),
              out.mutable_data());
    return out;
}

mrf::TailPath parse_path(const std::string& name) {
    if (name == "diagonal") return mrf::TailPath::Diagonal;
    if (name == "maximal") return mrf::TailPath::Maximal;
    mrf::raise(mrf::ErrorCode::DomainError,
               "path must be 'diagonal' or 'maximal'");
}

}  // namespace

PYBIND11_MODULE(pymrf, m) {
    m.doc() = "Clayton multiple-risk-factor copulas: exact evaluation, "
              "sampling, and dependence measures";

    py::register_exception<mrf::Error>(m, "MrfError");

    py::class_<mrf::BivariateClaytonParams>(m, "BivariateParams",
                                            "Bivariate parameter reduction of "
                                            "a component pair")
        .def(py::init([](double xi_i, double xi_k, double alpha, double gamma,
                         double xi_ibar, double xi_kbar) {
                 return mrf::BivariateClaytonParams{xi_i,    xi_k,   alpha,
                                                    gamma,   xi_ibar, xi_kbar};
             }),
             py::arg("xi_i"), py::arg("xi_k"), py::arg("alpha") = 0.0,
             py::arg("gamma") = 0.0, py::arg("xi_ibar") = 0.0,
             py::arg("xi_kbar") = 0.0)
        .def_readonly("xi_i", &mrf::BivariateClaytonParams::xiI)
        .def_readonly("xi_k", &mrf::BivariateClaytonParams::xiK)
        .def_readonly("alpha", &mrf::BivariateClaytonParams::alphaCommon)
        .def_readonly("gamma", &mrf::BivariateClaytonParams::gammaCommon)
        .def_readonly("xi_ibar", &mrf::BivariateClaytonParams::xiIbar)
        .def_readonly("xi_kbar", &mrf::BivariateClaytonParams::xiKbar)
        .def_property_readonly("xi_common",
                               &mrf::BivariateClaytonParams::xiCommon)
        .def("__repr__", [](const mrf::BivariateClaytonParams& p) {
            return "BivariateParams(xi_i=" + std::to_string(p.xiI) +
                   ", xi_k=" + std::to_string(p.xiK) +
                   ", alpha=" + std::to_string(p.alphaCommon) +
                   ", gamma=" + std::to_string(p.gammaCommon) + ")";
        });

    py::class_<mrf::MRFModel>(m, "Model",
                              "Validated risk portfolio: factors + exposure")
        .def_static("from_json", &mrf::parse_model, py::arg("text"),
                    "Parse a model from JSON document text")
        .def_static("from_file", &mrf::load_model, py::arg("path"),
                    "Load and parse a model file")
        .def_property_readonly("components", &mrf::MRFModel::component_count)
        .def_property_readonly("factors", &mrf::MRFModel::factor_count)
        .def_property_readonly("comonotone_factors",
                               &mrf::MRFModel::comonotone_count)
        .def_property_readonly("independent_factors",
                               &mrf::MRFModel::independent_count)
        .def("agg_shape", &mrf::MRFModel::agg_shape, py::arg("i"),
             "Aggregated gamma shape of component i (0-based)")
        .def("pair_params", &mrf::bivariate_params, py::arg("i"), py::arg("k"),
             "Bivariate parameter reduction for components i, k (0-based)")
        .def("special_case",
             [](const mrf::MRFModel& model) {
                 return std::string(to_string(mrf::classify_special_case(model)));
             })
        .def("to_json", &mrf::model_to_json)
        .def_property_readonly("hash", &mrf::model_hash)
        .def("__repr__", [](const mrf::MRFModel& model) {
            return "Model(components=" + std::to_string(model.component_count()) +
                   ", factors=" + std::to_string(model.factor_count()) + ")";
        });

    m.def(
        "copula_cdf",
        [](const mrf::MRFModel& model, const std::vector<double>& u) {
            return mrf::copula_cdf(model, mrf::CopulaPoint{u});
        },
        py::arg("model"), py::arg("u"), "Exact copula value at a point");
    m.def(
        "joint_survival",
        [](const mrf::MRFModel& model, const std::vector<double>& t) {
            return mrf::joint_survival(model, t);
        },
        py::arg("model"), py::arg("t"),
        "Joint survival probability at componentwise times");
    m.def("marginal_survival", &mrf::marginal_survival, py::arg("model"),
          py::arg("i"), py::arg("t"));
    m.def("marginal_survival_inverse", &mrf::marginal_survival_inverse,
          py::arg("model"), py::arg("i"), py::arg("u"));
    m.def("bivariate_cdf", &mrf::bivariate_cdf, py::arg("params"), py::arg("u"),
          py::arg("v"), "Closed-form bivariate copula value");

    m.def(
        "sample_copula",
        [](const mrf::MRFModel& model, std::size_t count, std::uint64_t seed,
           unsigned threads) {
            return batch_to_array(mrf::sample_copula(model, count, seed, threads));
        },
        py::arg("model"), py::arg("count"), py::arg("seed") = 0,
        py::arg("threads") = 1,
        "Exact joint draws of copula uniforms (rows = draws)");
    m.def(
        "sample_default_times",
        [](const mrf::MRFModel& model, std::size_t count, std::uint64_t seed,
           unsigned threads) {
            return batch_to_array(
                mrf::sample_default_times(model, count, seed, threads));
        },
        py::arg("model"), py::arg("count"), py::arg("seed") = 0,
        py::arg("threads") = 1,
        "Exact joint default times via the barrier representation");

    m.def("spearman_rho", &mrf::spearman_rho, py::arg("params"),
          "Exact Spearman rank correlation");
    m.def("spearman_rho_numeric", &mrf::spearman_rho_numeric, py::arg("params"),
          py::arg("tol") = 1e-9, "Quadrature oracle for spearman_rho");
    m.def("spearman_archimedean", &mrf::spearman_archimedean, py::arg("params"),
          "Closed corollary value for pairs without shared comonotone mass");
    m.def(
        "spearman_matrix",
        [](const mrf::MRFModel& model) {
            const std::size_t n = model.component_count();
            py::array_t<double> out({n, n});
            const std::vector<double> rho = mrf::spearman_matrix(model);
            std::copy(rho.begin(), rho.end(), out.mutable_data());
            return out;
        },
        py::arg("model"), "Pairwise Spearman matrix");

    m.def(
        "simdefault_analytic",
        [](const mrf::MRFModel& model, const std::vector<std::size_t>& subset) {
            const mrf::SimDefaultResult r = mrf::simdefault_analytic(model, subset);
            return py::make_tuple(r.value, r.errorBound);
        },
        py::arg("model"), py::arg("subset"),
        "Exact simultaneous-default probability -> (value, error_bound)");
    m.def(
        "simdefault_mc",
        [](const mrf::MRFModel& model, const std::vector<std::size_t>& subset,
           std::size_t draws, std::uint64_t seed) {
            const mrf::MonteCarloEstimate r =
                mrf::simdefault_mc(model, subset, draws, seed);
            return py::make_tuple(r.mean, r.standardError);
        },
        py::arg("model"), py::arg("subset"), py::arg("draws") = 1000000,
        py::arg("seed") = 0,
        "Monte Carlo simultaneous-default estimate -> (mean, standard_error)");

    m.def(
        "tail_indices",
        [](const mrf::BivariateClaytonParams& params) {
            const mrf::TailIndices t = mrf::tail_indices(params);
            py::dict out;
            out["lambda_l"] = t.lambdaL;
            out["chi_l"] = t.chiL;
            out["kappa_l"] = t.kappaL;
            out["lambda_star"] = t.lambdaStar;
            out["chi_star"] = t.chiStar;
            out["kappa_star"] = t.kappaStar;
            return out;
        },
        py::arg("params"),
        "Classical and maximal lower-tail dependence indices");

    py::class_<mrf::MaxDependencePoint>(m, "MaxDependencePoint")
        .def_readonly("u", &mrf::MaxDependencePoint::u)
        .def_readonly("x_star", &mrf::MaxDependencePoint::xStar)
        .def_readonly("pi_star", &mrf::MaxDependencePoint::piStar)
        .def_property_readonly("regime",
                               [](const mrf::MaxDependencePoint& p) {
                                   return std::string(to_string(p.regime));
                               })
        .def("__repr__", [](const mrf::MaxDependencePoint& p) {
            return "MaxDependencePoint(u=" + std::to_string(p.u) +
                   ", x_star=" + std::to_string(p.xStar) + ")";
        });
    m.def("maximal_path", &mrf::maximal_path, py::arg("params"), py::arg("u"),
          "Maximizer of C(x, u^2/x) over the admissible family");
    m.def(
        "estimate_tail_exponent",
        [](const mrf::BivariateClaytonParams& params, const std::string& path,
           const std::vector<double>& u_grid) {
            return mrf::estimate_tail_exponent(params, parse_path(path), u_grid);
        },
        py::arg("params"), py::arg("path"), py::arg("u_grid"),
        "Least-squares tail exponent along 'diagonal' or 'maximal'");
}
