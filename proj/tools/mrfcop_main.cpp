// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mrf/copula.hpp"
#include "mrf/dependence.hpp"
#include "mrf/model.hpp"
#include "mrf/sampler.hpp"
#include "mrf/taildep.hpp"

namespace {

using nlohmann::json;

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            mrf::raise(mrf::ErrorCode::DomainError,
                       "could not parse '" + item + "' as a real number");
        }
    }
    if (out.empty()) {
        mrf::raise(mrf::ErrorCode::DomainError, "empty number list");
    }
    return out;
}

// External indices are 1-based; everything internal is 0-based.
std::vector<std::size_t> parse_indices(const std::string& text) {
    std::vector<std::size_t> out;
    for (double value : parse_reals(text)) {
        const long long index = static_cast<long long>(value);
        if (value != static_cast<double>(index) || index < 1) {
            mrf::raise(mrf::ErrorCode::IndexOutOfRange,
                       "component indices must be integers starting at 1");
        }
        out.push_back(static_cast<std::size_t>(index - 1));
    }
    return out;
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text) {
    const std::vector<std::size_t> indices = parse_indices(text);
    if (indices.size() != 2) {
        mrf::raise(mrf::ErrorCode::DimensionMismatch,
                   "--pair needs exactly two component indices");
    }
    return {indices[0], indices[1]};
}

std::vector<double> parse_ugrid(const std::string& text) {
    double a = 0.0;
    double b = 0.0;
    long steps = 0;
    char tail = '\0';
    if (std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &a, &b, &steps, &tail) != 3) {
        mrf::raise(mrf::ErrorCode::DomainError,
                   "--ugrid must look like a:b:steps, e.g. 0.2:0.001:50");
    }
    if (!(a > 0.0) || a >= 1.0 || !(b > 0.0) || b >= 1.0) {
        mrf::raise(mrf::ErrorCode::DomainError, "grid endpoints must lie in (0, 1)");
    }
    if (steps < 1 || (steps == 1 && a != b)) {
        mrf::raise(mrf::ErrorCode::DomainError, "--ugrid needs at least 2 steps");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    for (long s = 0; s < steps; ++s) {
        const double w = steps == 1 ? 0.0
                                    : static_cast<double>(s) /
                                          static_cast<double>(steps - 1);
        grid.push_back(a + (b - a) * w);
    }
    return grid;
}

/// Flatten a JSON object into key,value CSV rows (arrays become key_1,
/// key_2, ...; both formats must parse back to identical doubles).
void flatten_csv(const json& node, const std::string& prefix,
                 std::ostream& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            flatten_csv(value, prefix.empty() ? key : prefix + "." + key, out);
        }
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& value : node) {
            flatten_csv(value, prefix + "_" + std::to_string(++i), out);
        }
    } else if (node.is_number_float()) {
        out << prefix << ',' << format_double(node.get<double>()) << '\n';
    } else if (node.is_string()) {
        out << prefix << ',' << node.get<std::string>() << '\n';
    } else {
        out << prefix << ',' << node.dump() << '\n';
    }
}

struct OutputTarget {
    std::string path;  // empty = stdout

    void write(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            mrf::raise(mrf::ErrorCode::IoFailure, "cannot open output file", path);
        }
        file << payload;
        if (!file.good()) {
            mrf::raise(mrf::ErrorCode::IoFailure, "failed writing output file", path);
        }
    }
};

void emit_json(const json& doc, const OutputTarget& target,
               const std::string& format) {
    if (format == "csv") {
        std::ostringstream csv;
        csv << "key,value\n";
        flatten_csv(doc, "", csv);
        target.write(csv.str());
    } else {
        target.write(doc.dump(2) + "\n");
    }
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Clayton multiple-risk-factor copula toolkit"};
    app.require_subcommand(1);

    std::string modelPath;
    std::string outputPath;
    std::string format = "json";
    std::string pointText;
    std::string pairText;
    std::string subsetText;
    std::string kindText = "uniforms";
    std::string ugridText;
    std::uint64_t seed = 0;
    std::size_t draws = 1000000;
    unsigned threads = 1;
    double tol = 1e-9;
    double massTol = 1e-12;
    bool numeric = false;
    bool withMc = false;

    const auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--model", modelPath, "Model JSON file")->required();
        cmd->add_option("--output", outputPath, "Output file (default stdout)");
        cmd->add_option("--format", format, "Output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        return cmd;
    };

    auto* validateCmd = addCommon(app.add_subcommand("validate", "Model diagnostics"));
    auto* evalCmd = addCommon(app.add_subcommand("eval", "Evaluate the copula"));
    evalCmd->add_option("--point", pointText, "Coordinates u1,...,un in [0,1]")
        ->required();
    auto* sampleCmd = addCommon(app.add_subcommand("sample", "Draw a sample batch"));
    sampleCmd->add_option("--kind", kindText, "uniforms or times")
        ->check(CLI::IsMember({"uniforms", "times"}));
    sampleCmd->add_option("--draws", draws, "Number of draws");
    sampleCmd->add_option("--seed", seed, "Root RNG seed");
    sampleCmd->add_option("--threads", threads, "Worker threads");
    auto* spearmanCmd = addCommon(
        app.add_subcommand("spearman", "Spearman rank correlation of a pair"));
    spearmanCmd->add_option("--pair", pairText, "Component pair i,k (1-based)")
        ->required();
    spearmanCmd->add_flag("--numeric", numeric,
                          "Also report the quadrature oracle value");
    spearmanCmd->add_option("--tol", tol, "Quadrature tolerance");
    auto* simdefaultCmd = addCommon(
        app.add_subcommand("simdefault", "Simultaneous default probability"));
    simdefaultCmd
        ->add_option("--subset", subsetText, "Component subset i1,...,ik (1-based)")
        ->required();
    simdefaultCmd->add_flag("--mc", withMc, "Also run the Monte Carlo estimate");
    simdefaultCmd->add_option("--draws", draws, "Monte Carlo draws");
    simdefaultCmd->add_option("--seed", seed, "Root RNG seed");
    simdefaultCmd->add_option("--mass-tol", massTol, "Mixture mass tolerance");
    auto* taildepCmd = addCommon(
        app.add_subcommand("taildep", "Tail dependence indices of a pair"));
    taildepCmd->add_option("--pair", pairText, "Component pair i,k (1-based)")
        ->required();
    auto* mdpCmd =
        addCommon(app.add_subcommand("mdp-path", "Path of maximal dependence"));
    mdpCmd->add_option("--pair", pairText, "Component pair i,k (1-based)")
        ->required();
    mdpCmd->add_option("--ugrid", ugridText, "Grid a:b:steps of u values")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        const json err = {{"code", "UsageError"},
                          {"message", e.what()},
                          {"context", ""}};
        std::cerr << err.dump() << std::endl;
        return 2;
    }

    // Tabular commands default to CSV, scalar commands to JSON; an explicit
    // --format always wins.
    CLI::App* active = app.get_subcommands().front();
    if (active->get_option("--format")->count() == 0) {
        format = (active == sampleCmd || active == mdpCmd) ? "csv" : "json";
    }

    const mrf::MRFModel model = mrf::load_model(modelPath);
    const OutputTarget target{outputPath};

    if (validateCmd->parsed()) {
        json doc;
        doc["components"] = model.component_count();
        doc["factors"] = model.factor_count();
        doc["comonotoneFactors"] = model.comonotone_count();
        doc["independentFactors"] = model.independent_count();
        doc["specialCase"] = std::string(to_string(mrf::classify_special_case(model)));
        doc["modelHash"] = mrf::model_hash(model);
        doc["aggShapes"] = json::array();
        for (std::size_t i = 0; i < model.component_count(); ++i) {
            doc["aggShapes"].push_back(model.agg_shape(i));
        }
        doc["warnings"] = model.warnings();
        emit_json(doc, target, format);
    } else if (evalCmd->parsed()) {
        mrf::CopulaPoint point{parse_reals(pointText)};
        json doc;
        doc["point"] = point.u;
        doc["value"] = mrf::copula_cdf(model, point);
        emit_json(doc, target, format);
    } else if (sampleCmd->parsed()) {
        const mrf::SampleBatch batch =
            kindText == "times"
                ? mrf::sample_default_times(model, draws, seed, threads)
                : mrf::sample_copula(model, draws, seed, threads);
        if (format == "json") {
            json doc;
            doc["seed"] = batch.seed;
            doc["count"] = batch.count;
            doc["modelHash"] = batch.modelHash;
            doc["kind"] = kindText;
            doc["values"] = json::array();
            for (std::size_t d = 0; d < batch.count; ++d) {
                json row = json::array();
                for (std::size_t i = 0; i < batch.components; ++i) {
                    row.push_back(batch.at(d, i));
                }
                doc["values"].push_back(std::move(row));
            }
            target.write(doc.dump() + "\n");
        } else {
            std::ostringstream csv;
            mrf::write_batch_csv(batch, csv);
            target.write(csv.str());
            if (!outputPath.empty()) {
                OutputTarget sidecar{outputPath + ".meta.json"};
                sidecar.write(mrf::batch_sidecar_json(batch) + "\n");
            }
        }
    } else if (spearmanCmd->parsed()) {
        const auto [i, k] = parse_pair(pairText);
        const mrf::BivariateClaytonParams params = mrf::bivariate_params(model, i, k);
        json doc;
        doc["pair"] = {i + 1, k + 1};
        doc["rho"] = mrf::spearman_rho(params);
        if (numeric) {
            doc["rhoNumeric"] = mrf::spearman_rho_numeric(params, tol);
        }
        emit_json(doc, target, format);
    } else if (simdefaultCmd->parsed()) {
        std::vector<std::size_t> subset = parse_indices(subsetText);
        const mrf::SimDefaultResult result =
            mrf::simdefault_analytic(model, subset, massTol);
        json doc;
        doc["subset"] = json::array();
        for (std::size_t i : subset) doc["subset"].push_back(i + 1);
        doc["value"] = result.value;
        doc["errorBound"] = result.errorBound;
        if (withMc) {
            const mrf::MonteCarloEstimate mc =
                mrf::simdefault_mc(model, subset, draws, seed);
            doc["mcMean"] = mc.mean;
            doc["mcStandardError"] = mc.standardError;
            doc["mcDraws"] = mc.draws;
        }
        emit_json(doc, target, format);
    } else if (taildepCmd->parsed()) {
        const auto [i, k] = parse_pair(pairText);
        const mrf::TailIndices indices =
            mrf::tail_indices(mrf::bivariate_params(model, i, k));
        json doc;
        doc["pair"] = {i + 1, k + 1};
        doc["lambdaL"] = indices.lambdaL;
        doc["chiL"] = indices.chiL;
        doc["kappaL"] = indices.kappaL;
        doc["lambdaStar"] = indices.lambdaStar;
        doc["chiStar"] = indices.chiStar;
        doc["kappaStar"] = indices.kappaStar;
        emit_json(doc, target, format);
    } else if (mdpCmd->parsed()) {
        const auto [i, k] = parse_pair(pairText);
        const mrf::BivariateClaytonParams params = mrf::bivariate_params(model, i, k);
        const std::vector<double> grid = parse_ugrid(ugridText);
        if (format == "json") {
            json doc;
            doc["pair"] = {i + 1, k + 1};
            doc["points"] = json::array();
            for (double u : grid) {
                const mrf::MaxDependencePoint p = mrf::maximal_path(params, u);
                doc["points"].push_back({{"u", p.u},
                                         {"xStar", p.xStar},
                                         {"yStar", u * u / p.xStar},
                                         {"piStar", p.piStar},
                                         {"regime", std::string(to_string(p.regime))}});
            }
            target.write(doc.dump(2) + "\n");
        } else {
            std::ostringstream csv;
            csv << "u,x_star,y_star,pi_star,regime\n";
            for (double u : grid) {
                const mrf::MaxDependencePoint p = mrf::maximal_path(params, u);
                csv << format_double(p.u) << ',' << format_double(p.xStar) << ','
                    << format_double(u * u / p.xStar) << ','
                    << format_double(p.piStar) << ',' << to_string(p.regime)
                    << '\n';
            }
            target.write(csv.str());
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const mrf::Error& e) {
        const json err = {{"code", std::string(mrf::error_code_name(e.code()))},
                          {"message", e.what()},
                          {"context", e.context()}};
        std::cerr << err.dump() << std::endl;
        return mrf::error_exit_status(e.code());
    } catch (const std::exception& e) {
        const json err = {
            {"code", "InternalError"}, {"message", e.what()}, {"context", ""}};
        std::cerr << err.dump() << std::endl;
        return 1;
    }
}
