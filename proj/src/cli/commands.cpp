// Copyright 2026 The specboson Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "specboson/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "specboson/errors.hpp"
#include "specboson/oracle.hpp"
#include "specboson/permanent.hpp"

namespace specboson::cli {

namespace {

json outcome_to_json(const Occupation& m) { return json(m.counts()); }

json outcome_to_json(const ResolvedOutcome& s) {
    json parts = json::array();
    for (const auto& o : s.per_basis) {
        parts.push_back(json(o.counts()));
    }
    return parts;
}

std::vector<SpectralSpec> pure_specs(const ExperimentConfig& config) {
    std::vector<SpectralSpec> specs;
    for (const auto& p : config.photons) {
        specs.push_back(p.components().front().spectrum);
    }
    return specs;
}

EngineOptions engine_options(const ExperimentConfig& config) {
    EngineOptions options;
    options.eps = config.eps;
    return options;
}

void require_declared_basis(const ExperimentConfig& config) {
    if (config.detector != DetectorModel::resolved || !has_mixtures(config)) {
        return;
    }
    for (const auto& p : config.photons) {
        for (const auto& c : p.components()) {
            if (!std::holds_alternative<CoefficientRow>(c.spectrum)) {
                throw RepresentationError(
                    "resolved detection of mixed photons needs coefficient rows in a declared basis");
            }
        }
    }
}

// Engine results for the configured query, as (outcome json, probability,
// oracle lookup) triples.
struct EngineOutcome {
    json outcome;
    double probability;
    std::variant<Occupation, ResolvedOutcome> key;
};

std::vector<EngineOutcome> evaluate(const Interferometer& u, const ExperimentConfig& config) {
    const EngineOptions options = engine_options(config);
    const auto& inputs = config.input_modes;
    std::vector<EngineOutcome> out;
    const bool mixed = has_mixtures(config);
    const auto specs = pure_specs(config);

    if (const auto* m = std::get_if<Occupation>(&config.query)) {
        const double p = mixed ? probability_mixed(u, config.photons, inputs, *m, options)
                               : probability_nonresolved(u, lambda_from_photons(specs), inputs, *m, options);
        out.push_back({outcome_to_json(*m), p, *m});
        return out;
    }
    if (const auto* s = std::get_if<ResolvedOutcome>(&config.query)) {
        const double p = mixed ? probability_mixed(u, config.photons, inputs, *s, options)
                               : probability_resolved(u, lambda_from_photons(specs), inputs, *s, options);
        out.push_back({outcome_to_json(*s), p, *s});
        return out;
    }
    if (config.detector == DetectorModel::nonresolved) {
        const auto dist = mixed ? distribution_mixed_nonresolved(u, config.photons, inputs, options)
                                : distribution_nonresolved(u, lambda_from_photons(specs), inputs, options);
        for (const auto& e : dist) {
            out.push_back({outcome_to_json(e.signature), e.probability, e.signature});
        }
        return out;
    }
    const auto dist = mixed ? distribution_mixed_resolved(u, config.photons, inputs, options)
                            : distribution_resolved(u, lambda_from_photons(specs), inputs, options);
    for (const auto& e : dist) {
        out.push_back({outcome_to_json(e.outcome), e.probability, e.outcome});
    }
    return out;
}

json engine_metadata(const ExperimentConfig& config) {
    const EngineOptions options = engine_options(config);
    std::size_t visited = 0;
    std::size_t basis = 0;
    std::uint64_t terms = 0;
    for_each_mixture_term(config.photons, options, [&](std::span<const SpectralSpec> specs, double) {
        const auto lambda = lambda_from_photons(specs);
        visited += enumerate_configurations(lambda, options.eps, options.max_configurations).size();
        basis = std::max(basis, lambda.basis_size());
        ++terms;
    });
    return json{{"eps", config.eps},
                {"exact", config.eps == 0.0},
                {"configurations", visited},
                {"basis_size", basis},
                {"mixture_terms", terms},
                {"photons", config.photons.size()},
                {"modes", config.network.modes},
                {"detector", config.detector == DetectorModel::resolved ? "resolved" : "nonresolved"}};
}

}  // namespace

std::vector<double> AlphaGrid::points() const {
    std::vector<double> out;
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(i + 1 == count ? stop
                                     : start + (stop - start) * static_cast<double>(i) /
                                                   static_cast<double>(count - 1));
    }
    return out;
}

std::string AlphaGrid::to_string() const {
    std::ostringstream s;
    s.precision(17);
    s << start << ":" << stop << ":" << count;
    return s.str();
}

AlphaGrid parse_alpha_grid(const std::string& text) {
    AlphaGrid grid;
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos) {
        throw InputError("alpha grid must look like start:stop:count");
    }
    try {
        std::size_t used = 0;
        const std::string a = text.substr(0, first);
        const std::string b = text.substr(first + 1, second - first - 1);
        const std::string c = text.substr(second + 1);
        grid.start = std::stod(a, &used);
        if (used != a.size()) throw InputError("bad alpha grid start");
        grid.stop = std::stod(b, &used);
        if (used != b.size()) throw InputError("bad alpha grid stop");
        const long long n = std::stoll(c, &used);
        if (used != c.size() || n < 1) throw InputError("alpha grid count must be a positive integer");
        grid.count = static_cast<std::size_t>(n);
    } catch (const std::logic_error&) {
        throw InputError("alpha grid must look like start:stop:count");
    }
    for (double v : {grid.start, grid.stop}) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw InputError("alpha values must lie in [0, 1]");
        }
    }
    return grid;
}

double round_significant(double value) {
    if (!std::isfinite(value) || value == 0.0) {
        return value;
    }
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.15g", value);
    return std::strtod(buffer, nullptr);
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

CommandResult cmd_distribution(const ExperimentConfig& config) {
    require_declared_basis(config);
    const Interferometer u = build_network(config.network);
    json metadata = engine_metadata(config);

    json outcomes = json::array();
    double sum = 0.0;
    for (const auto& e : evaluate(u, config)) {
        outcomes.push_back(json{{"outcome", e.outcome}, {"probability", round_significant(e.probability)}});
        sum += e.probability;
    }
    metadata["outcome_count"] = outcomes.size();
    return {json{{"config", to_json(config)},
                 {"outcomes", outcomes},
                 {"sum", round_significant(sum)},
                 {"metadata", metadata}},
            kExitOk};
}

CommandResult cmd_verify(const ExperimentConfig& config) {
    require_declared_basis(config);
    const Interferometer u = build_network(config.network);

    struct WeightedState {
        double weight;
        FockState state;
    };
    std::vector<WeightedState> states;
    for_each_mixture_term(config.photons, engine_options(config), [&](std::span<const SpectralSpec> specs, double w) {
        states.push_back({w, fock_evolve(u, lambda_from_photons(specs), config.input_modes)});
    });

    json outcomes = json::array();
    double sum = 0.0;
    double oracle_sum = 0.0;
    double worst = 0.0;
    for (const auto& e : evaluate(u, config)) {
        double oracle = 0.0;
        for (const auto& [w, state] : states) {
            oracle += w * std::visit([&](const auto& key) { return oracle_probability(state, key); }, e.key);
        }
        const double deviation = std::abs(e.probability - oracle);
        worst = std::max(worst, deviation);
        sum += e.probability;
        oracle_sum += oracle;
        outcomes.push_back(json{{"outcome", e.outcome},
                                {"probability", round_significant(e.probability)},
                                {"oracle", round_significant(oracle)},
                                {"deviation", round_significant(deviation)}});
    }
    // A full distribution must also leave no oracle weight unaccounted for.
    double unlisted = 0.0;
    if (std::holds_alternative<DistributionQuery>(config.query)) {
        unlisted = std::abs(1.0 - oracle_sum);
        worst = std::max(worst, unlisted);
    }
    const bool passed = worst <= kVerifyTolerance;
    json metadata = engine_metadata(config);
    metadata["max_deviation"] = round_significant(worst);
    metadata["unlisted_oracle_mass"] = round_significant(unlisted);
    metadata["tolerance"] = kVerifyTolerance;
    metadata["passed"] = passed;
    return {json{{"config", to_json(config)},
                 {"outcomes", outcomes},
                 {"sum", round_significant(sum)},
                 {"metadata", metadata}},
            passed ? kExitOk : kExitVerification};
}

CommandResult cmd_hom_scan(const AlphaGrid& grid) {
    const Interferometer bs = make_beamsplitter_50_50();
    const std::vector<std::size_t> inputs{0, 1};
    const Occupation coincidence{1, 1};
    json outcomes = json::array();
    double worst = 0.0;
    for (double alpha : grid.points()) {
        if (!(alpha >= 0.0 && alpha <= 1.0)) {
            throw InputError("alpha values must lie in [0, 1]");
        }
        const auto lambda = orthonormal_decomposition(ComplexMatrix{{1.0, alpha}, {alpha, 1.0}});
        const double engine = probability_nonresolved(bs, lambda, inputs, coincidence);
        const double closed = (1.0 - alpha * alpha) / 2.0;
        worst = std::max(worst, std::abs(engine - closed));
        outcomes.push_back(json{{"alpha", alpha},
                                {"outcome", outcome_to_json(coincidence)},
                                {"probability", round_significant(engine)},
                                {"closed_form", round_significant(closed)},
                                {"difference", round_significant(engine - closed)}});
    }
    return {json{{"config",
                  {{"alpha_grid", grid.to_string()},
                   {"network", {{"preset", "beamsplitter"}, {"modes", 2}}},
                   {"input_modes", {1, 2}},
                   {"detector", "nonresolved"},
                   {"query", {{"signature", {1, 1}}}}}},
                 {"outcomes", outcomes},
                 {"metadata", {{"points", outcomes.size()}, {"max_abs_difference", round_significant(worst)}}}},
            kExitOk};
}

CommandResult cmd_permanent(const json& matrix_doc) {
    const json& rows = matrix_doc.is_object() && matrix_doc.contains("matrix") ? matrix_doc.at("matrix") : matrix_doc;
    const ComplexMatrix a = parse_matrix(rows);
    if (!a.all_finite()) {
        throw InputError("matrix has non-finite entries");
    }
    const Complex per = permanent_ryser(a);
    return {json{{"config", {{"matrix", matrix_to_json(a)}}},
                 {"permanent", json::array({round_significant(per.real()), round_significant(per.imag())})},
                 {"metadata", {{"dimension", a.rows()}, {"algorithm", "ryser-gray"}}}},
            kExitOk};
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const CapacityError*>(&e) != nullptr) {
        return kExitCapacity;
    }
    return kExitInput;
}

int run(const Invocation& invocation, std::ostream& out, std::ostream& err) {
    CommandResult result;
    try {
        const Overrides overrides{invocation.eps, invocation.seed};
        if (invocation.command == "distribution") {
            result = cmd_distribution(parse_config(load_json_file(invocation.config_path), overrides));
        } else if (invocation.command == "verify") {
            result = cmd_verify(parse_config(load_json_file(invocation.config_path), overrides));
        } else if (invocation.command == "hom-scan") {
            result = cmd_hom_scan(parse_alpha_grid(invocation.alpha_grid.value_or("0:1:11")));
        } else if (invocation.command == "permanent") {
            result = cmd_permanent(load_json_file(invocation.config_path));
        } else {
            throw InputError("unknown command \"" + invocation.command + "\"");
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }

    const std::string text = render(result.document);
    if (invocation.output_path.empty() || invocation.output_path == "stdout" || invocation.output_path == "-") {
        out << text;
    } else {
        std::ofstream file(invocation.output_path);
        if (!file || !(file << text)) {
            err << "error: cannot write " << invocation.output_path << "\n";
            return kExitInput;
        }
    }
    if (result.exit_code == kExitVerification) {
        err << "verification failed: max deviation " << result.document["metadata"]["max_deviation"] << "\n";
    }
    return result.exit_code;
}

}  // namespace specboson::cli
