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

#include "specboson/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "specboson/errors.hpp"

namespace specboson::cli {

namespace {

const json& require(const json& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InputError(std::string(where) + " is missing \"" + key + "\"");
    }
    return obj.at(key);
}

double number(const json& value, const char* what) {
    if (!value.is_number()) {
        throw InputError(std::string(what) + " must be a number");
    }
    return value.get<double>();
}

std::uint64_t count(const json& value, const char* what) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        throw InputError(std::string(what) + " must be a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

Occupation parse_occupation(const json& value) {
    if (!value.is_array()) {
        throw InputError("occupation must be an array of counts");
    }
    std::vector<unsigned> counts;
    for (const auto& c : value) {
        counts.push_back(static_cast<unsigned>(count(c, "occupation entry")));
    }
    return Occupation(std::move(counts));
}

json occupation_to_json(const Occupation& o) { return json(o.counts()); }

SpectralSpec parse_spectrum(const json& obj) {
    if (obj.contains("gaussian")) {
        const auto& g = obj.at("gaussian");
        if (!g.is_object()) {
            throw InputError("\"gaussian\" must be an object");
        }
        GaussianWavepacket packet;
        packet.mu = g.contains("mu") ? number(g.at("mu"), "mu") : 0.0;
        packet.sigma = number(require(g, "sigma", "gaussian"), "sigma");
        packet.tau = g.contains("tau") ? number(g.at("tau"), "tau") : 0.0;
        if (!(packet.sigma > 0.0)) {
            throw InputError("gaussian sigma must be positive");
        }
        return packet;
    }
    if (obj.contains("coefficients")) {
        const auto& c = obj.at("coefficients");
        if (!c.is_array()) {
            throw InputError("\"coefficients\" must be an array");
        }
        std::vector<Complex> row;
        for (const auto& z : c) {
            row.push_back(parse_complex(z));
        }
        return CoefficientRow(std::move(row));
    }
    throw InputError("spectrum needs \"gaussian\" or \"coefficients\"");
}

json spectrum_to_json(const SpectralSpec& spec) {
    if (const auto* g = std::get_if<GaussianWavepacket>(&spec)) {
        return json{{"gaussian", {{"mu", g->mu}, {"sigma", g->sigma}, {"tau", g->tau}}}};
    }
    json row = json::array();
    for (const auto& z : std::get<CoefficientRow>(spec).coefficients()) {
        row.push_back(complex_to_json(z));
    }
    return json{{"coefficients", row}};
}

MixedPhoton parse_photon(const json& obj) {
    if (!obj.is_object()) {
        throw InputError("each photon must be an object");
    }
    if (!obj.contains("mixture")) {
        return MixedPhoton::pure(parse_spectrum(obj));
    }
    const auto& mixture = obj.at("mixture");
    if (!mixture.is_array() || mixture.empty()) {
        throw InputError("\"mixture\" must be a non-empty array");
    }
    std::vector<MixtureComponent> components;
    for (const auto& c : mixture) {
        components.push_back({number(require(c, "probability", "mixture component"), "probability"),
                              parse_spectrum(c)});
    }
    return MixedPhoton(std::move(components));
}

json photon_to_json(const MixedPhoton& photon) {
    if (photon.components().size() == 1 && photon.components().front().probability == 1.0) {
        return spectrum_to_json(photon.components().front().spectrum);
    }
    json mixture = json::array();
    for (const auto& c : photon.components()) {
        json entry = spectrum_to_json(c.spectrum);
        entry["probability"] = c.probability;
        mixture.push_back(entry);
    }
    return json{{"mixture", mixture}};
}

NetworkSpec parse_network(const json& obj) {
    if (!obj.is_object()) {
        throw InputError("\"network\" must be an object");
    }
    NetworkSpec spec;
    if (obj.contains("unitary")) {
        spec.preset = "unitary";
        spec.unitary = parse_matrix(obj.at("unitary"));
        spec.modes = spec.unitary->rows();
        return spec;
    }
    spec.preset = require(obj, "preset", "network").get<std::string>();
    if (spec.preset == "beamsplitter") {
        spec.modes = 2;
    } else if (spec.preset == "dft" || spec.preset == "random") {
        spec.modes = count(require(obj, "modes", "network"), "modes");
        if (spec.preset == "random" && obj.contains("seed")) {
            spec.seed = count(obj.at("seed"), "seed");
        }
    } else {
        throw InputError("unknown network preset \"" + spec.preset + "\"");
    }
    return spec;
}

json network_to_json(const NetworkSpec& spec) {
    if (spec.preset == "unitary") {
        return json{{"unitary", matrix_to_json(*spec.unitary)}};
    }
    json out{{"preset", spec.preset}, {"modes", spec.modes}};
    if (spec.preset == "random") {
        out["seed"] = spec.seed;
    }
    return out;
}

}  // namespace

Complex parse_complex(const json& value) {
    if (value.is_number()) {
        return {value.get<double>(), 0.0};
    }
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        return {value[0].get<double>(), value[1].get<double>()};
    }
    throw InputError("complex numbers are written as [re, im]");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

ComplexMatrix parse_matrix(const json& rows) {
    if (!rows.is_array() || rows.empty()) {
        throw InputError("matrix must be a non-empty array of rows");
    }
    const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
    std::vector<Complex> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != cols) {
            throw InputError("matrix rows must be arrays of equal length");
        }
        for (const auto& z : row) {
            entries.push_back(parse_complex(z));
        }
    }
    return ComplexMatrix(rows.size(), cols, std::move(entries));
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (const auto& z : m.row(r)) {
            row.push_back(complex_to_json(z));
        }
        rows.push_back(row);
    }
    return rows;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

ExperimentConfig parse_config(const json& doc, const Overrides& overrides) {
    if (!doc.is_object()) {
        throw InputError("config must be a JSON object");
    }
    ExperimentConfig config;
    try {
        config.network = parse_network(require(doc, "network", "config"));
        if (overrides.seed) {
            config.network.seed = *overrides.seed;
        }

        const auto& photons = require(doc, "photons", "config");
        if (!photons.is_array() || photons.empty()) {
            throw InputError("\"photons\" must be a non-empty array");
        }
        for (const auto& p : photons) {
            config.photons.push_back(parse_photon(p));
        }
        const std::size_t n = config.photons.size();

        if (doc.contains("input_modes")) {
            for (const auto& mode : doc.at("input_modes")) {
                const std::uint64_t one_based = count(mode, "input mode");
                if (one_based == 0 || one_based > config.network.modes) {
                    throw InputError("input modes are 1-based and must lie within the network");
                }
                config.input_modes.push_back(one_based - 1);
            }
            if (config.input_modes.size() != n) {
                throw InputError("need one input mode per photon");
            }
        } else {
            if (n > config.network.modes) {
                throw InputError(std::to_string(n) + " photons do not fit a " + std::to_string(config.network.modes) +
                                 "-mode network");
            }
            config.input_modes = default_input_modes(n);
        }
        auto sorted = config.input_modes;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw InputError("input modes must be distinct");
        }

        const std::string detector = doc.value("detector", std::string("nonresolved"));
        if (detector == "resolved") {
            config.detector = DetectorModel::resolved;
        } else if (detector != "nonresolved") {
            throw InputError("detector must be \"resolved\" or \"nonresolved\"");
        }

        if (doc.contains("query")) {
            const auto& q = doc.at("query");
            if (q.is_string() && q.get<std::string>() == "distribution") {
                config.query = DistributionQuery{};
            } else if (q.is_object() && q.contains("signature")) {
                if (config.detector != DetectorModel::nonresolved) {
                    throw InputError("signature queries need the nonresolved detector");
                }
                config.query = parse_occupation(q.at("signature"));
            } else if (q.is_object() && q.contains("resolved")) {
                if (config.detector != DetectorModel::resolved) {
                    throw InputError("resolved-outcome queries need the resolved detector");
                }
                ResolvedOutcome outcome;
                for (const auto& s : q.at("resolved")) {
                    outcome.per_basis.push_back(parse_occupation(s));
                }
                config.query = outcome;
            } else {
                throw InputError("query must be \"distribution\", {\"signature\": ...} or {\"resolved\": ...}");
            }
        }

        config.eps = doc.contains("eps") ? number(doc.at("eps"), "eps") : 0.0;
        if (overrides.eps) {
            config.eps = *overrides.eps;
        }
        if (!(config.eps >= 0.0)) {
            throw InputError("eps must be non-negative");
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("config: ") + e.what());
    }
    return config;
}

json to_json(const ExperimentConfig& config) {
    json photons = json::array();
    for (const auto& p : config.photons) {
        photons.push_back(photon_to_json(p));
    }
    json inputs = json::array();
    for (std::size_t mode : config.input_modes) {
        inputs.push_back(mode + 1);
    }
    json query;
    if (const auto* m = std::get_if<Occupation>(&config.query)) {
        query = json{{"signature", occupation_to_json(*m)}};
    } else if (const auto* s = std::get_if<ResolvedOutcome>(&config.query)) {
        json parts = json::array();
        for (const auto& o : s->per_basis) {
            parts.push_back(occupation_to_json(o));
        }
        query = json{{"resolved", parts}};
    } else {
        query = "distribution";
    }
    return json{{"network", network_to_json(config.network)},
                {"photons", photons},
                {"input_modes", inputs},
                {"detector", config.detector == DetectorModel::resolved ? "resolved" : "nonresolved"},
                {"query", query},
                {"eps", config.eps}};
}

Interferometer build_network(const NetworkSpec& spec) {
    if (spec.preset == "unitary") {
        return Interferometer(*spec.unitary);
    }
    if (spec.preset == "beamsplitter") {
        return make_beamsplitter_50_50();
    }
    if (spec.preset == "dft") {
        return make_dft(spec.modes);
    }
    if (spec.preset == "random") {
        return make_random_unitary(spec.modes, spec.seed);
    }
    throw InputError("unknown network preset \"" + spec.preset + "\"");
}

bool has_mixtures(const ExperimentConfig& config) {
    return std::any_of(config.photons.begin(), config.photons.end(),
                       [](const MixedPhoton& p) { return p.components().size() > 1; });
}

}  // namespace specboson::cli
