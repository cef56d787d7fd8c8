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

#ifndef SPECBOSON_CLI_CONFIG_HPP
#define SPECBOSON_CLI_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "specboson/network.hpp"
#include "specboson/sampling.hpp"

namespace specboson::cli {

using nlohmann::json;

/// Network preset name plus parameters, or an explicit matrix.
struct NetworkSpec {
    std::string preset = "beamsplitter";  // beamsplitter | dft | random | unitary
    std::size_t modes = 2;
    std::uint64_t seed = 0;
    std::optional<ComplexMatrix> unitary;
};

struct DistributionQuery {};
using Query = std::variant<DistributionQuery, Occupation, ResolvedOutcome>;

struct ExperimentConfig {
    NetworkSpec network;
    std::vector<MixedPhoton> photons;
    /// 0-based; the JSON form is 1-based.
    std::vector<std::size_t> input_modes;
    DetectorModel detector = DetectorModel::nonresolved;
    Query query = DistributionQuery{};
    double eps = 0.0;
};

/// Command-line overrides applied on top of the file.
struct Overrides {
    std::optional<double> eps;
    std::optional<std::uint64_t> seed;
};

/// Parses a config document; schema violations throw InputError, numeric
/// problems throw whatever the library constructors throw.
ExperimentConfig parse_config(const json& doc, const Overrides& overrides = {});

/// The config with every default filled in, in the same schema as the input.
json to_json(const ExperimentConfig& config);

Interferometer build_network(const NetworkSpec& spec);

/// True if any photon has more than one mixture component.
bool has_mixtures(const ExperimentConfig& config);

Complex parse_complex(const json& value);
json complex_to_json(Complex z);
ComplexMatrix parse_matrix(const json& rows);
json matrix_to_json(const ComplexMatrix& m);

/// Reads and parses a JSON file; I/O and syntax failures throw InputError.
json load_json_file(const std::string& path);

}  // namespace specboson::cli

#endif
