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

#include <iostream>

#include "CLI11.hpp"
#include "specboson/cli/commands.hpp"

int main(int argc, char** argv) {
    using specboson::cli::Invocation;

    CLI::App app{"Exact output statistics of linear-optical networks fed with spectrally structured photons"};
    app.require_subcommand(1);

    Invocation inv;
    double eps = 0.0;
    std::uint64_t seed = 0;
    std::string grid;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", inv.output_path, "Results path, or stdout")->default_val("stdout");
    };
    auto add_engine = [&](CLI::App* sub) {
        sub->add_option("--config", inv.config_path, "Experiment config (JSON)")->required();
        sub->add_option("--eps", eps, "Drop spectral configurations with |chi| <= eps");
        sub->add_option("--seed", seed, "Seed for the random network preset");
        add_common(sub);
    };

    auto* distribution = app.add_subcommand("distribution", "Probabilities for the configured query");
    add_engine(distribution);
    auto* verify = app.add_subcommand("verify", "Compare the engine with the brute-force Fock-space oracle");
    add_engine(verify);
    auto* hom = app.add_subcommand("hom-scan", "Two-photon coincidence probability over a distinguishability grid");
    hom->add_option("--alpha-grid", grid, "start:stop:count")->default_val("0:1:11");
    add_common(hom);
    auto* permanent = app.add_subcommand("permanent", "Permanent of a square complex matrix");
    permanent->add_option("--config,matrix", inv.config_path, "Matrix file (JSON)")->required();
    add_common(permanent);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return specboson::cli::kExitInput;
    }

    for (auto* sub : app.get_subcommands()) {
        inv.command = sub->get_name();
        if (sub == distribution || sub == verify) {
            if (sub->count("--eps") > 0) {
                inv.eps = eps;
            }
            if (sub->count("--seed") > 0) {
                inv.seed = seed;
            }
        }
        if (sub == hom) {
            inv.alpha_grid = grid;
        }
    }
    return specboson::cli::run(inv, std::cout, std::cerr);
}
