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

#include "specboson/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specboson/errors.hpp"

namespace specboson {

double FockState::norm_squared() const {
    double sum = 0.0;
    for (const auto& [state, amp] : amplitudes_) {
        sum += std::norm(amp);
    }
    return sum;
}

FockState fock_evolve(const Interferometer& u, const LambdaMatrix& lambda, std::span<const std::size_t> inputs) {
    const std::size_t m = u.modes();
    const std::size_t n = lambda.photons();
    const std::size_t basis = lambda.basis_size();
    if (n > kOracleMaxPhotons || m > kOracleMaxModes || basis > kOracleMaxBasis) {
        throw CapacityError("oracle limited to " + std::to_string(kOracleMaxPhotons) + " photons, " +
                            std::to_string(kOracleMaxModes) + " modes and " + std::to_string(kOracleMaxBasis) +
                            " basis functions");
    }
    if (inputs.size() != n) {
        throw DimensionError("input mode count does not match photon count");
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (inputs[p] >= m) {
            throw ConfigurationError("input mode out of range");
        }
        if (std::count(inputs.begin(), inputs.end(), inputs[p]) > 1) {
            throw ConfigurationError("input modes must be distinct");
        }
    }

    // Operator products keyed by the sorted list of joint modes they create.
    std::map<std::vector<std::size_t>, Complex> products{{{}, Complex{1.0, 0.0}}};
    for (std::size_t p = 0; p < n; ++p) {
        std::map<std::vector<std::size_t>, Complex> next;
        for (const auto& [created, amp] : products) {
            for (std::size_t k = 0; k < basis; ++k) {
                const Complex coefficient = lambda(p, k);
                if (coefficient == Complex{0.0, 0.0}) {
                    continue;
                }
                for (std::size_t s = 0; s < m; ++s) {
                    const Complex transfer = u(s, inputs[p]);
                    if (transfer == Complex{0.0, 0.0}) {
                        continue;
                    }
                    std::vector<std::size_t> key = created;
                    const std::size_t joint = s * basis + k;
                    key.insert(std::upper_bound(key.begin(), key.end(), joint), joint);
                    next[std::move(key)] += amp * coefficient * transfer;
                }
            }
        }
        products = std::move(next);
    }

    std::map<JointBasisState, Complex> amplitudes;
    for (const auto& [created, amp] : products) {
        JointBasisState occupation(m * basis, 0);
        for (std::size_t joint : created) {
            ++occupation[joint];
        }
        // (a^dag)^c |0> = sqrt(c!) |c>
        double factor = 1.0;
        for (unsigned c : occupation) {
            for (unsigned f = 2; f <= c; ++f) {
                factor *= f;
            }
        }
        const Complex value = amp * std::sqrt(factor);
        if (std::abs(value) >= kOraclePruneThreshold) {
            amplitudes.emplace(std::move(occupation), value);
        }
    }
    return FockState(m, basis, std::move(amplitudes));
}

double oracle_probability(const FockState& state, const Occupation& signature) {
    if (signature.modes() != state.modes()) {
        throw ConfigurationError("signature length does not match the oracle state");
    }
    double total = 0.0;
    for (const auto& [occupation, amp] : state.amplitudes()) {
        bool match = true;
        for (std::size_t s = 0; s < state.modes() && match; ++s) {
            unsigned count = 0;
            for (std::size_t k = 0; k < state.basis_size(); ++k) {
                count += occupation[state.joint_index(s, k)];
            }
            match = count == signature[s];
        }
        if (match) {
            total += std::norm(amp);
        }
    }
    return total;
}

double oracle_probability(const FockState& state, const ResolvedOutcome& outcome) {
    if (outcome.per_basis.size() != state.basis_size()) {
        throw DimensionError("resolved outcome basis size does not match the oracle state");
    }
    JointBasisState key(state.modes() * state.basis_size(), 0);
    for (std::size_t k = 0; k < state.basis_size(); ++k) {
        if (outcome.per_basis[k].modes() != state.modes()) {
            throw ConfigurationError("outcome occupation length does not match the oracle state");
        }
        for (std::size_t s = 0; s < state.modes(); ++s) {
            key[state.joint_index(s, k)] = outcome.per_basis[k][s];
        }
    }
    const auto it = state.amplitudes().find(key);
    return it == state.amplitudes().end() ? 0.0 : std::norm(it->second);
}

}  // namespace specboson
