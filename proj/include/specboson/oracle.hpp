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

#ifndef SPECBOSON_ORACLE_HPP
#define SPECBOSON_ORACLE_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "specboson/network.hpp"
#include "specboson/sampling.hpp"
#include "specboson/spectra.hpp"

namespace specboson {

inline constexpr std::size_t kOracleMaxPhotons = 6;
inline constexpr std::size_t kOracleMaxModes = 8;
inline constexpr std::size_t kOracleMaxBasis = 6;
inline constexpr double kOraclePruneThreshold = 1e-15;

/// Occupation numbers over the m*N joint (spatial, spectral) modes, spatial
/// major: joint mode s*N + k is spatial mode s in basis function k.
using JointBasisState = std::vector<unsigned>;

/// Sparse Fock-space state over joint modes.
class FockState {
  public:
    FockState(std::size_t modes, std::size_t basis_size, std::map<JointBasisState, Complex> amplitudes)
        : modes_(modes), basis_size_(basis_size), amplitudes_(std::move(amplitudes)) {}

    std::size_t modes() const { return modes_; }
    std::size_t basis_size() const { return basis_size_; }
    const std::map<JointBasisState, Complex>& amplitudes() const { return amplitudes_; }

    std::size_t joint_index(std::size_t spatial, std::size_t spectral) const { return spatial * basis_size_ + spectral; }
    double norm_squared() const;

  private:
    std::size_t modes_;
    std::size_t basis_size_;
    std::map<JointBasisState, Complex> amplitudes_;
};

/**
 * Brute-force evolution of prod_p (sum_k lambda(p,k) a^dag_{in_p, k}) |0>.
 * Every creation operator is replaced by its image sum_s U(s, in) a^dag_{s,k},
 * the product is expanded term by term, like terms are collected, and the
 * bosonic sqrt(n!) factors are applied. Uses no permanents.
 *
 * Limited to 6 photons, 8 modes and 6 basis functions (CapacityError).
 */
FockState fock_evolve(const Interferometer& u, const LambdaMatrix& lambda, std::span<const std::size_t> inputs);

/// Non-resolving detection: total weight on joint states whose spatial
/// marginal equals the signature.
double oracle_probability(const FockState& state, const Occupation& signature);

/// Resolving detection: weight of the single joint state matching outcome.
double oracle_probability(const FockState& state, const ResolvedOutcome& outcome);

}  // namespace specboson

#endif
