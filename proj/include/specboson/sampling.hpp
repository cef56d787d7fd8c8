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

#ifndef SPECBOSON_SAMPLING_HPP
#define SPECBOSON_SAMPLING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "specboson/network.hpp"
#include "specboson/spectra.hpp"

namespace specboson {

inline constexpr std::uint64_t kDefaultOutcomeCap = 1'000'000;
inline constexpr std::uint64_t kDefaultMixtureTermCap = 100'000;
inline constexpr double kMixtureWeightTolerance = 1e-10;

enum class DetectorModel { resolved, nonresolved };

struct EngineOptions {
    /// Configurations v with |chi(v)| <= eps are dropped. Zero is exact.
    double eps = 0.0;
    std::size_t max_configurations = kDefaultConfigurationCap;
    std::uint64_t max_outcomes = kDefaultOutcomeCap;
    std::uint64_t max_mixture_terms = kDefaultMixtureTermCap;
};

/// Spectrally resolved detection outcome: one spatial occupation per
/// spectral basis function.
struct ResolvedOutcome {
    std::vector<Occupation> per_basis;

    unsigned total() const;
    /// Sum over basis functions; what a non-resolving detector would see.
    Occupation spatial_marginal() const;
    /// Photon count in each basis function.
    std::vector<unsigned> profile() const;

    friend auto operator<=>(const ResolvedOutcome&, const ResolvedOutcome&) = default;
};

struct SignatureProbability {
    Occupation signature;
    double probability;
};

struct ResolvedProbability {
    ResolvedOutcome outcome;
    double probability;
};

/// Photon p in spatial mode p.
std::vector<std::size_t> default_input_modes(std::size_t photons);

/**
 * Amplitude of a spectrally resolved outcome:
 *
 *   gamma(S) = sum_v chi(v) prod_k A(S_k, T(v, k))
 *
 * where A is the normalized single-spectral-mode transition amplitude
 * (amplitude_ideal). Only configurations whose per-basis photon counts match
 * the outcome contribute.
 */
Complex amplitude_resolved(const Interferometer& u, const LambdaMatrix& lambda, std::span<const std::size_t> inputs,
                           const ResolvedOutcome& outcome, const EngineOptions& options = {});

double probability_resolved(const Interferometer& u, const LambdaMatrix& lambda, std::span<const std::size_t> inputs,
                            const ResolvedOutcome& outcome, const EngineOptions& options = {});

/**
 * Every split of the signature M into per-basis occupations with the given
 * per-basis photon counts. Modes are filled in ascending order and, within a
 * mode, larger shares go to lower basis indices first. An infeasible profile
 * yields nothing.
 */
std::vector<ResolvedOutcome> enumerate_partitions(const Occupation& signature, std::span<const unsigned> profile);

/**
 * Probability that non-resolving detectors report M:
 *
 *   P(M) = sum_{S : sum_k S_k = M} | sum_v chi(v) prod_k A(S_k, T(v, k)) |^2
 *
 * Configurations are grouped by their per-basis photon counts; each group
 * only interferes with the partitions of M sharing those counts.
 */
double probability_nonresolved(const Interferometer& u, const LambdaMatrix& lambda,
                               std::span<const std::size_t> inputs, const Occupation& signature,
                               const EngineOptions& options = {});

/// |A(M, T)|^2, the fully indistinguishable limit.
double probability_indistinguishable_fast(const Interferometer& u, const Occupation& signature,
                                          const Occupation& input);

/// Per(|U_{M,T}|^2) with the square taken entrywise, the fully
/// distinguishable limit. M and T must be collision-free.
double probability_distinguishable_fast(const Interferometer& u, const Occupation& signature,
                                        const Occupation& input);

/// P(M) for every signature of n photons, in lexicographic order of M.
std::vector<SignatureProbability> distribution_nonresolved(const Interferometer& u, const LambdaMatrix& lambda,
                                                           std::span<const std::size_t> inputs,
                                                           const EngineOptions& options = {});

/// Every resolved outcome compatible with some configuration, in ascending
/// outcome order. Outcomes left out have probability exactly zero.
std::vector<ResolvedProbability> distribution_resolved(const Interferometer& u, const LambdaMatrix& lambda,
                                                       std::span<const std::size_t> inputs,
                                                       const EngineOptions& options = {});

struct MixtureComponent {
    double probability;
    SpectralSpec spectrum;
};

/// A spectrally mixed photon, sum_j p_j |psi_j><psi_j|.
class MixedPhoton {
  public:
    /// Throws InputError unless all p_j >= 0 and they sum to one.
    explicit MixedPhoton(std::vector<MixtureComponent> components);
    static MixedPhoton pure(SpectralSpec spectrum);

    const std::vector<MixtureComponent>& components() const { return components_; }

  private:
    std::vector<MixtureComponent> components_;
};

/// Product of component counts; saturates at UINT64_MAX.
std::uint64_t mixture_term_count(std::span<const MixedPhoton> photons);

/// Calls visit(specs, weight) for every tuple of mixture components with
/// non-zero weight prod_p p_{p, j_p}, last photon varying fastest. Throws
/// CapacityError past options.max_mixture_terms.
void for_each_mixture_term(std::span<const MixedPhoton> photons, const EngineOptions& options,
                           const std::function<void(std::span<const SpectralSpec>, double)>& visit);

/**
 * Mixed-state probabilities: the pure-photon probability averaged over every
 * tuple of mixture components, weighted by prod_p p_{p, j_p}. Each tuple gets
 * its own lambda from lambda_from_photons. Resolved outcomes are only
 * meaningful in a basis shared by all tuples, so the resolved overloads
 * require every component to be a coefficient row.
 */
double probability_mixed(const Interferometer& u, std::span<const MixedPhoton> photons,
                         std::span<const std::size_t> inputs, const Occupation& signature,
                         const EngineOptions& options = {});
double probability_mixed(const Interferometer& u, std::span<const MixedPhoton> photons,
                         std::span<const std::size_t> inputs, const ResolvedOutcome& outcome,
                         const EngineOptions& options = {});

std::vector<SignatureProbability> distribution_mixed_nonresolved(const Interferometer& u,
                                                                 std::span<const MixedPhoton> photons,
                                                                 std::span<const std::size_t> inputs,
                                                                 const EngineOptions& options = {});
std::vector<ResolvedProbability> distribution_mixed_resolved(const Interferometer& u,
                                                             std::span<const MixedPhoton> photons,
                                                             std::span<const std::size_t> inputs,
                                                             const EngineOptions& options = {});

}  // namespace specboson

#endif
