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

#ifndef SPECBOSON_SPECTRA_HPP
#define SPECBOSON_SPECTRA_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "specboson/matrix.hpp"
#include "specboson/network.hpp"

namespace specboson {

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kRankTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-9;
inline constexpr std::size_t kDefaultConfigurationCap = 10'000'000;

/**
 * Gaussian single-photon wavepacket
 *
 *   psi(w) = (2 pi sigma^2)^(-1/4) exp(-(w - mu)^2 / (4 sigma^2)) exp(i w tau)
 *
 * normalized so that the integral of |psi|^2 is one. The delay tau only
 * contributes a frequency-dependent phase.
 */
struct GaussianWavepacket {
    double mu = 0.0;
    double sigma = 1.0;
    double tau = 0.0;

    /// psi evaluated at one frequency.
    Complex amplitude(double omega) const;
};

/// A photon given directly by its coefficients in a caller-declared
/// orthonormal basis. Must have unit Euclidean norm.
class CoefficientRow {
  public:
    explicit CoefficientRow(std::vector<Complex> coefficients);
    const std::vector<Complex>& coefficients() const { return coefficients_; }
    std::size_t size() const { return coefficients_.size(); }

  private:
    std::vector<Complex> coefficients_;
};

using SpectralSpec = std::variant<GaussianWavepacket, CoefficientRow>;

/**
 * Coefficients of n photons in an N-dimensional orthonormal spectral basis.
 * Row p is photon p, column k is basis function k:
 *
 *   psi_p = sum_k lambda(p, k) xi_k,    lambda(p, k) = <xi_k | psi_p>.
 *
 * Every row has unit norm.
 */
class LambdaMatrix {
  public:
    explicit LambdaMatrix(ComplexMatrix coefficients);

    std::size_t photons() const { return coefficients_.rows(); }
    std::size_t basis_size() const { return coefficients_.cols(); }
    Complex operator()(std::size_t photon, std::size_t basis) const { return coefficients_(photon, basis); }
    const ComplexMatrix& matrix() const { return coefficients_; }

  private:
    ComplexMatrix coefficients_;
};

/// Assignment of one basis index (0-based) to each photon.
struct SpectralConfiguration {
    std::vector<std::size_t> basis;

    friend auto operator<=>(const SpectralConfiguration&, const SpectralConfiguration&) = default;
};

struct WeightedConfiguration {
    SpectralConfiguration config;
    Complex chi;
};

/// Inner product of a with b, conjugate-linear in a. Gaussians use the
/// closed form; coefficient rows use the Hermitian dot product and must
/// share a length. Mixing the two throws RepresentationError.
Complex overlap(const SpectralSpec& a, const SpectralSpec& b);
Complex gaussian_overlap(const GaussianWavepacket& a, const GaussianWavepacket& b);

/// G(a, b) = overlap(photon a, photon b).
ComplexMatrix gram_matrix(std::span<const SpectralSpec> photons);

/**
 * Factor G = lambda lambda^dagger by Cholesky in photon order. Photon p
 * introduces a new basis direction only if its residual after projecting
 * out the earlier directions has squared norm above kRankTolerance, so the
 * basis size equals the numerical rank of G and the result is
 * lower-staircase.
 *
 * Throws InputError if G is not Hermitian with unit diagonal, or is not
 * positive semidefinite within kPsdTolerance.
 */
LambdaMatrix orthonormal_decomposition(const ComplexMatrix& gram);

/**
 * Coefficient matrix for a set of pure photons. Coefficient rows are used
 * verbatim in their declared basis. Gaussians get the basis induced by
 * Gram-Schmidt in photon order; since <psi_a|psi_b> = sum_k conj(l_ak) l_bk
 * this factors the transpose of the Gram matrix.
 */
LambdaMatrix lambda_from_photons(std::span<const SpectralSpec> photons);

/// prod_p lambda(p, v_p).
Complex chi(const LambdaMatrix& lambda, const SpectralConfiguration& v);

/**
 * All configurations v with |chi(v)| > eps, in lexicographic order of v.
 * Only nonzero coefficients of each photon are visited, and for eps > 0
 * branches whose best achievable |chi| is at most eps are cut early.
 * Throws CapacityError if more than max_count configurations would be
 * produced.
 */
std::vector<WeightedConfiguration> enumerate_configurations(const LambdaMatrix& lambda, double eps = 0.0,
                                                            std::size_t max_count = kDefaultConfigurationCap);

/**
 * T(v, k) for each basis index k: the input occupation over `modes` spatial
 * modes carried by basis function k, where photon p enters at
 * input_modes[p]. Summing the result over k gives the full input.
 */
std::vector<Occupation> t_sets(const SpectralConfiguration& v, std::span<const std::size_t> input_modes,
                               std::size_t modes, std::size_t basis_size);

}  // namespace specboson

#endif
