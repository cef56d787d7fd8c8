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

#ifndef SPECBOSON_NETWORK_HPP
#define SPECBOSON_NETWORK_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "specboson/matrix.hpp"

namespace specboson {

inline constexpr double kUnitarityTolerance = 1e-10;

/// Photon counts over spatial modes. Used for input configurations (T),
/// output configurations (S) and measurement signatures (M).
class Occupation {
  public:
    Occupation() = default;
    explicit Occupation(std::vector<unsigned> counts) : counts_(std::move(counts)) {}
    Occupation(std::initializer_list<unsigned> counts) : counts_(counts) {}

    /// All-zero occupation over the given number of modes.
    static Occupation empty(std::size_t modes) { return Occupation(std::vector<unsigned>(modes, 0)); }

    std::size_t modes() const { return counts_.size(); }
    unsigned operator[](std::size_t mode) const { return counts_[mode]; }
    unsigned& operator[](std::size_t mode) { return counts_[mode]; }
    const std::vector<unsigned>& counts() const { return counts_; }

    /// Total photon number.
    unsigned total() const;
    /// Every mode holds at most one photon.
    bool collision_free() const;
    /// Product of count! over modes.
    double factorial_product() const;

    friend auto operator<=>(const Occupation&, const Occupation&) = default;

  private:
    std::vector<unsigned> counts_;
};

/// An m-mode linear-optical network. The matrix acts on column vectors of
/// mode amplitudes: a photon entering mode t leaves mode s with amplitude
/// U(s, t).
class Interferometer {
  public:
    /// Throws DimensionError for non-square or empty matrices and InputError
    /// when max |U U^dagger - I| exceeds the unitarity tolerance.
    explicit Interferometer(ComplexMatrix unitary, double tolerance = kUnitarityTolerance);

    std::size_t modes() const { return unitary_.rows(); }
    const ComplexMatrix& matrix() const { return unitary_; }
    Complex operator()(std::size_t out, std::size_t in) const { return unitary_(out, in); }

  private:
    ComplexMatrix unitary_;
};

/// max |(U U^dagger - I)_{ab}|.
double unitarity_defect(const ComplexMatrix& u);

/**
 * The k x k matrix U_{S,T}: column j of U repeated T_j times, then row i of
 * that repeated S_i times, both in ascending mode order.
 */
ComplexMatrix submatrix(const Interferometer& u, const Occupation& out, const Occupation& in);

/// Transition amplitude Per(U_{S,T}) / sqrt(prod S_i! prod T_j!).
Complex amplitude_ideal(const Interferometer& u, const Occupation& out, const Occupation& in);

Interferometer make_beamsplitter_50_50();

/// Discrete Fourier transform, entry (j, k) = exp(2 pi i j k / m) / sqrt(m).
Interferometer make_dft(std::size_t modes);

/// Haar-random unitary from Gram-Schmidt on i.i.d. complex normals.
/// Deterministic for a given seed.
Interferometer make_random_unitary(std::size_t modes, std::uint64_t seed);

/// Number of occupations of n photons over m modes, C(n+m-1, n). Saturates
/// at UINT64_MAX.
std::uint64_t occupation_count(std::size_t modes, unsigned photons);

/// Every occupation of `photons` over `modes` modes, in lexicographic
/// order of the count vectors.
std::vector<Occupation> enumerate_occupations(std::size_t modes, unsigned photons);

/// Occupation with one photon in each listed mode (repeats add up).
Occupation occupation_from_modes(std::size_t modes, const std::vector<std::size_t>& mode_list);

}  // namespace specboson

#endif
