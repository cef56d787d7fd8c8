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

#include "specboson/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "specboson/errors.hpp"
#include "specboson/permanent.hpp"

namespace specboson {

unsigned Occupation::total() const {
    unsigned n = 0;
    for (unsigned c : counts_) {
        n += c;
    }
    return n;
}

bool Occupation::collision_free() const {
    return std::all_of(counts_.begin(), counts_.end(), [](unsigned c) { return c <= 1; });
}

double Occupation::factorial_product() const {
    double product = 1.0;
    for (unsigned c : counts_) {
        for (unsigned f = 2; f <= c; ++f) {
            product *= f;
        }
    }
    return product;
}

double unitarity_defect(const ComplexMatrix& u) {
    return max_abs_difference(u * u.adjoint(), ComplexMatrix::identity(u.rows()));
}

Interferometer::Interferometer(ComplexMatrix unitary, double tolerance) : unitary_(std::move(unitary)) {
    if (!unitary_.is_square() || unitary_.rows() == 0) {
        throw DimensionError("interferometer needs a non-empty square matrix");
    }
    if (!unitary_.all_finite()) {
        throw InputError("interferometer matrix has non-finite entries");
    }
    const double defect = unitarity_defect(unitary_);
    if (defect > tolerance) {
        throw InputError("interferometer matrix is not unitary (max |UU^+ - I| = " + std::to_string(defect) + ")");
    }
}

ComplexMatrix submatrix(const Interferometer& u, const Occupation& out, const Occupation& in) {
    const std::size_t m = u.modes();
    if (out.modes() != m || in.modes() != m) {
        throw ConfigurationError("occupation length does not match the " + std::to_string(m) + "-mode network");
    }
    const unsigned k = in.total();
    if (out.total() != k) {
        throw ConfigurationError("output holds " + std::to_string(out.total()) + " photons but input holds " +
                                 std::to_string(k));
    }
    std::vector<std::size_t> cols;
    std::vector<std::size_t> rows;
    cols.reserve(k);
    rows.reserve(k);
    for (std::size_t j = 0; j < m; ++j) {
        cols.insert(cols.end(), in[j], j);
        rows.insert(rows.end(), out[j], j);
    }
    ComplexMatrix sub(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            sub(r, c) = u(rows[r], cols[c]);
        }
    }
    return sub;
}

Complex amplitude_ideal(const Interferometer& u, const Occupation& out, const Occupation& in) {
    const ComplexMatrix sub = submatrix(u, out, in);
    const Complex per = permanent_ryser(sub);
    if (out.collision_free() && in.collision_free()) {
        return per;
    }
    return per / std::sqrt(out.factorial_product() * in.factorial_product());
}

Interferometer make_beamsplitter_50_50() {
    const double h = 1.0 / std::numbers::sqrt2;
    return Interferometer(ComplexMatrix{{h, h}, {h, -h}});
}

Interferometer make_dft(std::size_t modes) {
    if (modes == 0) {
        throw DimensionError("DFT needs at least one mode");
    }
    ComplexMatrix u(modes, modes);
    const double scale = 1.0 / std::sqrt(static_cast<double>(modes));
    for (std::size_t j = 0; j < modes; ++j) {
        for (std::size_t k = 0; k < modes; ++k) {
            // reduce the exponent first to keep the phase argument small
            const auto turns = static_cast<double>((j * k) % modes) / static_cast<double>(modes);
            u(j, k) = std::polar(scale, 2.0 * std::numbers::pi * turns);
        }
    }
    return Interferometer(std::move(u));
}

Interferometer make_random_unitary(std::size_t modes, std::uint64_t seed) {
    if (modes == 0) {
        throw DimensionError("random unitary needs at least one mode");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix z(modes, modes);
    for (std::size_t r = 0; r < modes; ++r) {
        for (std::size_t c = 0; c < modes; ++c) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(r, c) = Complex{re, im};
        }
    }

    // Modified Gram-Schmidt on columns, two passes for orthogonality at
    // larger m. The implied R has a positive real diagonal, which makes the
    // resulting Q Haar distributed.
    for (std::size_t c = 0; c < modes; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < c; ++p) {
                Complex proj{0.0, 0.0};
                for (std::size_t r = 0; r < modes; ++r) {
                    proj += std::conj(z(r, p)) * z(r, c);
                }
                for (std::size_t r = 0; r < modes; ++r) {
                    z(r, c) -= proj * z(r, p);
                }
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < modes; ++r) {
            norm += std::norm(z(r, c));
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < modes; ++r) {
            z(r, c) /= norm;
        }
    }
    return Interferometer(std::move(z));
}

std::uint64_t occupation_count(std::size_t modes, unsigned photons) {
    if (modes == 0) {
        return photons == 0 ? 1 : 0;
    }
    // C(n + m - 1, n) built up incrementally; each partial product is itself
    // a binomial coefficient, so the division is exact.
    std::uint64_t result = 1;
    for (unsigned i = 1; i <= photons; ++i) {
        const std::uint64_t factor = modes - 1 + i;
        if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result = result * factor / i;
    }
    return result;
}

namespace {

void occupations_from(std::size_t mode, unsigned remaining, std::vector<unsigned>& counts,
                      std::vector<Occupation>& out) {
    if (mode + 1 == counts.size()) {
        counts[mode] = remaining;
        out.emplace_back(counts);
        return;
    }
    for (unsigned c = 0; c <= remaining; ++c) {
        counts[mode] = c;
        occupations_from(mode + 1, remaining - c, counts, out);
    }
}

}  // namespace

std::vector<Occupation> enumerate_occupations(std::size_t modes, unsigned photons) {
    std::vector<Occupation> out;
    if (modes == 0) {
        if (photons == 0) {
            out.emplace_back();
        }
        return out;
    }
    std::vector<unsigned> counts(modes, 0);
    occupations_from(0, photons, counts, out);
    return out;
}

Occupation occupation_from_modes(std::size_t modes, const std::vector<std::size_t>& mode_list) {
    Occupation occ = Occupation::empty(modes);
    for (std::size_t mode : mode_list) {
        if (mode >= modes) {
            throw ConfigurationError("mode index " + std::to_string(mode) + " outside a " + std::to_string(modes) +
                                     "-mode network");
        }
        ++occ[mode];
    }
    return occ;
}

}  // namespace specboson
