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

#include "specboson/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "specboson/errors.hpp"

namespace specboson {

Complex GaussianWavepacket::amplitude(double omega) const {
    const double scale = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
    const double d = omega - mu;
    return std::polar(scale * std::exp(-d * d / (4.0 * sigma * sigma)), omega * tau);
}

CoefficientRow::CoefficientRow(std::vector<Complex> coefficients) : coefficients_(std::move(coefficients)) {
    double norm = 0.0;
    for (const auto& c : coefficients_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InputError("spectral coefficient is not finite");
        }
        norm += std::norm(c);
    }
    if (coefficients_.empty() || std::abs(std::sqrt(norm) - 1.0) > kNormTolerance) {
        throw InputError("spectral coefficient row must have unit norm, got " + std::to_string(std::sqrt(norm)));
    }
}

LambdaMatrix::LambdaMatrix(ComplexMatrix coefficients) : coefficients_(std::move(coefficients)) {
    if (!coefficients_.all_finite()) {
        throw InputError("lambda matrix has non-finite entries");
    }
    for (std::size_t p = 0; p < coefficients_.rows(); ++p) {
        double norm = 0.0;
        for (const auto& c : coefficients_.row(p)) {
            norm += std::norm(c);
        }
        if (std::abs(std::sqrt(norm) - 1.0) > kNormTolerance) {
            throw InputError("lambda row " + std::to_string(p) + " does not have unit norm");
        }
    }
}

namespace {

void check_gaussian(const GaussianWavepacket& g) {
    if (!(g.sigma > 0.0) || !std::isfinite(g.sigma) || !std::isfinite(g.mu) || !std::isfinite(g.tau)) {
        throw InputError("gaussian wavepacket needs finite parameters and sigma > 0");
    }
}

}  // namespace

Complex gaussian_overlap(const GaussianWavepacket& a, const GaussianWavepacket& b) {
    check_gaussian(a);
    check_gaussian(b);
    const double va = a.sigma * a.sigma;
    const double vb = b.sigma * b.sigma;
    const double vsum = va + vb;
    const double dmu = a.mu - b.mu;
    const double dtau = b.tau - a.tau;
    const double weighted_mu = (a.mu * vb + b.mu * va) / vsum;

    const double magnitude = std::sqrt(2.0 * a.sigma * b.sigma / vsum) *
                             std::exp(-dmu * dmu / (4.0 * vsum) - dtau * dtau * va * vb / vsum);
    return std::polar(magnitude, dtau * weighted_mu);
}

Complex overlap(const SpectralSpec& a, const SpectralSpec& b) {
    if (const auto* ga = std::get_if<GaussianWavepacket>(&a)) {
        if (const auto* gb = std::get_if<GaussianWavepacket>(&b)) {
            return gaussian_overlap(*ga, *gb);
        }
        throw RepresentationError("cannot overlap a gaussian with a coefficient row");
    }
    const auto& ra = std::get<CoefficientRow>(a);
    const auto* rb = std::get_if<CoefficientRow>(&b);
    if (rb == nullptr) {
        throw RepresentationError("cannot overlap a coefficient row with a gaussian");
    }
    if (ra.size() != rb->size()) {
        throw RepresentationError("coefficient rows of different lengths do not share a basis");
    }
    Complex sum{0.0, 0.0};
    for (std::size_t k = 0; k < ra.size(); ++k) {
        sum += std::conj(ra.coefficients()[k]) * rb->coefficients()[k];
    }
    return sum;
}

ComplexMatrix gram_matrix(std::span<const SpectralSpec> photons) {
    const std::size_t n = photons.size();
    if (n == 0) {
        throw InputError("gram matrix needs at least one photon");
    }
    ComplexMatrix g(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        g(a, a) = overlap(photons[a], photons[a]);
        for (std::size_t b = a + 1; b < n; ++b) {
            g(a, b) = overlap(photons[a], photons[b]);
            g(b, a) = std::conj(g(a, b));
        }
    }
    return g;
}

LambdaMatrix orthonormal_decomposition(const ComplexMatrix& gram) {
    if (!gram.is_square() || gram.rows() == 0) {
        throw InputError("gram matrix must be square and non-empty");
    }
    if (!gram.all_finite()) {
        throw InputError("gram matrix has non-finite entries");
    }
    const std::size_t n = gram.rows();
    for (std::size_t a = 0; a < n; ++a) {
        if (std::abs(gram(a, a) - 1.0) > kNormTolerance) {
            throw InputError("gram matrix diagonal must be 1");
        }
        for (std::size_t b = a + 1; b < n; ++b) {
            if (std::abs(gram(a, b) - std::conj(gram(b, a))) > kNormTolerance) {
                throw InputError("gram matrix is not Hermitian");
            }
        }
    }

    // columns[k] holds basis direction k for every photon; pivots[k] is the
    // photon that introduced it.
    std::vector<std::vector<Complex>> columns;
    std::vector<std::size_t> pivots;
    for (std::size_t p = 0; p < n; ++p) {
        double residual = gram(p, p).real();
        for (std::size_t k = 0; k < columns.size(); ++k) {
            const std::size_t q = pivots[k];
            Complex value = gram(p, q);
            for (std::size_t l = 0; l < k; ++l) {
                value -= columns[l][p] * std::conj(columns[l][q]);
            }
            value /= columns[k][q].real();
            columns[k][p] = value;
            residual -= std::norm(value);
        }
        if (residual < -kPsdTolerance) {
            throw InputError("gram matrix is not positive semidefinite");
        }
        if (residual > kRankTolerance) {
            std::vector<Complex> column(n, Complex{0.0, 0.0});
            column[p] = std::sqrt(residual);
            columns.push_back(std::move(column));
            pivots.push_back(p);
        }
    }

    ComplexMatrix lambda(n, columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k) {
        for (std::size_t p = 0; p < n; ++p) {
            lambda(p, k) = columns[k][p];
        }
    }
    // Dropped directions leave later entries unchecked; verify the whole
    // factorization instead.
    if (max_abs_difference(lambda * lambda.adjoint(), gram) > kPsdTolerance) {
        throw InputError("gram matrix is not positive semidefinite");
    }
    return LambdaMatrix(std::move(lambda));
}

LambdaMatrix lambda_from_photons(std::span<const SpectralSpec> photons) {
    if (photons.empty()) {
        throw InputError("need at least one photon");
    }
    const bool explicit_rows = std::holds_alternative<CoefficientRow>(photons.front());
    if (!explicit_rows) {
        return orthonormal_decomposition(gram_matrix(photons).transpose());
    }
    const std::size_t basis = std::get<CoefficientRow>(photons.front()).size();
    ComplexMatrix lambda(photons.size(), basis);
    for (std::size_t p = 0; p < photons.size(); ++p) {
        const auto* row = std::get_if<CoefficientRow>(&photons[p]);
        if (row == nullptr) {
            throw RepresentationError("cannot mix gaussian photons with coefficient rows");
        }
        if (row->size() != basis) {
            throw RepresentationError("coefficient rows of different lengths do not share a basis");
        }
        std::copy(row->coefficients().begin(), row->coefficients().end(), lambda.row(p).begin());
    }
    return LambdaMatrix(std::move(lambda));
}

Complex chi(const LambdaMatrix& lambda, const SpectralConfiguration& v) {
    if (v.basis.size() != lambda.photons()) {
        throw DimensionError("configuration length does not match photon count");
    }
    Complex product{1.0, 0.0};
    for (std::size_t p = 0; p < v.basis.size(); ++p) {
        if (v.basis[p] >= lambda.basis_size()) {
            throw DimensionError("basis index " + std::to_string(v.basis[p]) + " out of range");
        }
        product *= lambda(p, v.basis[p]);
    }
    return product;
}

namespace {

struct ConfigurationWalker {
    const LambdaMatrix& lambda;
    double eps;
    std::size_t max_count;
    std::vector<std::vector<std::size_t>> support;
    std::vector<double> best_tail;  // max attainable |product| of rows p..n-1
    std::vector<std::size_t> current;
    std::vector<WeightedConfiguration> out;

    void walk(std::size_t p, Complex partial) {
        if (p == support.size()) {
            if (std::abs(partial) > eps) {
                if (out.size() == max_count) {
                    throw CapacityError("more than " + std::to_string(max_count) + " spectral configurations");
                }
                out.push_back({SpectralConfiguration{current}, partial});
            }
            return;
        }
        for (std::size_t k : support[p]) {
            const Complex next = partial * lambda(p, k);
            if (eps > 0.0 && std::abs(next) * best_tail[p + 1] <= eps) {
                continue;
            }
            current[p] = k;
            walk(p + 1, next);
        }
    }
};

}  // namespace

std::vector<WeightedConfiguration> enumerate_configurations(const LambdaMatrix& lambda, double eps,
                                                            std::size_t max_count) {
    if (!(eps >= 0.0)) {
        throw InputError("enumeration threshold must be non-negative");
    }
    const std::size_t n = lambda.photons();
    ConfigurationWalker walker{lambda, eps, max_count, {}, {}, std::vector<std::size_t>(n, 0), {}};
    walker.support.resize(n);
    walker.best_tail.assign(n + 1, 1.0);
    double blind_count = 1.0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t k = 0; k < lambda.basis_size(); ++k) {
            if (lambda(p, k) != Complex{0.0, 0.0}) {
                walker.support[p].push_back(k);
            }
        }
        blind_count *= static_cast<double>(walker.support[p].size());
    }
    for (std::size_t p = n; p-- > 0;) {
        double best = 0.0;
        for (std::size_t k : walker.support[p]) {
            best = std::max(best, std::abs(lambda(p, k)));
        }
        walker.best_tail[p] = best * walker.best_tail[p + 1];
    }
    if (eps == 0.0 && blind_count > static_cast<double>(max_count)) {
        throw CapacityError("spectral configuration count " + std::to_string(blind_count) + " exceeds cap " +
                            std::to_string(max_count));
    }
    walker.walk(0, Complex{1.0, 0.0});
    return std::move(walker.out);
}

std::vector<Occupation> t_sets(const SpectralConfiguration& v, std::span<const std::size_t> input_modes,
                               std::size_t modes, std::size_t basis_size) {
    if (v.basis.size() != input_modes.size()) {
        throw DimensionError("configuration length does not match the number of input modes");
    }
    std::vector<Occupation> sets(basis_size, Occupation::empty(modes));
    for (std::size_t p = 0; p < v.basis.size(); ++p) {
        if (v.basis[p] >= basis_size) {
            throw DimensionError("basis index " + std::to_string(v.basis[p]) + " out of range");
        }
        if (input_modes[p] >= modes) {
            throw ConfigurationError("input mode " + std::to_string(input_modes[p]) + " out of range");
        }
        ++sets[v.basis[p]][input_modes[p]];
    }
    return sets;
}

}  // namespace specboson
