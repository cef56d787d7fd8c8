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

#include "specboson/sampling.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "specboson/errors.hpp"
#include "test_util.hpp"

using namespace specboson;

namespace {

LambdaMatrix hom_lambda(double alpha) {
    return orthonormal_decomposition(ComplexMatrix{{1.0, alpha}, {alpha, 1.0}});
}

const std::vector<std::size_t> kHomInputs{0, 1};

std::vector<SpectralSpec> rows_of(const ComplexMatrix& m) {
    std::vector<SpectralSpec> out;
    for (std::size_t p = 0; p < m.rows(); ++p) {
        out.emplace_back(CoefficientRow({m.row(p).begin(), m.row(p).end()}));
    }
    return out;
}

}  // namespace

TEST(AmplitudeResolved, hom_antibunching_in_first_mode_vanishes) {
    const auto bs = make_beamsplitter_50_50();
    for (double alpha : {0.0, 0.3, 0.8, 1.0}) {
        const auto lambda = hom_lambda(alpha);
        ResolvedOutcome outcome;
        outcome.per_basis.assign(lambda.basis_size(), Occupation{0, 0});
        outcome.per_basis[0] = Occupation{1, 1};
        EXPECT_LT(std::abs(amplitude_resolved(bs, lambda, kHomInputs, outcome)), 1e-15) << alpha;
        EXPECT_LT(probability_resolved(bs, lambda, kHomInputs, outcome), 1e-30);
    }
}

TEST(AmplitudeResolved, hom_split_outcomes) {
    // S1 = {1,0}, S2 = {0,1}: only v = (1,2) contributes, with
    // chi = sqrt(1 - a^2) and amplitude U(0,0) U(1,1) = -1/2.
    const double alpha = 0.4;
    const auto bs = make_beamsplitter_50_50();
    const auto lambda = hom_lambda(alpha);
    const ResolvedOutcome outcome{{Occupation{1, 0}, Occupation{0, 1}}};
    const Complex want = std::sqrt(1 - alpha * alpha) * -0.5;
    EXPECT_LT(std::abs(amplitude_resolved(bs, lambda, kHomInputs, outcome) - want), 1e-15);
}

TEST(AmplitudeResolved, indistinguishable_reduces_to_ideal) {
    const auto u = make_random_unitary(5, 61);
    const LambdaMatrix lambda(ComplexMatrix::constant(3, 1, 1.0));
    const std::vector<std::size_t> inputs{0, 1, 2};
    const Occupation in{1, 1, 1, 0, 0};
    for (const auto& m : enumerate_occupations(5, 3)) {
        const ResolvedOutcome outcome{{m}};
        EXPECT_EQ(amplitude_resolved(u, lambda, inputs, outcome), amplitude_ideal(u, m, in));
    }
}

TEST(AmplitudeResolved, single_photon_transfer) {
    const auto u = make_random_unitary(4, 67);
    const LambdaMatrix lambda(ComplexMatrix{{1.0, 0.0, 0.0}});
    const std::vector<std::size_t> inputs{2};
    const ResolvedOutcome outcome{{Occupation{0, 0, 0, 1}, Occupation::empty(4), Occupation::empty(4)}};
    EXPECT_EQ(amplitude_resolved(u, lambda, inputs, outcome), u(3, 2));
}

TEST(AmplitudeResolved, errors) {
    const auto bs = make_beamsplitter_50_50();
    const auto lambda = hom_lambda(0.5);
    EXPECT_THROW(probability_resolved(bs, lambda, kHomInputs, {{Occupation{1, 0}, Occupation{0, 0}}}),
                 ConfigurationError);
    EXPECT_THROW(probability_resolved(bs, lambda, kHomInputs, {{Occupation{1, 1}}}), DimensionError);
    EXPECT_THROW(probability_resolved(bs, lambda, kHomInputs, {{Occupation{1, 1, 0}, Occupation{0, 0, 0}}}),
                 ConfigurationError);
    const std::vector<std::size_t> repeated{0, 0};
    EXPECT_THROW(probability_nonresolved(bs, lambda, repeated, {1, 1}), ConfigurationError);
    const std::vector<std::size_t> outside{0, 2};
    EXPECT_THROW(probability_nonresolved(bs, lambda, outside, {1, 1}), ConfigurationError);
    const std::vector<std::size_t> short_inputs{0};
    EXPECT_THROW(probability_nonresolved(bs, lambda, short_inputs, {1, 1}), DimensionError);
    EXPECT_THROW(probability_nonresolved(bs, lambda, kHomInputs, {1, 0}), ConfigurationError);
}

TEST(EnumeratePartitions, hom_listing) {
    const std::vector<unsigned> bunched{2, 0};
    const auto a = enumerate_partitions({1, 1}, bunched);
    ASSERT_EQ(a.size(), 1U);
    EXPECT_EQ(a[0].per_basis, (std::vector<Occupation>{{1, 1}, {0, 0}}));

    const std::vector<unsigned> split{1, 1};
    const auto b = enumerate_partitions({1, 1}, split);
    ASSERT_EQ(b.size(), 2U);
    EXPECT_EQ(b[0].per_basis, (std::vector<Occupation>{{1, 0}, {0, 1}}));
    EXPECT_EQ(b[1].per_basis, (std::vector<Occupation>{{0, 1}, {1, 0}}));

    const auto c = enumerate_partitions({2, 0}, split);
    ASSERT_EQ(c.size(), 1U);
    EXPECT_EQ(c[0].per_basis, (std::vector<Occupation>{{1, 0}, {1, 0}}));

    const std::vector<unsigned> infeasible{3, 0};
    EXPECT_TRUE(enumerate_partitions({1, 1}, infeasible).empty());
}

TEST(EnumeratePartitions, matches_brute_force_filter) {
    // Brute force: every tuple of per-basis occupations with the right
    // totals, kept if they add up to M.
    const Occupation signature{2, 0, 1, 1};
    for (const std::vector<unsigned>& profile :
         {std::vector<unsigned>{2, 1, 1}, std::vector<unsigned>{4, 0, 0}, std::vector<unsigned>{1, 3},
          std::vector<unsigned>{0, 2, 2}}) {
        std::vector<ResolvedOutcome> brute{{}};
        for (unsigned k : profile) {
            std::vector<ResolvedOutcome> next;
            for (const auto& partial : brute) {
                for (const auto& s : enumerate_occupations(4, k)) {
                    auto extended = partial;
                    extended.per_basis.push_back(s);
                    next.push_back(extended);
                }
            }
            brute = next;
        }
        std::erase_if(brute, [&](const ResolvedOutcome& o) { return o.spatial_marginal() != signature; });
        auto got = enumerate_partitions(signature, profile);
        for (const auto& o : got) {
            EXPECT_EQ(o.spatial_marginal(), signature);
            EXPECT_EQ(o.profile(), profile);
        }
        std::sort(got.begin(), got.end());
        std::sort(brute.begin(), brute.end());
        EXPECT_EQ(got, brute);
    }
}

TEST(ProbabilityNonresolved, hom_closed_form) {
    const auto bs = make_beamsplitter_50_50();
    EXPECT_NEAR(probability_nonresolved(bs, hom_lambda(1.0), kHomInputs, {1, 1}), 0.0, 1e-15);
    EXPECT_NEAR(probability_nonresolved(bs, hom_lambda(0.0), kHomInputs, {1, 1}), 0.5, 1e-15);
    EXPECT_NEAR(probability_nonresolved(bs, hom_lambda(1.0 / std::numbers::sqrt2), kHomInputs, {1, 1}), 0.25,
                1e-15);
    double previous = 1.0;
    for (int i = 0; i <= 20; ++i) {
        const double alpha = i / 20.0;
        const double p = probability_nonresolved(bs, hom_lambda(alpha), kHomInputs, {1, 1});
        EXPECT_NEAR(p, (1 - alpha * alpha) / 2, 1e-12);
        EXPECT_LT(p, previous);
        previous = p;
        EXPECT_NEAR(probability_nonresolved(bs, hom_lambda(alpha), kHomInputs, {2, 0}), (1 + alpha * alpha) / 4,
                    1e-12);
    }
}

TEST(FastPaths, hom_and_identity) {
    const auto bs = make_beamsplitter_50_50();
    EXPECT_NEAR(probability_indistinguishable_fast(bs, {1, 1}, {1, 1}), 0.0, 1e-30);
    EXPECT_NEAR(probability_indistinguishable_fast(bs, {2, 0}, {1, 1}), 0.5, 1e-15);
    EXPECT_NEAR(probability_distinguishable_fast(bs, {1, 1}, {1, 1}), 0.5, 1e-15);
    const Interferometer id(ComplexMatrix::identity(3));
    EXPECT_NEAR(probability_indistinguishable_fast(id, {1, 0, 1}, {1, 0, 1}), 1.0, 1e-15);
    EXPECT_NEAR(probability_distinguishable_fast(id, {1, 0, 1}, {1, 0, 1}), 1.0, 1e-15);
    EXPECT_THROW(probability_distinguishable_fast(bs, {2, 0}, {1, 1}), ConfigurationError);
    EXPECT_THROW(probability_indistinguishable_fast(bs, {2, 1}, {1, 1}), ConfigurationError);
}

TEST(FastPaths, agree_with_general_engine) {
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = make_random_unitary(4, 200 + trial);
        const std::vector<std::size_t> inputs{0, 1, 3};
        const Occupation in = occupation_from_modes(4, inputs);
        const LambdaMatrix same(ComplexMatrix::constant(3, 1, 1.0));
        const LambdaMatrix distinct(ComplexMatrix::identity(3));
        for (const auto& m : enumerate_occupations(4, 3)) {
            EXPECT_EQ(probability_nonresolved(u, same, inputs, m), probability_indistinguishable_fast(u, m, in));
            if (m.collision_free()) {
                EXPECT_NEAR(probability_nonresolved(u, distinct, inputs, m),
                            probability_distinguishable_fast(u, m, in), 1e-10);
            }
        }
    }
}

TEST(Distribution, hom_indistinguishable) {
    const auto dist = distribution_nonresolved(make_beamsplitter_50_50(), hom_lambda(1.0), kHomInputs);
    ASSERT_EQ(dist.size(), 3U);
    EXPECT_EQ(dist[0].signature, (Occupation{0, 2}));
    EXPECT_NEAR(dist[0].probability, 0.5, 1e-15);
    EXPECT_EQ(dist[1].signature, (Occupation{1, 1}));
    EXPECT_NEAR(dist[1].probability, 0.0, 1e-15);
    EXPECT_EQ(dist[2].signature, (Occupation{2, 0}));
    EXPECT_NEAR(dist[2].probability, 0.5, 1e-15);
}

TEST(Distribution, single_photon_is_a_column) {
    const auto u = make_random_unitary(5, 71);
    const std::vector<std::size_t> inputs{3};
    const auto dist = distribution_nonresolved(u, LambdaMatrix(ComplexMatrix{{1.0}}), inputs);
    ASSERT_EQ(dist.size(), 5U);
    for (const auto& entry : dist) {
        const auto mode = static_cast<std::size_t>(
            std::find(entry.signature.counts().begin(), entry.signature.counts().end(), 1U) -
            entry.signature.counts().begin());
        EXPECT_NEAR(entry.probability, std::norm(u(mode, 3)), 1e-15);
    }
}

TEST(Distribution, normalized_for_random_instances) {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t m = 3 + trial % 3;
        const std::size_t n = 1 + trial % 3;
        const auto u = make_random_unitary(m, 300 + trial);
        const auto lambda = testutil::random_lambda(n, 1 + trial % 4, rng);
        const auto inputs = default_input_modes(n);
        double sum = 0.0;
        for (const auto& e : distribution_nonresolved(u, lambda, inputs)) {
            EXPECT_GE(e.probability, 0.0);
            EXPECT_LE(e.probability, 1.0 + 1e-12);
            sum += e.probability;
        }
        EXPECT_NEAR(sum, 1.0, 1e-9);
        double resolved = 0.0;
        for (const auto& e : distribution_resolved(u, lambda, inputs)) {
            resolved += e.probability;
        }
        EXPECT_NEAR(resolved, 1.0, 1e-9);
    }
}

TEST(Distribution, resolved_marginalizes_to_nonresolved) {
    std::mt19937_64 rng(79);
    const auto u = make_random_unitary(4, 83);
    const auto lambda = testutil::random_lambda(3, 2, rng);
    const auto inputs = default_input_modes(3);
    const auto coarse = distribution_nonresolved(u, lambda, inputs);
    std::map<Occupation, double> summed;
    for (const auto& e : distribution_resolved(u, lambda, inputs)) {
        summed[e.outcome.spatial_marginal()] += e.probability;
    }
    for (const auto& e : coarse) {
        EXPECT_NEAR(summed[e.signature], e.probability, 1e-12);
    }
}

TEST(Distribution, capacity_guard) {
    EngineOptions options;
    options.max_outcomes = 10;
    const auto u = make_random_unitary(5, 1);
    EXPECT_THROW(distribution_nonresolved(u, LambdaMatrix(ComplexMatrix::constant(3, 1, 1.0)),
                                          default_input_modes(3), options),
                 CapacityError);
}

TEST(BasisInvariance, nonresolved_probabilities_ignore_basis_rotation) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const std::size_t basis = 2 + trial % 3;
        const auto u = make_random_unitary(4, 400 + trial);
        const auto lambda = testutil::random_lambda(n, basis, rng);
        const auto w = make_random_unitary(basis, 500 + trial).matrix();
        const LambdaMatrix rotated(lambda.matrix() * w);
        const auto inputs = default_input_modes(n);
        const auto a = distribution_nonresolved(u, lambda, inputs);
        const auto b = distribution_nonresolved(u, rotated, inputs);
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_NEAR(a[i].probability, b[i].probability, 1e-9);
        }
    }
}

TEST(BasisInvariance, induced_basis_reproduces_declared_rows) {
    // Feeding coefficient rows through the Gram/Cholesky route must give
    // the same detection statistics as using the rows directly.
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 6; ++trial) {
        const auto u = make_random_unitary(4, 600 + trial);
        const auto declared = testutil::random_lambda(3, 3, rng);
        const auto photons = rows_of(declared.matrix());
        const auto induced = orthonormal_decomposition(gram_matrix(photons).transpose());
        const auto inputs = default_input_modes(3);
        const auto a = distribution_nonresolved(u, declared, inputs);
        const auto b = distribution_nonresolved(u, induced, inputs);
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_NEAR(a[i].probability, b[i].probability, 1e-10);
        }
    }
}

TEST(Eps, positive_threshold_approximates) {
    std::mt19937_64 rng(101);
    const auto u = make_random_unitary(4, 103);
    const auto lambda = testutil::random_lambda(3, 3, rng);
    const auto inputs = default_input_modes(3);
    EngineOptions tiny;
    tiny.eps = 1e-12;
    const auto exact = distribution_nonresolved(u, lambda, inputs);
    const auto approx = distribution_nonresolved(u, lambda, inputs, tiny);
    for (std::size_t i = 0; i < exact.size(); ++i) {
        EXPECT_NEAR(exact[i].probability, approx[i].probability, 1e-9);
    }
}

TEST(Mixed, weights_are_validated) {
    EXPECT_THROW(MixedPhoton({}), InputError);
    EXPECT_THROW(MixedPhoton({{0.5, GaussianWavepacket{}}, {0.4, GaussianWavepacket{}}}), InputError);
    EXPECT_THROW(MixedPhoton({{1.5, GaussianWavepacket{}}, {-0.5, GaussianWavepacket{}}}), InputError);
    EXPECT_NO_THROW(MixedPhoton({{0.25, GaussianWavepacket{}}, {0.75, GaussianWavepacket{1.0, 1.0, 0.0}}}));
}

TEST(Mixed, pure_sources_reproduce_pure_results_exactly) {
    std::mt19937_64 rng(107);
    const auto u = make_random_unitary(4, 109);
    const auto photons = testutil::random_gaussians(3, rng);
    std::vector<MixedPhoton> sources;
    for (const auto& p : photons) {
        sources.push_back(MixedPhoton::pure(p));
    }
    const auto inputs = default_input_modes(3);
    const auto lambda = lambda_from_photons(photons);
    for (const auto& m : enumerate_occupations(4, 3)) {
        EXPECT_EQ(probability_mixed(u, sources, inputs, m), probability_nonresolved(u, lambda, inputs, m));
    }
    const auto dist = distribution_mixed_nonresolved(u, sources, inputs);
    const auto pure = distribution_nonresolved(u, lambda, inputs);
    for (std::size_t i = 0; i < dist.size(); ++i) {
        EXPECT_EQ(dist[i].probability, pure[i].probability);
    }
}

TEST(Mixed, hom_mixture) {
    const auto bs = make_beamsplitter_50_50();
    const CoefficientRow first({1.0, 0.0});
    const CoefficientRow orthogonal({0.0, 1.0});
    for (double p : {0.0, 0.25, 0.5, 1.0}) {
        std::vector<MixedPhoton> sources{MixedPhoton::pure(first),
                                         MixedPhoton({{p, first}, {1.0 - p, orthogonal}})};
        EXPECT_NEAR(probability_mixed(bs, sources, kHomInputs, Occupation{1, 1}), (1 - p) / 2, 1e-12);
        // resolved: anti-bunching in mode 1 of both basis functions
        const ResolvedOutcome split{{Occupation{1, 0}, Occupation{0, 1}}};
        EXPECT_NEAR(probability_mixed(bs, sources, kHomInputs, split), (1 - p) / 4, 1e-12);
    }
}

TEST(Mixed, convex_combination_of_components) {
    std::mt19937_64 rng(113);
    const auto u = make_random_unitary(3, 127);
    const auto a = testutil::random_gaussians(2, rng);
    const auto b = testutil::random_gaussians(2, rng);
    const auto inputs = default_input_modes(2);
    std::vector<MixedPhoton> sources{MixedPhoton::pure(a[0]), MixedPhoton({{0.3, a[1]}, {0.7, b[1]}})};
    const std::vector<SpectralSpec> with_a{a[0], a[1]};
    const std::vector<SpectralSpec> with_b{a[0], b[1]};
    for (const auto& m : enumerate_occupations(3, 2)) {
        const double pa = probability_nonresolved(u, lambda_from_photons(with_a), inputs, m);
        const double pb = probability_nonresolved(u, lambda_from_photons(with_b), inputs, m);
        const double mixed = probability_mixed(u, sources, inputs, m);
        EXPECT_NEAR(mixed, 0.3 * pa + 0.7 * pb, 1e-14);
        EXPECT_GE(mixed, std::min(pa, pb) - 1e-15);
        EXPECT_LE(mixed, std::max(pa, pb) + 1e-15);
    }
}

TEST(Mixed, identical_components_equal_pure) {
    const auto u = make_random_unitary(3, 131);
    const GaussianWavepacket g{0.2, 1.1, 0.4};
    const GaussianWavepacket h{-0.3, 0.9, -0.2};
    std::vector<MixedPhoton> sources{MixedPhoton({{0.5, g}, {0.5, g}}), MixedPhoton({{0.1, h}, {0.9, h}})};
    const std::vector<SpectralSpec> pure{g, h};
    const auto inputs = default_input_modes(2);
    for (const auto& m : enumerate_occupations(3, 2)) {
        EXPECT_NEAR(probability_mixed(u, sources, inputs, m),
                    probability_nonresolved(u, lambda_from_photons(pure), inputs, m), 1e-14);
    }
}

TEST(Mixed, guards) {
    const auto bs = make_beamsplitter_50_50();
    std::vector<MixedPhoton> gaussians{MixedPhoton::pure(GaussianWavepacket{}),
                                       MixedPhoton::pure(GaussianWavepacket{1.0, 1.0, 0.0})};
    EXPECT_THROW(probability_mixed(bs, gaussians, kHomInputs, ResolvedOutcome{{Occupation{1, 1}}}),
                 RepresentationError);
    EngineOptions options;
    options.max_mixture_terms = 3;
    std::vector<MixedPhoton> wide{MixedPhoton({{0.5, GaussianWavepacket{}}, {0.5, GaussianWavepacket{}}}),
                                  MixedPhoton({{0.5, GaussianWavepacket{}}, {0.5, GaussianWavepacket{}}})};
    EXPECT_THROW(probability_mixed(bs, wide, kHomInputs, Occupation{1, 1}, options), CapacityError);
    EXPECT_EQ(mixture_term_count(wide), 4U);
}
