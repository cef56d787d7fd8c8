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

#include "specboson/permanent.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "specboson/errors.hpp"
#include "test_util.hpp"

using namespace specboson;

namespace {

double rel_error(Complex got, Complex want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

}  // namespace

TEST(Permanent, one_by_one_is_the_entry) {
    const Complex z{0.3, -1.7};
    EXPECT_EQ(permanent_ryser(ComplexMatrix{{z}}), z);
    EXPECT_EQ(permanent_naive(ComplexMatrix{{z}}), z);
}

TEST(Permanent, empty_matrix_is_one) {
    EXPECT_EQ(permanent_ryser(ComplexMatrix(0, 0)), Complex(1.0, 0.0));
}

TEST(Permanent, two_by_two_definition) {
    const Complex a{1, 2}, b{-0.5, 0.25}, c{3, -1}, d{0.1, 0.7};
    const ComplexMatrix m{{a, b}, {c, d}};
    EXPECT_LT(std::abs(permanent_naive(m) - (a * d + b * c)), 1e-15);
    EXPECT_LT(std::abs(permanent_ryser(m) - (a * d + b * c)), 1e-14);
}

TEST(Permanent, hadamard_vanishes) {
    const double h = 1.0 / std::numbers::sqrt2;
    const ComplexMatrix m{{h, h}, {h, -h}};
    EXPECT_LT(std::abs(permanent_ryser(m)), 1e-15);
}

TEST(Permanent, identity_and_all_ones) {
    EXPECT_LT(std::abs(permanent_ryser(ComplexMatrix::identity(3)) - 1.0), 1e-15);
    // 3! and 4! permutations, each contributing 1
    const auto ones3 = ComplexMatrix::constant(3, 3, 1.0);
    const auto ones4 = ComplexMatrix::constant(4, 4, 1.0);
    EXPECT_EQ(permanent_naive(ones3), Complex(6.0, 0.0));
    EXPECT_EQ(permanent_naive(ones4), Complex(24.0, 0.0));
    EXPECT_LT(std::abs(permanent_ryser(ones3) - 6.0), 1e-12);
    EXPECT_LT(std::abs(permanent_ryser(ones4) - 24.0), 1e-12);
}

TEST(Permanent, errors) {
    EXPECT_THROW(permanent_ryser(ComplexMatrix(2, 3)), DimensionError);
    EXPECT_THROW(permanent_naive(ComplexMatrix(3, 2)), DimensionError);
    EXPECT_THROW(permanent_ryser(ComplexMatrix(31, 31)), CapacityError);
    EXPECT_THROW(permanent_ryser(ComplexMatrix(5, 5), 4), CapacityError);
    EXPECT_THROW(permanent_naive(ComplexMatrix(11, 11)), CapacityError);
}

TEST(Permanent, ryser_matches_naive_on_random_matrices) {
    std::mt19937_64 rng(7);
    for (std::size_t k = 1; k <= 8; ++k) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = testutil::random_matrix(k, k, rng);
            EXPECT_LE(rel_error(permanent_ryser(a), permanent_naive(a)), 1e-10) << "k=" << k;
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testutil::random_matrix(6, 6, rng);
        EXPECT_LE(rel_error(permanent_ryser(a), permanent_naive(a)), 1e-10);
    }
}

TEST(Permanent, row_and_column_permutation_invariance) {
    std::mt19937_64 rng(11);
    const auto a = testutil::random_matrix(5, 5, rng);
    const Complex base = permanent_ryser(a);
    std::vector<std::size_t> rows{3, 0, 4, 1, 2};
    std::vector<std::size_t> cols{1, 4, 2, 0, 3};
    ComplexMatrix b(5, 5);
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 5; ++c) {
            b(r, c) = a(rows[r], cols[c]);
        }
    }
    EXPECT_LE(rel_error(permanent_ryser(b), base), 1e-12);
}

TEST(Permanent, scaling_law) {
    std::mt19937_64 rng(13);
    const auto a = testutil::random_matrix(4, 4, rng);
    const Complex c{2.0, 1.0};
    EXPECT_LE(rel_error(permanent_ryser(c * a), std::pow(c, 4) * permanent_ryser(a)), 1e-12);
}

TEST(Permanent, zero_row_gives_zero) {
    std::mt19937_64 rng(17);
    auto a = testutil::random_matrix(5, 5, rng);
    for (auto& z : a.row(2)) {
        z = 0.0;
    }
    EXPECT_EQ(permanent_ryser(a), Complex(0.0, 0.0));
}

TEST(Permanent, chunked_path_matches_block_product) {
    // 20x20 takes the threaded route. Per(diag(A, B)) = Per(A) Per(B).
    EXPECT_LT(std::abs(permanent_ryser(ComplexMatrix::identity(20)) - 1.0), 1e-12);
    std::mt19937_64 rng(23);
    const auto a = testutil::random_matrix(10, 10, rng);
    const auto b = testutil::random_matrix(10, 10, rng);
    ComplexMatrix block(20, 20);
    for (std::size_t r = 0; r < 10; ++r) {
        for (std::size_t c = 0; c < 10; ++c) {
            block(r, c) = a(r, c);
            block(r + 10, c + 10) = b(r, c);
        }
    }
    const Complex want = permanent_naive(a) * permanent_naive(b);
    EXPECT_LE(rel_error(permanent_ryser(block), want), 1e-9);
}

TEST(Permanent, chunked_path_is_deterministic) {
    std::mt19937_64 rng(19);
    const auto a = testutil::random_matrix(20, 20, rng);
    EXPECT_EQ(permanent_ryser(a), permanent_ryser(a));
}
