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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "specboson/errors.hpp"

namespace specboson {

namespace {

constexpr std::size_t kParallelThreshold = 20;
constexpr std::uint64_t kChunkCount = 64;

void check_square(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw DimensionError("permanent needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
    }
}

// Signed Ryser terms for Gray-code indices in [begin, end), begin >= 1.
Complex ryser_range(const ComplexMatrix& a, std::uint64_t begin, std::uint64_t end) {
    const std::size_t k = a.rows();
    std::vector<Complex> row_sums(k, Complex{0.0, 0.0});

    std::uint64_t gray = (begin - 1) ^ ((begin - 1) >> 1);
    for (std::size_t c = 0; c < k; ++c) {
        if ((gray >> c) & 1U) {
            for (std::size_t r = 0; r < k; ++r) {
                row_sums[r] += a(r, c);
            }
        }
    }

    Complex total{0.0, 0.0};
    for (std::uint64_t g = begin; g < end; ++g) {
        const auto column = static_cast<std::size_t>(std::countr_zero(g));
        gray ^= std::uint64_t{1} << column;
        if ((gray >> column) & 1U) {
            for (std::size_t r = 0; r < k; ++r) {
                row_sums[r] += a(r, column);
            }
        } else {
            for (std::size_t r = 0; r < k; ++r) {
                row_sums[r] -= a(r, column);
            }
        }
        Complex product = row_sums[0];
        for (std::size_t r = 1; r < k; ++r) {
            product *= row_sums[r];
        }
        // (-1)^(k - |S|)
        if ((k - static_cast<std::size_t>(std::popcount(gray))) & 1U) {
            total -= product;
        } else {
            total += product;
        }
    }
    return total;
}

}  // namespace

Complex permanent_ryser(const ComplexMatrix& a, std::size_t max_dimension) {
    check_square(a);
    const std::size_t k = a.rows();
    const std::size_t cap = std::min<std::size_t>(max_dimension, 62);
    if (k > cap) {
        throw CapacityError("permanent dimension " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
    }
    if (k == 0) {
        return {1.0, 0.0};
    }
    if (k == 1) {
        return a(0, 0);
    }

    const std::uint64_t subsets = std::uint64_t{1} << k;
    if (k < kParallelThreshold) {
        return ryser_range(a, 1, subsets);
    }

    std::vector<Complex> partial(kChunkCount);
    const std::uint64_t span = subsets / kChunkCount;
    auto run_chunk = [&](std::uint64_t chunk) {
        const std::uint64_t begin = std::max<std::uint64_t>(1, chunk * span);
        const std::uint64_t end = chunk + 1 == kChunkCount ? subsets : (chunk + 1) * span;
        partial[chunk] = ryser_range(a, begin, end);
    };

    const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), kChunkCount));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t chunk = w; chunk < kChunkCount; chunk += workers) {
                run_chunk(chunk);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    return std::accumulate(partial.begin(), partial.end(), Complex{0.0, 0.0});
}

Complex permanent_naive(const ComplexMatrix& a) {
    check_square(a);
    const std::size_t k = a.rows();
    if (k > kNaivePermanentCap) {
        throw CapacityError("naive permanent limited to dimension " + std::to_string(kNaivePermanentCap));
    }
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total{0.0, 0.0};
    do {
        Complex product{1.0, 0.0};
        for (std::size_t r = 0; r < k; ++r) {
            product *= a(r, perm[r]);
        }
        total += product;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace specboson
