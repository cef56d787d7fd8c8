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

#ifndef SPECBOSON_PERMANENT_HPP
#define SPECBOSON_PERMANENT_HPP

#include <cstddef>

#include "specboson/matrix.hpp"

namespace specboson {

inline constexpr std::size_t kDefaultPermanentCap = 30;
inline constexpr std::size_t kNaivePermanentCap = 10;

/**
 * Permanent of a square complex matrix by Ryser's inclusion-exclusion formula.
 *
 * Subsets of columns are visited in Gray-code order so consecutive subsets
 * differ by one column and the row sums are updated in O(k). Large matrices
 * split the subset range into a fixed number of chunks that run on worker
 * threads; chunk results are added in chunk order, so the value does not
 * depend on the thread count.
 *
 * The 0x0 permanent is 1. Throws DimensionError for non-square input and
 * CapacityError when the dimension exceeds max_dimension (itself capped at 62).
 */
Complex permanent_ryser(const ComplexMatrix& a, std::size_t max_dimension = kDefaultPermanentCap);

/// Permanent by summing over all k! permutations. Reference implementation
/// for testing; limited to k <= 10.
Complex permanent_naive(const ComplexMatrix& a);

}  // namespace specboson

#endif
