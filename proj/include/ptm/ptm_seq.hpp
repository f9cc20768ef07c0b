// Copyright 2026 The PTM-QC Authors
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

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ptm/limits.hpp"

namespace ptm {

using BigInt = boost::multiprecision::cpp_int;

/// Prefix T_N of the Prouhet-Thue-Morse sequence, 2^order terms.
struct BitBlock {
    int order = 0;
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }
    std::uint8_t operator[](std::size_t n) const { return bits[n]; }
};

/// Indices of T_N split by value: evens holds t_n = 0, odds holds t_n = 1.
struct IndexPartition {
    int order = 0;
    std::vector<std::uint64_t> evens;
    std::vector<std::uint64_t> odds;
};

/// t_n as the parity of the binary digit sum of n.
constexpr int ptm_digit_sum(std::uint64_t n) { return std::popcount(n) & 1; }

/// t_n from t_0 = 0, t_{2n} = t_n, t_{2n+1} = 1 - t_n.
int ptm_recursive(std::uint64_t n);

/// Builds T_N by repeatedly appending the complement of the block so far.
BitBlock ptm_block(int order, const Limits &limits = default_limits());

IndexPartition partition_sets(int order, const Limits &limits = default_limits());

struct PowerSums {
    BigInt sum_evens;
    BigInt sum_odds;

    bool equal() const { return sum_evens == sum_odds; }
};

/// Exact sums of k-th powers over E(N) and O(N).
PowerSums multigrade_sums(int order, int power, const Limits &limits = default_limits());

/// Both sides of prod_{i=0}^{N} (1 - x^{2^i}) = sum_{j<2^{N+1}} (-1)^{t_j} x^j.
struct PolyIdentity {
    double lhs = 0.0;
    double rhs = 0.0;
    /// Largest |x^j| term or partial sum; the comparison tolerance scales with it.
    double scale = 0.0;

    bool agrees(double relative_tolerance = 1e-12) const;
};

/// Throws std::overflow_error when a term or partial result is not finite.
PolyIdentity poly_identity(double x, int order);

}  // namespace ptm
