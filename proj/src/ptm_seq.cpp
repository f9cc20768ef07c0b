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

#include "ptm/ptm_seq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace ptm {

int ptm_recursive(std::uint64_t n) {
    int bit = 0;
    while (n != 0) {
        if (n & 1U) {
            bit = 1 - bit;
        }
        n >>= 1U;
    }
    return bit;
}

BitBlock ptm_block(int order, const Limits &limits) {
    if (order < 0) {
        throw std::invalid_argument("ptm_block: order must be non-negative");
    }
    if (order > limits.block_order) {
        throw CapacityError(fmt::format("ptm_block: order {} exceeds the configured limit of {}", order, limits.block_order));
    }
    BitBlock block;
    block.order = order;
    block.bits.reserve(std::size_t{1} << order);
    block.bits.push_back(0);
    for (int i = 0; i < order; ++i) {
        const std::size_t half = block.bits.size();
        for (std::size_t n = 0; n < half; ++n) {
            block.bits.push_back(static_cast<std::uint8_t>(1U - block.bits[n]));
        }
    }
    return block;
}

IndexPartition partition_sets(int order, const Limits &limits) {
    if (order < 1) {
        throw std::invalid_argument("partition_sets: order must be at least 1");
    }
    const BitBlock block = ptm_block(order, limits);
    IndexPartition part;
    part.order = order;
    part.evens.reserve(block.size() / 2);
    part.odds.reserve(block.size() / 2);
    for (std::size_t n = 0; n < block.size(); ++n) {
        (block[n] == 0 ? part.evens : part.odds).push_back(n);
    }
    return part;
}

PowerSums multigrade_sums(int order, int power, const Limits &limits) {
    if (power < 0) {
        throw std::invalid_argument("multigrade_sums: power must be non-negative");
    }
    const IndexPartition part = partition_sets(order, limits);
    auto power_sum = [power](const std::vector<std::uint64_t> &indices) {
        BigInt total = 0;
        for (std::uint64_t n : indices) {
            total += boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(power));
        }
        return total;
    };
    return {power_sum(part.evens), power_sum(part.odds)};
}

bool PolyIdentity::agrees(double relative_tolerance) const {
    return std::abs(lhs - rhs) <= relative_tolerance * std::max(1.0, scale);
}

PolyIdentity poly_identity(double x, int order) {
    if (order < 1) {
        throw std::invalid_argument("poly_identity: order must be at least 1");
    }
    if (!std::isfinite(x)) {
        throw std::overflow_error("poly_identity: x is not finite");
    }
    if (order > 30) {
        throw CapacityError("poly_identity: order above 30 would need more than 2^31 terms");
    }
    PolyIdentity out;
    double product = 1.0;
    double x_pow = x;  // x^{2^i}
    for (int i = 0; i <= order; ++i) {
        product *= 1.0 - x_pow;
        x_pow *= x_pow;
    }
    const std::uint64_t terms = std::uint64_t{1} << (order + 1);
    double sum = 0.0;
    double term = 1.0;  // x^j
    double scale = 0.0;
    for (std::uint64_t j = 0; j < terms; ++j) {
        sum += ptm_digit_sum(j) ? -term : term;
        scale = std::max({scale, std::abs(term), std::abs(sum)});
        term *= x;
    }
    if (!std::isfinite(product) || !std::isfinite(sum) || !std::isfinite(scale)) {
        throw std::overflow_error(fmt::format("poly_identity: non-finite terms for x = {} at order {}", x, order));
    }
    out.lhs = product;
    out.rhs = sum;
    out.scale = scale;
    return out;
}

}  // namespace ptm
