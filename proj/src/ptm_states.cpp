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

#include "ptm/ptm_states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include <fmt/format.h>

#include "ptm/ptm_seq.hpp"

namespace ptm {

namespace {

PtmLogical materialize(int order, std::size_t dim, Logical which, bool qudit, std::vector<std::uint64_t> support,
                       int weight_exponent) {
    const double amp = std::sqrt(std::ldexp(1.0, -weight_exponent));
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim));
    for (std::uint64_t k : support) {
        amps[static_cast<Eigen::Index>(k)] = amp;
    }
    return PtmLogical{order, dim, which, qudit, std::move(support), weight_exponent, StateVector(std::move(amps))};
}

}  // namespace

char logical_name(Logical which) { return which == Logical::zero ? '0' : '1'; }

Rational PtmLogical::squared_amplitude() const {
    return Rational(1, boost::multiprecision::cpp_int(1) << weight_exponent);
}

std::vector<std::uint64_t> logical_support(int order, Logical which) {
    const int wanted = which == Logical::zero ? 0 : 1;
    std::vector<std::uint64_t> out;
    const std::uint64_t dim = std::uint64_t{1} << order;
    out.reserve(dim / 2);
    for (std::uint64_t k = 0; k < dim; ++k) {
        if (ptm_digit_sum(k) == wanted) {
            out.push_back(k);
        }
    }
    return out;
}

PtmLogical ptm_state(int num_qubits, Logical which, const Limits &limits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("ptm_state: need at least one qubit");
    }
    require_capacity(num_qubits, limits.state_qubits, "ptm_state");
    return materialize(num_qubits, std::size_t{1} << num_qubits, which, false, logical_support(num_qubits, which),
                       num_qubits - 1);
}

std::pair<PtmLogical, PtmLogical> ptm_compose(const PtmLogical &prev0, const PtmLogical &prev1, const Limits &limits) {
    if (prev0.order != prev1.order || prev0.qudit || prev1.qudit) {
        throw std::invalid_argument("ptm_compose: operands must be qubit states of the same order");
    }
    if (prev0.which != Logical::zero || prev1.which != Logical::one) {
        throw std::invalid_argument("ptm_compose: expected the (zero, one) logical pair");
    }
    const int order = prev0.order + 1;
    require_capacity(order, limits.state_qubits, "ptm_compose");
    const std::uint64_t top = std::uint64_t{1} << prev0.order;

    // |0> (x) a has the same indices as a; |1> (x) b shifts b by 2^N.
    auto join = [top](const std::vector<std::uint64_t> &low, const std::vector<std::uint64_t> &high) {
        std::vector<std::uint64_t> out(low);
        out.reserve(low.size() + high.size());
        std::transform(high.begin(), high.end(), std::back_inserter(out), [top](std::uint64_t k) { return k + top; });
        return out;
    };
    const int exponent = prev0.weight_exponent + 1;
    const std::size_t dim = std::size_t{1} << order;
    return {materialize(order, dim, Logical::zero, false, join(prev0.support, prev1.support), exponent),
            materialize(order, dim, Logical::one, false, join(prev1.support, prev0.support), exponent)};
}

PtmLogical ptm_qudit_state(std::size_t d, Logical which, const Limits &limits) {
    if (d < 2 || !std::has_single_bit(d)) {
        throw std::invalid_argument(fmt::format("ptm_qudit_state: dimension {} is not a power of two >= 2", d));
    }
    const int order = std::countr_zero(d);
    require_capacity(order, limits.state_qubits, "ptm_qudit_state");
    // sqrt(2/d) squared is 2^{1-N}.
    return materialize(order, d, which, true, logical_support(order, which), order - 1);
}

StateVector encode_logical(Complex alpha, Complex beta, int num_qubits, const Limits &limits) {
    const double weight = std::norm(alpha) + std::norm(beta);
    if (std::abs(weight - 1.0) > 1e-12) {
        throw std::invalid_argument(fmt::format("encode_logical: |alpha|^2 + |beta|^2 = {} is not 1", weight));
    }
    const PtmLogical zero = ptm_state(num_qubits, Logical::zero, limits);
    const PtmLogical one = ptm_state(num_qubits, Logical::one, limits);
    return StateVector(alpha * zero.state.amplitudes() + beta * one.state.amplitudes());
}

ExactOrthonormality exact_orthonormality(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 62) {
        throw std::invalid_argument("exact_orthonormality: qubit count out of range");
    }
    const auto zero = logical_support(num_qubits, Logical::zero);
    const auto one = logical_support(num_qubits, Logical::one);
    const Rational weight(1, boost::multiprecision::cpp_int(1) << (num_qubits - 1));
    std::vector<std::uint64_t> common;
    std::set_intersection(zero.begin(), zero.end(), one.begin(), one.end(), std::back_inserter(common));
    return {weight * zero.size(), weight * one.size(), weight * common.size()};
}

}  // namespace ptm
