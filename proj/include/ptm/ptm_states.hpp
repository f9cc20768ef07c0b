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

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ptm/hilbert.hpp"
#include "ptm/limits.hpp"

namespace ptm {

using Rational = boost::multiprecision::cpp_rational;

enum class Logical { zero, one };

char logical_name(Logical which);

/// Equal-weight superposition over E(N) (logical zero) or O(N) (logical one).
///
/// The exact form is kept alongside the floating-point state: every basis
/// index in `support` carries squared amplitude 2^-weight_exponent.
struct PtmLogical {
    int order = 1;
    std::size_t dim = 2;
    Logical which = Logical::zero;
    bool qudit = false;
    std::vector<std::uint64_t> support;
    int weight_exponent = 0;
    StateVector state;

    Rational squared_amplitude() const;
};

/// Sorted basis indices k < 2^order with t_k = 0 (zero) or t_k = 1 (one).
std::vector<std::uint64_t> logical_support(int order, Logical which);

PtmLogical ptm_state(int num_qubits, Logical which, const Limits &limits = default_limits());

/// Builds the order N+1 pair from the order N pair:
/// next0 = (|0>prev0 + |1>prev1)/sqrt2 and next1 = (|0>prev1 + |1>prev0)/sqrt2.
std::pair<PtmLogical, PtmLogical> ptm_compose(const PtmLogical &prev0, const PtmLogical &prev1,
                                              const Limits &limits = default_limits());

/// Qudit logical state over d = 2^N levels with amplitude sqrt(2/d).
PtmLogical ptm_qudit_state(std::size_t d, Logical which, const Limits &limits = default_limits());

/// alpha|0_TM> + beta|1_TM>; requires |alpha|^2 + |beta|^2 = 1 within 1e-12.
StateVector encode_logical(Complex alpha, Complex beta, int num_qubits, const Limits &limits = default_limits());

struct ExactOrthonormality {
    Rational norm_zero;
    Rational norm_one;
    Rational overlap;
};

/// Norms and overlap of the logical pair in exact rational arithmetic.
ExactOrthonormality exact_orthonormality(int num_qubits);

}  // namespace ptm
